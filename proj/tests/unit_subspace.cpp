#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "flagcodes/io.hpp"
#include "flagcodes/subspace.hpp"

using namespace flagcodes;

namespace {

std::shared_ptr<const FieldCtx> make(u64 q, int n, bool tableless = false) {
    auto params = io::make_field_params(q, n);
    if (tableless) {
        params.table_cap = 2;
        params.allow_tableless = true;
    }
    return FieldCtx::create(params);
}

// every element of a subspace, by brute-force span enumeration over F_q
std::set<u64> span_elements(const Subspace& s) {
    const FieldCtx& f = s.field();
    std::set<u64> out{0};
    for (u64 rep : s.basis_element_reps()) {
        std::set<u64> next;
        for (u64 base : out)
            for (u64 c : f.ground_scalars()) next.insert(f.add_rep(base, f.mul_rep(c, rep)));
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("spans and canonical forms") {
    auto f16 = make(2, 4);
    CHECK(Subspace::span(f16, {}).dim() == 0);

    FieldElem one = f16->one(), g = f16->gamma();
    Subspace u = Subspace::span(f16, {one, g, one + g});
    CHECK(u.dim() == 2);  // the third generator is dependent

    // spans are independent of generator order and presentation
    Subspace v = Subspace::span(f16, {one + g, g, one});
    CHECK(u == v);

    // the subfield F_4 built from generator powers matches the membership test
    Subspace f4 = Subspace::subfield(f16, 2);
    CHECK(f4.dim() == 2);
    auto elems = span_elements(f4);
    CHECK(elems.size() == 4);
    for (u64 rep : elems) CHECK(f16->in_subfield(f16->from_rep(rep), 2));
}

TEST_CASE("rejects foreign elements") {
    auto a = make(2, 4);
    auto b = make(2, 6);
    CHECK_THROWS_AS(static_cast<void>(Subspace::span(a, {b->one()})), std::invalid_argument);
}

TEST_CASE("sum and intersection") {
    auto f16 = make(2, 4);
    Subspace f4 = Subspace::subfield(f16, 2);
    Subspace z = Subspace::zero(f16);

    CHECK(f4.sum(f4) == f4);
    CHECK(f4.intersect(f4) == f4);
    CHECK(f4.intersect(z) == z);

    Subspace f4g = f4.scalar_mul(f16->gamma());
    Subspace s = f4.sum(f4g);
    CHECK(s.dim() == 4);
    CHECK(span_elements(s).size() == 16);  // brute-force span enumeration

    // dimension formula on every pair of subfield translates
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            Subspace a = f4.scalar_mul(f16->exp(i)), b = f4.scalar_mul(f16->exp(j));
            CHECK(a.dim() + b.dim() == a.sum(b).dim() + a.intersect(b).dim());
        }
    }
}

TEST_CASE("subspace distance") {
    auto f16 = make(2, 4);
    Subspace f4 = Subspace::subfield(f16, 2);
    CHECK(f4.distance(f4) == 0);

    Subspace f4g = f4.scalar_mul(f16->gamma());
    // brute force: the translate intersects F_4 only in zero
    std::set<u64> inter;
    auto left = span_elements(f4), right = span_elements(f4g);
    for (u64 x : left)
        if (right.count(x)) inter.insert(x);
    CHECK(inter == std::set<u64>{0});
    CHECK(f4.distance(f4g) == 4);

    // different dimensions are allowed and may give odd values
    auto f24 = make(2, 24, true);
    Subspace big = Subspace::subfield(f24, 12);
    auto reps = big.basis_element_reps();
    for (u64 k : {0, 1, 2}) reps.push_back(f24->mul_rep(f24->subfield_generator(3).pow(k).rep(), f24->gamma().rep()));
    Subspace bigger = Subspace::span_reps(f24, reps);
    CHECK(bigger.dim() == 15);
    CHECK(big.distance(bigger) == 3);
}

TEST_CASE("scalar multiplication") {
    auto f16 = make(2, 4);
    Subspace f4 = Subspace::subfield(f16, 2);
    CHECK(f4.scalar_mul(f16->one()) == f4);
    CHECK(f4.scalar_mul(f16->subfield_generator(2)) == f4);
    CHECK(f4.scalar_mul(f16->gamma()) != f4);
    CHECK(f4.scalar_mul(f16->gamma()).scalar_mul(f16->gamma().inverse()) == f4);
    CHECK_THROWS_AS(static_cast<void>(f4.scalar_mul(f16->zero())), std::invalid_argument);
}

TEST_CASE("stabilizer and best friend exponents") {
    auto f16 = make(2, 4);
    Subspace f4 = Subspace::subfield(f16, 2);
    CHECK(f4.stabilizer_exponent() == 2);
    CHECK(f4.best_friend_exponent() == 2);
    CHECK_THROWS_AS(static_cast<void>(Subspace::zero(f16).stabilizer_exponent()), std::invalid_argument);

    auto f256 = make(2, 8);
    CHECK(Subspace::subfield(f256, 4).best_friend_exponent() == 4);

    // any 5-dimensional subspace of F_{2^16} has the prime field as best friend
    auto f64k = make(2, 16);
    std::vector<u64> reps;
    for (u64 k : {0, 1, 2, 3, 7}) reps.push_back(f64k->exp(k).rep());
    Subspace u5 = Subspace::span_reps(f64k, reps);
    REQUIRE(u5.dim() == 5);
    CHECK(u5.best_friend_exponent() == 1);

    // the dimension-15 subspace with best friend F_8 on F_{2^24}
    auto f24 = make(2, 24, true);
    auto base = Subspace::subfield(f24, 12).basis_element_reps();
    for (u64 k : {0, 1, 2}) base.push_back(f24->mul_rep(f24->subfield_generator(3).pow(k).rep(), f24->gamma().rep()));
    Subspace u = Subspace::span_reps(f24, base);
    CHECK(u.dim() == 15);
    CHECK(u.best_friend_exponent() == 3);

    // best friend divides gcd(dim, n), and 2m divides translate distances
    auto f64 = make(2, 6);
    for (u64 seed : {3, 9, 27, 40}) {
        Subspace w = Subspace::span_reps(f64, {f64->exp(seed).rep(), f64->exp(seed * 2 + 1).rep()});
        int m = w.best_friend_exponent();
        CHECK(std::gcd(w.dim(), 6) % m == 0);
        for (u64 i = 1; i < 63; ++i) CHECK(w.distance(w.scalar_mul(f64->exp(i))) % (2 * m) == 0);
    }
}

TEST_CASE("orbit enumeration and summary") {
    auto f16 = make(2, 4);
    Subspace f4 = Subspace::subfield(f16, 2);
    auto orbit = f4.orbit_enumerate();
    CHECK(orbit.size() == 5);
    for (const auto& s : orbit) CHECK(s.dim() == 2);

    auto summary = f4.orbit_summary();
    CHECK(summary.stabilizer_exponent == 2);
    CHECK(summary.cardinality == 5);
    REQUIRE(summary.min_distance.has_value());
    CHECK(*summary.min_distance == 4);

    // all-pairs minimum agrees with the transversal
    int brute = -1;
    for (size_t i = 0; i < orbit.size(); ++i)
        for (size_t j = i + 1; j < orbit.size(); ++j) {
            int d = orbit[i].distance(orbit[j]);
            if (brute < 0 || d < brute) brute = d;
        }
    CHECK(brute == *summary.min_distance);

    // Galois case: distance divisible by 2m
    auto f256 = make(2, 8);
    auto s2 = Subspace::subfield(f256, 2).orbit_summary();
    CHECK(s2.cardinality == 85);
    REQUIRE(s2.min_distance.has_value());
    CHECK(*s2.min_distance % 4 == 0);

    // enumeration cap
    CHECK_THROWS_AS(static_cast<void>(Subspace::subfield(f256, 1).orbit_enumerate(10)), BudgetExceeded);

    // scan cap leaves the summary without a distance
    auto capped = Subspace::subfield(f256, 1).orbit_summary({4, 1});
    CHECK(capped.cardinality == 255);
    CHECK_FALSE(capped.min_distance.has_value());
}

TEST_CASE("transversal scan is independent of the job count") {
    auto f256 = make(2, 8);
    Subspace u = Subspace::span_reps(f256, {1, f256->exp(1).rep(), f256->exp(9).rep()});
    auto seq = u.orbit_summary({u64(1) << 20, 1});
    auto par = u.orbit_summary({u64(1) << 20, 4});
    REQUIRE(seq.min_distance.has_value());
    CHECK(seq.min_distance == par.min_distance);
    CHECK(seq.witness_exponent == par.witness_exponent);
}
