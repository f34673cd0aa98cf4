#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "flagcodes/bounds.hpp"
#include "flagcodes/construct.hpp"
#include "flagcodes/io.hpp"

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

// F_4 + F_4 * beta with beta in F_{2^8} \ F_{2^4}, inside F_{2^16}
Subspace mixed_second_subspace(const std::shared_ptr<const FieldCtx>& ctx) {
    FieldElem beta = ctx->subfield_generator(8);
    REQUIRE_FALSE(ctx->in_subfield(beta, 4));
    auto reps = Subspace::subfield(ctx, 2).basis_element_reps();
    for (u64 rep : Subspace::subfield(ctx, 2).basis_element_reps()) reps.push_back(ctx->mul_rep(rep, beta.rep()));
    return Subspace::span_reps(ctx, reps);
}

}  // namespace

TEST_CASE("flag construction and validation") {
    auto f16 = make(2, 16);
    Flag galois = Flag::make({Subspace::subfield(f16, 2), Subspace::subfield(f16, 4), Subspace::subfield(f16, 8)});
    CHECK(galois.type() == std::vector<int>{2, 4, 8});

    Subspace f4 = Subspace::subfield(f16, 2);
    CHECK_THROWS_AS(static_cast<void>(Flag::make({f4, f4})), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(Flag::make({})), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(Flag::make({Subspace::zero(f16)})), std::invalid_argument);
    // equal dimension but different subspaces: not nested
    CHECK_THROWS_AS(static_cast<void>(Flag::make({f4, f4.scalar_mul(f16->gamma())})), std::invalid_argument);
    // increasing dimension without containment
    Subspace not_above = Subspace::span_reps(f16, {f16->gamma().rep(), f16->exp(2).rep(), f16->exp(7).rep()});
    if (!not_above.contains_subspace(f4))
        CHECK_THROWS_AS(static_cast<void>(Flag::make({f4, not_above})), std::invalid_argument);
    // the full space cannot terminate a flag
    std::vector<u64> all;
    for (int i = 0; i < 16; ++i) all.push_back(f16->exp(i).rep());
    Subspace everything = Subspace::span_reps(f16, all);
    if (everything.dim() == 16) CHECK_THROWS_AS(static_cast<void>(Flag::make({f4, everything})), std::invalid_argument);

    auto f24 = make(2, 24, true);
    auto base = Subspace::subfield(f24, 12).basis_element_reps();
    for (u64 k : {0, 1, 2}) base.push_back(f24->mul_rep(f24->subfield_generator(3).pow(k).rep(), f24->gamma().rep()));
    Flag paper = Flag::make({Subspace::subfield(f24, 4), Subspace::span_reps(f24, base)});
    CHECK(paper.type() == std::vector<int>{4, 15});
}

TEST_CASE("flag distance and distance vectors") {
    auto f16 = make(2, 16);
    Flag galois = Flag::make({Subspace::subfield(f16, 2), Subspace::subfield(f16, 4), Subspace::subfield(f16, 8)});
    CHECK(galois.distance(galois) == 0);
    CHECK(galois.distance_vector(galois) == std::vector<int>{0, 0, 0});

    Flag translate = galois.scalar_mul(f16->gamma());
    int d = galois.distance(translate);
    CHECK(d % 2 == 0);
    CHECK(d >= 4);

    auto dv = galois.distance_vector(translate);
    int sum = 0;
    for (int c : dv) sum += c;
    CHECK(sum == d);
    CHECK(bounds::dvec_feasible(galois.type(), 16, dv));

    Flag other = Flag::make({Subspace::subfield(f16, 2), mixed_second_subspace(f16), Subspace::subfield(f16, 8)});
    CHECK_THROWS_AS(static_cast<void>(galois.distance(Flag::make({Subspace::subfield(f16, 2)}))),
                    std::invalid_argument);
    CHECK(galois.distance(other) == other.distance(galois));
}

TEST_CASE("best friend vectors from the worked examples") {
    auto f16 = make(2, 16);
    Flag galois = Flag::make({Subspace::subfield(f16, 2), Subspace::subfield(f16, 4), Subspace::subfield(f16, 8)});
    CHECK(galois.best_friend_vector() == std::vector<int>{2, 4, 8});
    CHECK(galois.best_friend_exponent() == 2);

    Flag modified = Flag::make({Subspace::subfield(f16, 2), mixed_second_subspace(f16), Subspace::subfield(f16, 8)});
    CHECK(modified.best_friend_vector() == std::vector<int>{2, 2, 8});
    CHECK(modified.best_friend_exponent() == 2);

    auto f24 = make(2, 24, true);
    auto base = Subspace::subfield(f24, 12).basis_element_reps();
    for (u64 k : {0, 1, 2}) base.push_back(f24->mul_rep(f24->subfield_generator(3).pow(k).rep(), f24->gamma().rep()));
    Flag paper = Flag::make({Subspace::subfield(f24, 4), Subspace::span_reps(f24, base)});
    CHECK(paper.best_friend_vector() == std::vector<int>{4, 3});
    CHECK(paper.best_friend_exponent() == 1);

    // a dimension not dividing n forces the prime field in that slot
    auto f2_16 = make(2, 16);
    std::vector<u64> five;
    for (u64 k : {0, 1, 2, 3, 7}) five.push_back(f2_16->exp(k).rep());
    Subspace mid = Subspace::span_reps(f2_16, five);
    REQUIRE(mid.dim() == 5);
    if (mid.contains_subspace(Subspace::subfield(f2_16, 2))) {
        Flag seq = Flag::make({Subspace::subfield(f2_16, 2), mid, Subspace::subfield(f2_16, 8).sum(mid)});
        CHECK(seq.best_friend_vector()[1] == 1);
    }
}

TEST_CASE("gcd of the best friend vector is the flag stabilizer") {
    auto f16 = make(2, 16);
    Flag galois = Flag::make({Subspace::subfield(f16, 2), Subspace::subfield(f16, 4), Subspace::subfield(f16, 8)});
    CHECK(galois.stabilizer_exponent() == 2);
    Flag modified = Flag::make({Subspace::subfield(f16, 2), mixed_second_subspace(f16), Subspace::subfield(f16, 8)});
    CHECK(modified.stabilizer_exponent() == modified.best_friend_exponent());
}

TEST_CASE("normalization brings 1 into the first subspace") {
    auto f16 = make(2, 16);
    Flag galois = Flag::make({Subspace::subfield(f16, 2), Subspace::subfield(f16, 4), Subspace::subfield(f16, 8)});
    CHECK(galois.normalize_contains_one() == galois);

    Flag shifted = galois.scalar_mul(f16->gamma());
    Flag normal = shifted.normalize_contains_one();
    CHECK(normal.subspace(0).contains(f16->one()));
    CHECK(normal.type() == shifted.type());
    CHECK(normal.best_friend_vector() == shifted.best_friend_vector());

    // each subspace of a normalized flag contains the prefix-lcm subfield
    Flag modified = Flag::make({Subspace::subfield(f16, 2), mixed_second_subspace(f16), Subspace::subfield(f16, 8)});
    Flag norm2 = modified.scalar_mul(f16->exp(333)).normalize_contains_one();
    auto bfv = norm2.best_friend_vector();
    long long l = 1;
    for (int i = 0; i < norm2.length(); ++i) {
        l = std::lcm<long long>(l, bfv[i]);
        CHECK(norm2.subspace(i).contains_subspace(Subspace::subfield(f16, static_cast<int>(l))));
    }
}

TEST_CASE("orbit summary of the type (2,4,8) flags") {
    auto f16 = make(2, 16);
    Flag galois = Flag::make({Subspace::subfield(f16, 2), Subspace::subfield(f16, 4), Subspace::subfield(f16, 8)});
    auto s = galois.orbit_summary();
    CHECK(s.cardinality == 21845);
    CHECK(s.projected_cardinalities == std::vector<u64>{21845, 4369, 257});
    REQUIRE(s.min_distance.has_value());
    CHECK(*s.min_distance == 4);
    CHECK(s.witness_distance_vector.size() == 3);
    int sum = 0;
    for (int c : s.witness_distance_vector) sum += c;
    CHECK(sum == 4);

    Flag modified = Flag::make({Subspace::subfield(f16, 2), mixed_second_subspace(f16), Subspace::subfield(f16, 8)});
    auto s2 = modified.orbit_summary();
    CHECK(s2.bfv == std::vector<int>{2, 2, 8});
    CHECK(s2.cardinality == 21845);
    REQUIRE(s2.min_distance.has_value());
    CHECK(*s2.min_distance >= 8);
    CHECK(*s2.min_distance % 4 == 0);

    // the n = 8 analogue cross-checks the cardinality formula by enumeration
    auto f256 = make(2, 8);
    Flag small = Flag::make({Subspace::subfield(f256, 2), Subspace::subfield(f256, 4)});
    auto s3 = small.orbit_summary();
    CHECK(s3.cardinality == 85);
    std::set<Flag> orbit;
    Flag cur = small;
    for (u64 i = 0; i < f256->order(); ++i) {
        orbit.insert(cur);
        cur = cur.scalar_mul(f256->gamma());
    }
    CHECK(orbit.size() == 85);

    // scan caps leave the distance unset
    auto capped = galois.orbit_summary({100, 1});
    CHECK_FALSE(capped.min_distance.has_value());
}

TEST_CASE("flag transversal scan is independent of the job count") {
    auto f256 = make(2, 8);
    Flag small = Flag::make({Subspace::subfield(f256, 2), Subspace::subfield(f256, 4)});
    auto a = small.orbit_summary({u64(1) << 20, 1});
    auto b = small.orbit_summary({u64(1) << 20, 3});
    CHECK(a.min_distance == b.min_distance);
    CHECK(a.witness_exponent == b.witness_exponent);
    CHECK(a.witness_distance_vector == b.witness_distance_vector);
}

TEST_CASE("optimum distance verdicts") {
    auto f16 = make(2, 16);
    Flag galois = Flag::make({Subspace::subfield(f16, 2), Subspace::subfield(f16, 4), Subspace::subfield(f16, 8)});
    auto s = galois.orbit_summary();
    auto verdict = check_optimum_distance(galois, s);
    CHECK_FALSE(verdict.is_optimum);  // 4 is far below the maximum 28
    CHECK(verdict.is_optimum == (verdict.projected_distances_maximal && verdict.cardinalities_all_equal));

    // a single subfield subspace generates a spread-like optimum code
    auto f64 = make(2, 6);
    Flag line = Flag::make({Subspace::subfield(f64, 3)});
    auto ls = line.orbit_summary();
    CHECK(ls.cardinality == 9);
    REQUIRE(ls.min_distance.has_value());
    auto lv = check_optimum_distance(line, ls);
    CHECK(*ls.min_distance == bounds::max_flag_distance({3}, 6));
    CHECK(lv.is_optimum);
    CHECK(lv.is_optimum == (lv.projected_distances_maximal && lv.cardinalities_all_equal));
}
