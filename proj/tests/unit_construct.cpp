#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagcodes/bounds.hpp"
#include "flagcodes/construct.hpp"
#include "flagcodes/io.hpp"

using namespace flagcodes;

namespace {

std::shared_ptr<const FieldCtx> make(u64 q, int n) {
    auto params = io::make_field_params(q, n);
    params.table_cap = u64(1) << 20;
    params.allow_tableless = true;
    return FieldCtx::create(params);
}

}  // namespace

TEST_CASE("galois flags") {
    auto f16 = make(2, 16);
    auto g = galois_flag(f16, {2, 4, 8});
    CHECK(g.flag.type() == std::vector<int>{2, 4, 8});
    CHECK(g.flag.best_friend_vector() == std::vector<int>{2, 4, 8});

    auto single = galois_flag(make(2, 6), {3});
    CHECK(single.flag.best_friend_vector() == std::vector<int>{3});

    CHECK_THROWS_AS(static_cast<void>(galois_flag(make(2, 6), {2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(galois_flag(f16, {2, 2, 4})), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(galois_flag(f16, {16})), std::invalid_argument);
}

TEST_CASE("length-2 realizability") {
    CHECK_FALSE(realizable_len2(4, 3, 12));
    CHECK(realizable_len2(4, 3, 24));
    CHECK(realizable_len2(4, 3, 36));
    CHECK_FALSE(realizable_len2(2, 2, 4));
    CHECK(realizable_len2(2, 2, 6));
    CHECK(realizable_len2(2, 4, 8));
    CHECK_FALSE(realizable_len2(2, 4, 10));
    CHECK_FALSE(realizable_len2(3, 3, 6));
    CHECK(realizable_len2(3, 3, 9));
}

TEST_CASE("length-2 constructions") {
    // non-nested entries: (4, 3) on F_{2^24} gives type (4, 15)
    auto f24 = make(2, 24);
    auto cf = construct_length2(f24, 4, 3);
    CHECK(cf.flag.type() == std::vector<int>{4, 15});
    CHECK(cf.flag.best_friend_vector() == std::vector<int>{4, 3});

    // equal entries: (2, 2) on F_{2^6} gives type (2, 4)
    auto f6 = make(2, 6);
    auto eq = construct_length2(f6, 2, 2);
    CHECK(eq.flag.type() == std::vector<int>{2, 4});
    CHECK(eq.flag.best_friend_vector() == std::vector<int>{2, 2});

    // nested entries give the Galois flag
    auto f8 = make(2, 8);
    auto nested = construct_length2(f8, 2, 4);
    CHECK(nested.flag.subspaces()[0] == Subspace::subfield(f8, 2));
    CHECK(nested.flag.subspaces()[1] == Subspace::subfield(f8, 4));
    CHECK(nested.flag.best_friend_vector() == std::vector<int>{2, 4});

    CHECK_THROWS_AS(static_cast<void>(construct_length2(make(2, 12), 4, 3)), std::invalid_argument);
}

TEST_CASE("construction plans") {
    auto p1 = construction_plan({3, 2, 1});
    CHECK(p1.k_r == 0);
    CHECK(p1.l == 6);
    CHECK(p1.s == 3);
    CHECK(p1.sufficient_n == 18);

    auto p2 = construction_plan({2, 4, 8, 1, 1});
    CHECK(p2.k == std::vector<int>{0, 1, 2, 2, 2});
    CHECK(p2.l == 8);
    CHECK(p2.s == 3);
    CHECK(p2.sufficient_n == 24);

    auto p3 = construction_plan({2, 4, 8});
    CHECK(p3.k_r == 2);
    CHECK(p3.s == 2);
    CHECK(p3.sufficient_n == 16);

    // k increments by at most one at each step
    for (auto bfv : std::vector<std::vector<int>>{{1, 2, 4, 2}, {5, 5, 1}, {2, 6, 3, 3}}) {
        auto p = construction_plan(bfv);
        for (size_t i = 1; i < p.k.size(); ++i) CHECK((p.k[i] == p.k[i - 1] || p.k[i] == p.k[i - 1] + 1));
        CHECK(p.s >= 2);
    }
}

TEST_CASE("general construction matches the layer-by-layer description") {
    auto f18 = make(2, 18);
    auto cf = construct_general(f18, {3, 2, 1});
    CHECK(cf.flag.best_friend_vector() == std::vector<int>{3, 2, 1});

    // F_1 = F_{2^3}; F_2 = F_{2^6} + F_{2^2} g; F_3 = F_{2^6} + F_{2^6} g + F_2 g^2
    CHECK(cf.flag.subspaces()[0] == Subspace::subfield(f18, 3));
    auto expect2 = Subspace::subfield(f18, 6).basis_element_reps();
    for (u64 rep : Subspace::subfield(f18, 2).basis_element_reps())
        expect2.push_back(f18->mul_rep(rep, f18->gamma().rep()));
    CHECK(cf.flag.subspaces()[1] == Subspace::span_reps(f18, expect2));
    auto expect3 = Subspace::subfield(f18, 6).basis_element_reps();
    for (u64 rep : Subspace::subfield(f18, 6).basis_element_reps())
        expect3.push_back(f18->mul_rep(rep, f18->gamma().rep()));
    expect3.push_back(f18->mul_rep(1, f18->exp(2).rep()));
    CHECK(cf.flag.subspaces()[2] == Subspace::span_reps(f18, expect3));

    // constant vectors stack translates of one subfield
    auto f12 = make(2, 12);
    auto cv = construct_general(f12, {3, 3, 3});
    CHECK(cv.flag.type() == std::vector<int>{3, 6, 9});
    CHECK(cv.flag.best_friend_vector() == std::vector<int>{3, 3, 3});
    for (int i = 0; i < 3; ++i) {
        std::vector<u64> expect;
        for (int a = 0; a <= i; ++a)
            for (u64 rep : Subspace::subfield(f12, 3).basis_element_reps())
                expect.push_back(f12->mul_rep(rep, f12->exp(a).rep()));
        CHECK(cv.flag.subspaces()[i] == Subspace::span_reps(f12, expect));
    }

    // strict divisor chains reduce to the Galois flag
    auto f16 = make(2, 16);
    auto chain = construct_general(f16, {2, 4, 8});
    CHECK(chain.flag.subspaces()[0] == Subspace::subfield(f16, 2));
    CHECK(chain.flag.subspaces()[1] == Subspace::subfield(f16, 4));
    CHECK(chain.flag.subspaces()[2] == Subspace::subfield(f16, 8));

    CHECK_THROWS_AS(static_cast<void>(construct_general(make(2, 12), {3, 2, 1})), std::invalid_argument);
}

TEST_CASE("the example flag of type (2,4,8,1,1) at n = 24") {
    auto f24 = make(2, 24);
    auto cf = construct_general(f24, {2, 4, 8, 1, 1});
    CHECK(cf.flag.type() == std::vector<int>{2, 4, 8, 9, 17});
    CHECK(cf.flag.best_friend_vector() == std::vector<int>{2, 4, 8, 1, 1});
}

TEST_CASE("realizability verdicts") {
    auto nr = realizability_verdict({2, 3}, 6);
    CHECK(nr.status == Realizability::NotRealizable);
    CHECK(nr.reason.find("lcm") != std::string::npos);

    CHECK(realizability_verdict({4, 3}, 12).status == Realizability::NotRealizable);
    CHECK(realizability_verdict({4, 3}, 24).status == Realizability::Realizable);
    CHECK(realizability_verdict({2, 2}, 4).status == Realizability::NotRealizable);
    CHECK(realizability_verdict({2, 2}, 6).status == Realizability::Realizable);
    CHECK(realizability_verdict({7, 2}, 24).status == Realizability::NotRealizable);  // 7 does not divide 24

    CHECK(realizability_verdict({2, 4, 8, 1, 1}, 24).status == Realizability::Realizable);
    CHECK(realizability_verdict({2, 4, 8, 1, 1}, 16).status == Realizability::Unknown);
    CHECK(realizability_verdict({3, 2, 1}, 12).status == Realizability::Unknown);
    CHECK(realizability_verdict({3, 2, 1}, 18).status == Realizability::Realizable);

    // a maximal subfield entry forces everything else to divide it
    CHECK(realizability_verdict({12, 8}, 24).status == Realizability::NotRealizable);
    CHECK(realizability_verdict({8, 12, 2}, 24).status == Realizability::NotRealizable);

    // witnesses round-trip when a context is supplied
    auto f24 = make(2, 24);
    auto with_witness = realizability_verdict({2, 4, 8, 1, 1}, 24, f24);
    REQUIRE(with_witness.witness.has_value());
    CHECK(with_witness.witness->flag.best_friend_vector() == std::vector<int>{2, 4, 8, 1, 1});

    auto single = realizability_verdict({4}, 8, make(2, 8));
    CHECK(single.status == Realizability::Realizable);
    REQUIRE(single.witness.has_value());
    CHECK(single.witness->flag.best_friend_vector() == std::vector<int>{4});
    CHECK(realizability_verdict({8}, 8).status == Realizability::NotRealizable);
}

TEST_CASE("verdicts never contradict the constant-vector and chain laws") {
    for (int m = 1; m <= 3; ++m) {
        for (int r = 2; r <= 3; ++r) {
            for (int n = 2; n <= 12; ++n) {
                auto v = realizability_verdict(std::vector<int>(r, m), n);
                bool law = n % m == 0 && n / m >= r + 1;
                CHECK(v.status == (law ? Realizability::Realizable : Realizability::NotRealizable));
            }
        }
    }
    for (auto bfv : std::vector<std::vector<int>>{{1, 2}, {2, 4}, {1, 2, 4}, {3, 6}}) {
        for (int n = 2; n <= 16; ++n) {
            auto v = realizability_verdict(bfv, n);
            bool law = n % bfv.back() == 0 && n / bfv.back() >= 2;
            CHECK(v.status == (law ? Realizability::Realizable : Realizability::NotRealizable));
        }
    }
}
