#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagcodes/io.hpp"
#include "flagcodes/oracle.hpp"

using namespace flagcodes;
using oracle::cpp_int;

namespace {

std::shared_ptr<const FieldCtx> make(u64 q, int n) { return FieldCtx::create(io::make_field_params(q, n)); }

}  // namespace

TEST_CASE("gaussian binomials") {
    for (int n = 0; n <= 8; ++n) CHECK(oracle::gaussian_binomial(n, 0, 2) == 1);
    CHECK(oracle::gaussian_binomial(4, 2, 2) == 35);
    CHECK(oracle::gaussian_binomial(6, 3, 2) == 1395);
    CHECK(oracle::gaussian_binomial(4, 1, 3) == 40);
    // symmetry in k
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(oracle::gaussian_binomial(n, k, 2) == oracle::gaussian_binomial(n, n - k, 2));
    // large values stay exact
    CHECK(oracle::gaussian_binomial(26, 13, 2) > cpp_int(1) << 168);
    CHECK_THROWS_AS(static_cast<void>(oracle::gaussian_binomial(3, 4, 2)), std::invalid_argument);
}

TEST_CASE("subspace enumeration") {
    auto f16 = make(2, 4);
    CHECK(oracle::enumerate_subspaces(f16, 0).size() == 1);
    CHECK(oracle::enumerate_subspaces(f16, 1).size() == 15);
    CHECK(oracle::enumerate_subspaces(f16, 2).size() == 35);
    CHECK(oracle::enumerate_subspaces(f16, 4).size() == 1);

    auto f64 = make(2, 6);
    CHECK(oracle::enumerate_subspaces(f64, 3).size() == 1395);
    CHECK_THROWS_AS(static_cast<void>(oracle::enumerate_subspaces(f64, 3, {100, 100, 100})), BudgetExceeded);

    auto f9 = make(3, 2);
    CHECK(oracle::enumerate_subspaces(f9, 1).size() == 4);
}

TEST_CASE("brute-force best friends") {
    auto f64 = make(2, 6);
    CHECK(oracle::best_friend_bruteforce(Subspace::subfield(f64, 3)) == 3);
    CHECK(oracle::best_friend_bruteforce(Subspace::subfield(f64, 2)) == 2);
    // full agreement with the fast path at n = 4
    auto f16 = make(2, 4);
    for (int k = 1; k < 4; ++k)
        for (const auto& u : oracle::enumerate_subspaces(f16, k))
            CHECK(oracle::best_friend_bruteforce(u) == u.best_friend_exponent());
}

TEST_CASE("all-pairs orbit distance") {
    auto f16 = make(2, 4);
    Flag f4 = Flag::make({Subspace::subfield(f16, 2)});
    CHECK(oracle::orbit_min_distance_bruteforce(f4) == 4);
    auto summary = f4.orbit_summary();
    CHECK(*summary.min_distance == oracle::orbit_min_distance_bruteforce(f4));

    auto f256 = make(2, 8);
    Flag galois = Flag::make({Subspace::subfield(f256, 2), Subspace::subfield(f256, 4)});
    int brute = oracle::orbit_min_distance_bruteforce(galois);
    CHECK(brute == *galois.orbit_summary().min_distance);
    CHECK(brute % 4 == 0);
}

TEST_CASE("distance vector realization search") {
    auto f64 = make(2, 6);
    // the zero vector is realized by a flag and itself
    auto zero = oracle::dvec_realization_search(f64, {2, 4}, {0, 0});
    CHECK(zero.exhaustive);
    CHECK(zero.found);

    auto ok = oracle::dvec_realization_search(f64, {2, 4}, {4, 0});
    CHECK(ok.exhaustive);
    CHECK(ok.found);
    REQUIRE(ok.pair.has_value());
    CHECK(ok.pair->first.distance_vector(ok.pair->second) == std::vector<int>{4, 0});

    // |6 - 2| > 2(3 - 2): infeasible, and the exhaustive search certifies it
    auto none = oracle::dvec_realization_search(f64, {2, 3}, {2, 6});
    CHECK(none.exhaustive);
    CHECK_FALSE(none.found);

    // a tiny budget downgrades to randomized mode
    auto sampled = oracle::dvec_realization_search(f64, {2, 4}, {4, 4}, {5000, 50, 2048}, 7);
    CHECK_FALSE(sampled.exhaustive);
    if (sampled.found) CHECK(sampled.pair->first.distance_vector(sampled.pair->second) == std::vector<int>{4, 4});
}

TEST_CASE("exhaustive realizability search") {
    auto f64 = make(2, 6);
    auto classified = oracle::classify_subspaces_bruteforce(f64);

    auto no = oracle::realizability_bruteforce({2, 3}, classified);
    CHECK_FALSE(no.found);

    auto yes = oracle::realizability_bruteforce({2, 2}, classified);
    CHECK(yes.found);
    REQUIRE(yes.witness.has_value());
    CHECK(yes.witness->best_friend_vector() == std::vector<int>{2, 2});

    auto ones = oracle::realizability_bruteforce({1, 1}, classified);
    CHECK(ones.found);

    auto triple = oracle::realizability_bruteforce({3, 3}, classified);
    CHECK_FALSE(triple.found);
}
