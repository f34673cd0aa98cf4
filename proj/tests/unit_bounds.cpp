#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagcodes/bounds.hpp"
#include "flagcodes/numbers.hpp"

using namespace flagcodes;
using bounds::IntVec;

TEST_CASE("maximum flag distance") {
    CHECK(bounds::max_flag_distance({2, 4, 5, 12, 15, 18, 21}, 24) == 82);
    CHECK(bounds::max_flag_distance({2, 4, 8}, 16) == 28);
    // single-dimension types reduce to min(2k, 2(n-k))
    for (int n = 3; n <= 20; ++n)
        for (int k = 1; k < n; ++k) CHECK(bounds::max_flag_distance({k}, n) == std::min(2 * k, 2 * (n - k)));
    CHECK_THROWS_AS(bounds::max_flag_distance({3, 3}, 8), std::invalid_argument);
    CHECK_THROWS_AS(bounds::max_flag_distance({1, 2, 8}, 8), std::invalid_argument);
}

TEST_CASE("maximum distance scales with a common divisor of the type") {
    // for type (m s_1, ..., m s_r) on an (m s)-dimensional space the maximum
    // is 2m (sum of s_i below s/2 plus sum of s - s_i above)
    for (int m = 1; m <= 4; ++m) {
        for (int s = 3; s <= 9; ++s) {
            for (int s1 = 1; s1 < s; ++s1) {
                for (int s2 = s1 + 1; s2 < s; ++s2) {
                    IntVec t{m * s1, m * s2};
                    int folded = 0;
                    for (int si : {s1, s2}) folded += si <= s / 2 ? si : s - si;
                    CHECK(bounds::max_flag_distance(t, m * s) == 2 * m * folded);
                }
            }
        }
    }
}

TEST_CASE("zero-constrained maxima match the worked sums") {
    IntVec t{2, 4, 5, 12, 15, 18, 21};
    CHECK(bounds::max_distance_with_zeros(t, 24, {5, 6, 7}) == 28);
    CHECK(bounds::max_distance_with_zeros(t, 24, {1, 2, 4}) == 26);
    CHECK(bounds::max_distance_with_zeros(t, 24, {4, 5, 6, 7}) == 22);

    IntVec t2{4, 5, 12, 15};
    CHECK(bounds::max_distance_with_zeros(t2, 24, {3}) == 24);
    CHECK(bounds::max_distance_with_zeros(t2, 24, {2}) == 34);

    CHECK(bounds::max_distance_with_zeros({2, 4, 8}, 16, {2, 3}) == 4);

    CHECK_THROWS_AS(bounds::max_distance_with_zeros(t, 24, {}), std::invalid_argument);
    CHECK_THROWS_AS(bounds::max_distance_with_zeros(t, 24, {8}), std::invalid_argument);
}

TEST_CASE("distance vector feasibility") {
    CHECK(bounds::dvec_feasible({2, 4}, 8, {0, 0}));
    CHECK(bounds::dvec_feasible({4, 5, 12, 15}, 24, {2, 0, 14, 18}));
    CHECK_FALSE(bounds::dvec_feasible({4, 5, 12, 15}, 24, {6, 0, 14, 18}));  // jump 6 over gap 1
    CHECK_FALSE(bounds::dvec_feasible({2, 4}, 8, {1, 2}));                   // odd component
    CHECK_FALSE(bounds::dvec_feasible({2, 4}, 8, {6, 4}));                   // above the cap
    CHECK_FALSE(bounds::dvec_feasible({2, 3}, 6, {2, 6}));                   // |6-2| > 2(3-2)
    CHECK_THROWS_AS(bounds::dvec_feasible({2, 4}, 8, {0}), std::invalid_argument);
}

TEST_CASE("lower bound from the best friend vector") {
    CHECK(bounds::lower_bound_min_distance({4, 12, 3}) == 6);
    CHECK(bounds::lower_bound_min_distance({2, 4, 1, 12, 3, 3, 3}) == 2);
    for (int m = 1; m <= 4; ++m)
        for (int r = 1; r <= 5; ++r) CHECK(bounds::lower_bound_min_distance(IntVec(r, m)) == 2 * m * r);
    CHECK(bounds::lower_bound_min_distance({2, 4, 8}) == 4);
    CHECK(bounds::lower_bound_min_distance({2, 2, 8}) == 8);
    CHECK_THROWS_AS(bounds::lower_bound_min_distance({0, 2}), std::invalid_argument);
}

TEST_CASE("upper bound picks the best admissible zero set") {
    auto ub = bounds::upper_bound_min_distance({2, 4, 1, 12, 3, 3, 3}, {2, 4, 5, 12, 15, 18, 21}, 24);
    CHECK(ub.value == 22);
    CHECK(ub.zero_set == IntVec{4, 5, 6, 7});

    auto galois = bounds::upper_bound_min_distance({2, 4, 8}, {2, 4, 8}, 16);
    CHECK(galois.value == 4);
    CHECK(galois.zero_set == IntVec{2, 3});

    // all entries equal the gcd: no admissible set, bound stays at D
    auto flat = bounds::upper_bound_min_distance({2, 2, 2}, {2, 4, 6}, 12);
    CHECK(flat.value == bounds::max_flag_distance({2, 4, 6}, 12));
    CHECK(flat.zero_set.empty());
}

TEST_CASE("type constraint violations") {
    CHECK_FALSE(bounds::type_constraints_check({4, 6}, {4, 3}, 24).empty());
    CHECK(bounds::type_constraints_check({4, 15}, {4, 3}, 24).empty());
    CHECK(bounds::type_constraints_check({4, 6}, {4, 2}, 8).empty());

    // the pairs ruled out alongside (4, 6) for best friend vector (4, 3) on n = 24
    for (IntVec t : {IntVec{8, 9}, IntVec{12, 15}, IntVec{16, 18}, IntVec{20, 21}})
        CHECK_FALSE(bounds::type_constraints_check(t, {4, 3}, 24).empty());
    // equality in the prefix-lcm bound needs t_i = m_i
    CHECK_FALSE(bounds::type_constraints_check({4, 12}, {4, 3}, 24).empty());
    // lcm reaching n rules everything out
    CHECK_FALSE(bounds::type_constraints_check({2, 3}, {2, 3}, 6).empty());
}

TEST_CASE("minimal admissible type") {
    CHECK(bounds::minimal_admissible_type({4, 3}) == IntVec{4, 15});
    CHECK(bounds::minimal_admissible_type({2, 4, 8}) == IntVec{2, 4, 8});
    CHECK(bounds::minimal_admissible_type(IntVec(3, 2)) == IntVec{2, 4, 6});
    // the minimal type passes the checker once n is large enough
    for (IntVec bfv : {IntVec{3, 2, 1}, IntVec{2, 4, 1, 12, 3, 3, 3}, IntVec{4, 3}, IntVec{1, 5, 2}}) {
        auto t = bounds::minimal_admissible_type(bfv);
        int n = 2 * (t.back() + static_cast<int>(lcm_of(bfv)));
        CHECK(bounds::type_constraints_check(t, bfv, n).empty());
    }
}

TEST_CASE("bounds report for the worked example") {
    auto rep = bounds::bounds_report({2, 4, 1, 12, 3, 3, 3}, {2, 4, 5, 12, 15, 18, 21}, 24);
    CHECK(rep.m == 1);
    CHECK(rep.j == 1);
    CHECK(rep.lower_bound == 2);
    CHECK(rep.upper_bound == 22);
    CHECK(rep.baseline_lower == 2);
    CHECK(rep.baseline_upper == 82);
    CHECK(rep.violations.empty());
    bool has_single_value_cert = false, has_chain_cert = false;
    for (const auto& c : rep.certificates) {
        if (c.zero_set == IntVec{5, 6, 7}) {
            CHECK(c.d_value == 28);
            has_single_value_cert = true;
        }
        if (c.zero_set == IntVec{1, 2, 4}) {
            CHECK(c.d_value == 26);
            has_chain_cert = true;
        }
    }
    CHECK(has_single_value_cert);
    CHECK(has_chain_cert);

    auto pinned = bounds::bounds_report({2, 4, 8}, {2, 4, 8}, 16);
    CHECK(pinned.lower_bound == 4);
    CHECK(pinned.upper_bound == 4);

    auto doubled = bounds::bounds_report({2, 2, 8}, {2, 4, 8}, 16);
    CHECK(doubled.lower_bound == 8);
}
