#pragma once

#include <string>
#include <vector>

namespace flagcodes::bounds {

// The bound layer is pure integer arithmetic: type vectors (t_1 < ... < t_r),
// best friend vectors (m_1, ..., m_r) and distance vectors (d_1, ..., d_r).
// Nothing here depends on q.

using IntVec = std::vector<int>;

bool valid_type(const IntVec& t, int n);
void require_valid_type(const IntVec& t, int n);

/// Maximum flag distance D for a type on an n-dimensional ambient space:
/// twice the sum of min(t_i, n - t_i).
int max_flag_distance(const IntVec& t, int n);

/// Maximum flag distance over pairs whose distance vector vanishes at the
/// given (1-based) positions.
int max_distance_with_zeros(const IntVec& t, int n, const IntVec& zeros);

/// Whether d occurs as the componentwise subspace-distance vector of some
/// pair of flags of this type: components even, within the per-dimension
/// caps, and with adjacent jumps bounded by twice the dimension gaps.
bool dvec_feasible(const IntVec& t, int n, const IntVec& d);

/// max(2 min_i m_i, 2 m j) with m = gcd(bfv) and j = #{i : m_i = m}.
int lower_bound_min_distance(const IntVec& bfv);

struct UpperBound {
    int value = 0;
    IntVec zero_set;  // empty when no admissible zero set exists (value = D)
};

/// Minimum of max_distance_with_zeros over all admissible zero sets: subsets
/// of positions with entries different from gcd(bfv) whose entries can be
/// ordered into a divisibility chain. Returns D when no such set exists.
UpperBound upper_bound_min_distance(const IntVec& bfv, const IntVec& t, int n);

struct Violation {
    std::string rule;  // "entry-divides-type" | "gap" | "prefix-lcm" | "pairwise-lcm" | "total-lcm"
    std::string detail;
};

/// Necessary conditions linking a type vector and a best friend vector;
/// returns every violated condition (empty means compatible).
std::vector<Violation> type_constraints_check(const IntVec& t, const IntVec& bfv, int n);

/// Smallest admissible type vector for the given best friend vector, chosen
/// coordinate by coordinate; the last dimension may reach or exceed n, in
/// which case no admissible type exists on F_{q^n}.
IntVec minimal_admissible_type(const IntVec& bfv);

struct Certificate {
    IntVec zero_set;
    int d_value = 0;
};

struct BoundsReport {
    IntVec type;
    IntVec bfv;
    int n = 0;
    int m = 0;  // gcd of bfv
    int j = 0;  // multiplicity of m in bfv
    int lower_bound = 0;
    int upper_bound = 0;
    int baseline_lower = 0;  // 2m
    int baseline_upper = 0;  // D
    IntVec upper_zero_set;
    std::vector<Certificate> certificates;
    std::vector<Violation> violations;
};

BoundsReport bounds_report(const IntVec& bfv, const IntVec& t, int n);

}  // namespace flagcodes::bounds
