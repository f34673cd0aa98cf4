#pragma once

#include "flagcodes/subspace.hpp"

namespace flagcodes {

struct FlagOrbitSummary {
    std::vector<int> type;
    std::vector<int> bfv;
    int best_friend_exponent = 1;  // gcd of the best friend vector
    u64 cardinality = 0;
    std::vector<u64> projected_cardinalities;
    std::optional<int> min_distance;
    std::optional<u64> witness_exponent;
    std::vector<int> witness_distance_vector;
};

struct OptimumDistanceVerdict {
    bool is_optimum = false;
    bool projected_distances_maximal = false;
    bool cardinalities_all_equal = false;
    std::vector<int> projected_min_distances;
};

/// Strictly nested sequence of proper nonzero subspaces of F_{q^n}.
class Flag {
public:
    Flag() = default;
    static Flag make(std::vector<Subspace> subspaces);

    bool valid() const { return !subspaces_.empty(); }
    const std::shared_ptr<const FieldCtx>& ctx() const { return subspaces_.front().ctx(); }
    const FieldCtx& field() const { return *ctx(); }
    const std::vector<Subspace>& subspaces() const { return subspaces_; }
    const Subspace& subspace(int i) const { return subspaces_.at(i); }
    int length() const { return static_cast<int>(subspaces_.size()); }
    const std::vector<int>& type() const { return type_; }

    Flag scalar_mul(const FieldElem& alpha) const;

    std::vector<int> best_friend_vector() const;
    /// gcd of the best friend vector; the exponent of the flag's best friend
    int best_friend_exponent() const;
    /// largest m | n whose subfield group stabilizes the flag, computed
    /// directly from scalar actions (agrees with the gcd)
    int stabilizer_exponent() const;

    int distance(const Flag& other) const;
    std::vector<int> distance_vector(const Flag& other) const;

    /// translate by the inverse of an element of F_1 so that 1 lies in the
    /// first subspace; the orbit, type and best friend vector are unchanged
    Flag normalize_contains_one() const;

    FlagOrbitSummary orbit_summary(const ScanOptions& opts = {}) const;

    bool operator==(const Flag& o) const { return subspaces_ == o.subspaces_; }
    bool operator!=(const Flag& o) const { return !(*this == o); }
    bool operator<(const Flag& o) const { return subspaces_ < o.subspaces_; }

private:
    std::vector<Subspace> subspaces_;
    std::vector<int> type_;
};

/// Optimum-distance test: the scanned minimum equals the maximum flag
/// distance, with the two projected-code conditions reported alongside.
OptimumDistanceVerdict check_optimum_distance(const Flag& flag, const FlagOrbitSummary& summary,
                                              const ScanOptions& opts = {});

}  // namespace flagcodes
