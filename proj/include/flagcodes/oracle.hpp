#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <set>

#include "flagcodes/flag.hpp"

namespace flagcodes::oracle {

using boost::multiprecision::cpp_int;

struct EnumBudget {
    u64 max_subspaces = 5000;        // per-Grassmannian enumeration cap
    u64 max_flag_pairs = u64(1) << 21;
    u64 max_orbit = 2048;
};

/// Number of k-dimensional subspaces of an n-dimensional space over F_q,
/// as an exact integer of arbitrary size.
cpp_int gaussian_binomial(int n, int k, u64 q);

/// All k-dimensional subspaces, generated directly in canonical echelon form
/// by pivot pattern, so the count matches the Gaussian binomial by
/// construction.
std::vector<Subspace> enumerate_subspaces(const std::shared_ptr<const FieldCtx>& ctx, int k,
                                          const EnumBudget& budget = {});

/// All flags of the given type (nested chains), enumerated exhaustively.
std::vector<Flag> enumerate_flags(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<int>& type,
                                  const EnumBudget& budget = {});

/// Largest m | n whose full subfield scan fixes U: every beta in F_{q^m}^*
/// is tested, with no structural shortcut.
int best_friend_bruteforce(const Subspace& u, const EnumBudget& budget = {});

/// All-pairs minimum over the materialized orbit (0 for a one-flag orbit).
int orbit_min_distance_bruteforce(const Flag& f, const EnumBudget& budget = {});

/// Every distance vector realized by a pair of flags of the given type.
/// One flag may be fixed: the dimensions entering the subspace distances are
/// invariant under the general linear group, which acts transitively on
/// flags of a fixed type, so the realized set does not depend on the choice.
std::set<std::vector<int>> achievable_distance_vectors(const std::shared_ptr<const FieldCtx>& ctx,
                                                       const std::vector<int>& type,
                                                       const EnumBudget& budget = {});

struct DvecSearchResult {
    bool exhaustive = false;
    bool found = false;
    std::optional<std::pair<Flag, Flag>> pair;
};

/// Search for a flag pair realizing the given distance vector: exhaustive
/// within budget (a negative answer is then a certificate), randomized with
/// the given seed otherwise.
DvecSearchResult dvec_realization_search(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<int>& type,
                                         const std::vector<int>& d, const EnumBudget& budget = {}, u64 seed = 1);

struct RealizabilitySearchResult {
    bool found = false;
    std::optional<Flag> witness;
};

/// Every proper nonzero subspace with its brute-force best friend, grouped
/// by dimension; computed once, reused across realizability queries.
struct ClassifiedSubspaces {
    std::shared_ptr<const FieldCtx> ctx;
    std::vector<std::vector<std::pair<Subspace, int>>> by_dim;
};

ClassifiedSubspaces classify_subspaces_bruteforce(const std::shared_ptr<const FieldCtx>& ctx,
                                                  const EnumBudget& budget = {});

/// Exhaustive search for a flag whose per-subspace brute-force best friends
/// match the given vector, over all types.
RealizabilitySearchResult realizability_bruteforce(const std::vector<int>& bfv,
                                                   const std::shared_ptr<const FieldCtx>& ctx,
                                                   const EnumBudget& budget = {});
RealizabilitySearchResult realizability_bruteforce(const std::vector<int>& bfv,
                                                   const ClassifiedSubspaces& classified);

}  // namespace flagcodes::oracle
