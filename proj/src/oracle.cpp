#include "flagcodes/oracle.hpp"

#include <algorithm>
#include <random>

namespace flagcodes::oracle {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

cpp_int gaussian_binomial(int n, int k, u64 q) {
    require(k >= 0 && k <= n, "gaussian binomial needs 0 <= k <= n");
    cpp_int num = 1, den = 1, qc = q;
    for (int i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(qc, n - i) - 1;
        den *= boost::multiprecision::pow(qc, k - i) - 1;
    }
    return num / den;
}

std::vector<Subspace> enumerate_subspaces(const std::shared_ptr<const FieldCtx>& ctx, int k,
                                          const EnumBudget& budget) {
    require(ctx != nullptr, "enumeration requires a field context");
    const int n = ctx->n();
    require(k >= 0 && k <= n, "dimension out of range");
    cpp_int count = gaussian_binomial(n, k, ctx->q());
    if (count > budget.max_subspaces) throw BudgetExceeded("subspace count exceeds the enumeration budget");

    std::vector<Subspace> out;
    out.reserve(static_cast<size_t>(count));
    if (k == 0) {
        out.push_back(Subspace::zero(ctx));
        return out;
    }
    const auto& scalars = ctx->ground_scalars();

    // iterate pivot-column patterns, then run an odometer over the free slots
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;
    auto next_pattern = [&]() {
        int i = k - 1;
        while (i >= 0 && pivots[i] == n - k + i) --i;
        if (i < 0) return false;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        return true;
    };
    do {
        std::vector<bool> is_pivot(n, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<std::pair<int, int>> free_slots;  // (row, col)
        for (int i = 0; i < k; ++i)
            for (int j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_slots.push_back({i, j});

        std::vector<int> odo(free_slots.size(), 0);
        std::vector<u64> rows(static_cast<size_t>(k) * n, 0);
        for (;;) {
            std::fill(rows.begin(), rows.end(), 0);
            for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i) * n + pivots[i]] = 1;
            for (size_t s = 0; s < free_slots.size(); ++s)
                rows[static_cast<size_t>(free_slots[s].first) * n + free_slots[s].second] = scalars[odo[s]];
            out.push_back(Subspace::from_coord_rows(ctx, rows));

            size_t pos = 0;
            while (pos < odo.size() && odo[pos] + 1 == static_cast<int>(scalars.size())) odo[pos++] = 0;
            if (pos == odo.size()) break;
            ++odo[pos];
        }
    } while (next_pattern());

    if (cpp_int(out.size()) != count) throw std::logic_error("subspace enumeration is out of step with the count");
    return out;
}

std::vector<Flag> enumerate_flags(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<int>& type,
                                  const EnumBudget& budget) {
    require(ctx != nullptr, "enumeration requires a field context");
    require(!type.empty(), "type must be nonempty");
    const int n = ctx->n();
    const u64 q = ctx->q();

    cpp_int total = gaussian_binomial(n, type[0], q);
    for (size_t i = 1; i < type.size(); ++i)
        total *= gaussian_binomial(n - type[i - 1], type[i] - type[i - 1], q);
    if (total > budget.max_flag_pairs) throw BudgetExceeded("flag count exceeds the enumeration budget");

    std::vector<std::vector<Subspace>> by_dim(type.size());
    for (size_t i = 0; i < type.size(); ++i) by_dim[i] = enumerate_subspaces(ctx, type[i], budget);

    std::vector<Flag> out;
    std::vector<Subspace> chain;
    auto dfs = [&](auto&& self, size_t level) -> void {
        if (level == type.size()) {
            out.push_back(Flag::make(chain));
            return;
        }
        for (const auto& s : by_dim[level]) {
            if (!chain.empty() && !s.contains_subspace(chain.back())) continue;
            chain.push_back(s);
            self(self, level + 1);
            chain.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

int best_friend_bruteforce(const Subspace& u, const EnumBudget& budget) {
    require(u.valid() && u.dim() > 0 && u.dim() < u.ambient_dim(), "best friend needs a nonzero proper subspace");
    const FieldCtx& f = u.field();
    const auto& degs = f.subfield_degrees();
    for (auto it = degs.rbegin(); it != degs.rend(); ++it) {
        int m = *it;
        if (m == f.n()) continue;
        u64 group = checked_pow_u64(f.q(), m) - 1;
        if (group > budget.max_subspaces) throw BudgetExceeded("subfield scan exceeds the budget");
        FieldElem delta = f.subfield_generator(m);
        FieldElem beta = f.one();
        bool all_fix = true;
        for (u64 j = 0; j < group && all_fix; ++j) {
            all_fix = u.scalar_mul(beta) == u;
            beta = beta * delta;
        }
        if (all_fix) return m;
    }
    return 1;
}

int orbit_min_distance_bruteforce(const Flag& f, const EnumBudget& budget) {
    const FieldCtx& F = f.field();
    std::set<Flag> orbit;
    Flag cur = f;
    const FieldElem gamma = F.gamma();
    for (u64 i = 0; i < F.order(); ++i) {
        orbit.insert(cur);
        if (orbit.size() > budget.max_orbit) throw BudgetExceeded("orbit size exceeds the budget");
        cur = cur.scalar_mul(gamma);
    }
    if (orbit.size() <= 1) return 0;
    int best = -1;
    for (auto it = orbit.begin(); it != orbit.end(); ++it) {
        auto jt = it;
        for (++jt; jt != orbit.end(); ++jt) {
            int d = it->distance(*jt);
            if (best < 0 || d < best) best = d;
        }
    }
    return best;
}

std::set<std::vector<int>> achievable_distance_vectors(const std::shared_ptr<const FieldCtx>& ctx,
                                                       const std::vector<int>& type, const EnumBudget& budget) {
    auto flags = enumerate_flags(ctx, type, budget);
    require(!flags.empty(), "no flags of this type");
    std::set<std::vector<int>> out;
    const Flag& base = flags.front();
    for (const auto& g : flags) out.insert(base.distance_vector(g));
    return out;
}

DvecSearchResult dvec_realization_search(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<int>& type,
                                         const std::vector<int>& d, const EnumBudget& budget, u64 seed) {
    require(d.size() == type.size(), "distance vector length must match the type length");
    DvecSearchResult res;
    try {
        auto flags = enumerate_flags(ctx, type, budget);
        res.exhaustive = true;
        const Flag& base = flags.front();
        for (const auto& g : flags) {
            if (base.distance_vector(g) == d) {
                res.found = true;
                res.pair = std::make_pair(base, g);
                return res;
            }
        }
        return res;
    } catch (const BudgetExceeded&) {
        res.exhaustive = false;
    }

    // randomized fallback: sample flags by extending random chains
    std::mt19937_64 rng(seed);
    const int n = ctx->n();
    auto random_flag = [&]() {
        std::vector<Subspace> subs;
        Subspace cur = Subspace::zero(ctx);
        for (int t : type) {
            while (cur.dim() < t) {
                FieldElem x = ctx->exp(rng() % ctx->order());
                if (!cur.contains(x)) {
                    auto reps = cur.basis_element_reps();
                    reps.push_back(x.rep());
                    cur = Subspace::span_reps(ctx, reps);
                }
            }
            subs.push_back(cur);
        }
        return Flag::make(std::move(subs));
    };
    (void)n;
    u64 tries = budget.max_flag_pairs / 4 + 16;
    for (u64 i = 0; i < tries; ++i) {
        Flag a = random_flag(), b = random_flag();
        if (a.distance_vector(b) == d) {
            res.found = true;
            res.pair = std::make_pair(a, b);
            return res;
        }
    }
    return res;
}

ClassifiedSubspaces classify_subspaces_bruteforce(const std::shared_ptr<const FieldCtx>& ctx,
                                                  const EnumBudget& budget) {
    require(ctx != nullptr, "classification requires a field context");
    ClassifiedSubspaces out;
    out.ctx = ctx;
    out.by_dim.resize(ctx->n());
    for (int k = 1; k < ctx->n(); ++k) {
        for (auto& s : enumerate_subspaces(ctx, k, budget)) {
            int bf = best_friend_bruteforce(s, budget);
            out.by_dim[k].push_back({std::move(s), bf});
        }
    }
    return out;
}

RealizabilitySearchResult realizability_bruteforce(const std::vector<int>& bfv,
                                                   const std::shared_ptr<const FieldCtx>& ctx,
                                                   const EnumBudget& budget) {
    return realizability_bruteforce(bfv, classify_subspaces_bruteforce(ctx, budget));
}

RealizabilitySearchResult realizability_bruteforce(const std::vector<int>& bfv,
                                                   const ClassifiedSubspaces& classified) {
    require(classified.ctx != nullptr, "search requires a field context");
    require(!bfv.empty(), "best friend vector must be nonempty");
    const int n = classified.ctx->n();
    const int r = static_cast<int>(bfv.size());
    const auto& by_dim = classified.by_dim;

    RealizabilitySearchResult res;
    std::vector<Subspace> chain;
    auto dfs = [&](auto&& self, int pos, int min_dim) -> bool {
        if (pos == r) {
            res.found = true;
            res.witness = Flag::make(chain);
            return true;
        }
        for (int k = min_dim; k <= n - 1 - (r - 1 - pos); ++k) {
            for (const auto& [s, bf] : by_dim[k]) {
                if (bf != bfv[pos]) continue;
                if (!chain.empty() && !s.contains_subspace(chain.back())) continue;
                chain.push_back(s);
                if (self(self, pos + 1, k + 1)) return true;
                chain.pop_back();
            }
        }
        return false;
    };
    dfs(dfs, 0, 1);
    return res;
}

}  // namespace flagcodes::oracle
