#include "flagcodes/flag.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "flagcodes/bounds.hpp"

namespace flagcodes {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Flag Flag::make(std::vector<Subspace> subspaces) {
    require(!subspaces.empty(), "a flag needs at least one subspace");
    const auto& ctx = subspaces.front().ctx();
    require(ctx != nullptr, "flag subspaces need a field context");
    for (const auto& s : subspaces) require(s.ctx() == ctx, "flag subspaces from different field contexts");
    require(subspaces.front().dim() > 0, "the first subspace of a flag must be nonzero");
    require(subspaces.back().dim() < ctx->n(), "the last subspace of a flag must be proper");
    for (size_t i = 0; i + 1 < subspaces.size(); ++i) {
        require(subspaces[i].dim() < subspaces[i + 1].dim(), "flag subspaces must be strictly nested");
        require(subspaces[i + 1].contains_subspace(subspaces[i]), "flag subspaces must be nested");
    }
    Flag f;
    f.subspaces_ = std::move(subspaces);
    f.type_.reserve(f.subspaces_.size());
    for (const auto& s : f.subspaces_) f.type_.push_back(s.dim());
    return f;
}

Flag Flag::scalar_mul(const FieldElem& alpha) const {
    std::vector<Subspace> subs;
    subs.reserve(subspaces_.size());
    for (const auto& s : subspaces_) subs.push_back(s.scalar_mul(alpha));
    return make(std::move(subs));
}

std::vector<int> Flag::best_friend_vector() const {
    std::vector<int> bfv;
    bfv.reserve(subspaces_.size());
    for (const auto& s : subspaces_) bfv.push_back(s.best_friend_exponent());
    return bfv;
}

int Flag::best_friend_exponent() const { return gcd_of(best_friend_vector()); }

int Flag::stabilizer_exponent() const {
    const auto& degs = field().subfield_degrees();
    for (auto it = degs.rbegin(); it != degs.rend(); ++it) {
        int m = *it;
        if (m == field().n()) continue;
        FieldElem g = field().subfield_generator(m);
        bool fixes = true;
        for (const auto& s : subspaces_)
            if (s.scalar_mul(g) != s) {
                fixes = false;
                break;
            }
        if (fixes) return m;
    }
    return 1;
}

int Flag::distance(const Flag& other) const {
    int d = 0;
    for (int v : distance_vector(other)) d += v;
    return d;
}

std::vector<int> Flag::distance_vector(const Flag& other) const {
    require(ctx() == other.ctx(), "flags from different field contexts");
    require(type_ == other.type_, "flag distance requires equal types");
    std::vector<int> d;
    d.reserve(subspaces_.size());
    for (size_t i = 0; i < subspaces_.size(); ++i) d.push_back(subspaces_[i].distance(other.subspaces_[i]));
    assert(bounds::dvec_feasible(type_, field().n(), d));
    return d;
}

Flag Flag::normalize_contains_one() const {
    const FieldElem one = field().one();
    if (subspaces_.front().contains(one)) return *this;
    FieldElem alpha = subspaces_.front().basis_elements().front();
    return scalar_mul(alpha.inverse());
}

FlagOrbitSummary Flag::orbit_summary(const ScanOptions& opts) const {
    FlagOrbitSummary out;
    out.type = type_;
    out.bfv = best_friend_vector();
    out.best_friend_exponent = gcd_of(out.bfv);
    const FieldCtx& f = field();
    out.cardinality = f.subfield_index(out.best_friend_exponent);
    out.projected_cardinalities.reserve(out.bfv.size());
    for (int mi : out.bfv) out.projected_cardinalities.push_back(f.subfield_index(mi));
    if (out.cardinality - 1 > opts.scan_cap) return out;

    const u64 gamma = f.gamma().rep();
    const int r = length();
    std::vector<u64> stab_index(r);
    for (int i = 0; i < r; ++i) stab_index[i] = out.projected_cardinalities[i];

    auto make_walker = [&, this](u64 start) {
        std::vector<std::vector<u64>> reps(r);
        u64 g_start = f.exp(start).rep();
        for (int i = 0; i < r; ++i) {
            reps[i] = subspaces_[i].basis_element_reps();
            for (u64& x : reps[i]) x = f.mul_rep(x, g_start);
        }
        u64 step = start;
        return [this, reps = std::move(reps), step, gamma, stab_index, &f]() mutable {
            int d = 0;
            for (int i = 0; i < length(); ++i) {
                // the i-th subspace is fixed exactly when its orbit index divides the step
                if (step % stab_index[i] != 0) d += detail::distance_to_span(subspaces_[i], reps[i]);
                for (u64& x : reps[i]) x = f.mul_rep(x, gamma);
            }
            ++step;
            return d;
        };
    };

    int floor = bounds::lower_bound_min_distance(out.bfv);
    auto res = detail::scan_transversal(out.cardinality, floor, opts.jobs, make_walker);
    if (res.min_distance >= 0) {
        out.min_distance = res.min_distance;
        out.witness_exponent = res.witness_exponent;
        out.witness_distance_vector = distance_vector(scalar_mul(f.exp(*out.witness_exponent)));
    }
    return out;
}

OptimumDistanceVerdict check_optimum_distance(const Flag& flag, const FlagOrbitSummary& summary,
                                              const ScanOptions& opts) {
    require(summary.min_distance.has_value(), "optimum-distance check requires a scanned minimum distance");
    OptimumDistanceVerdict v;
    const FieldCtx& f = flag.field();
    const int n = f.n();
    v.is_optimum = *summary.min_distance == bounds::max_flag_distance(flag.type(), n);
    v.cardinalities_all_equal =
        std::all_of(summary.bfv.begin(), summary.bfv.end(),
                    [&](int mi) { return mi == summary.best_friend_exponent; });
    v.projected_distances_maximal = true;
    for (const auto& s : flag.subspaces()) {
        auto ps = s.orbit_summary(opts);
        if (!ps.min_distance.has_value())
            throw BudgetExceeded("projected orbit scan exceeds the scan cap");
        v.projected_min_distances.push_back(*ps.min_distance);
        if (*ps.min_distance != 2 * std::min(s.dim(), n - s.dim())) v.projected_distances_maximal = false;
    }
    return v;
}

}  // namespace flagcodes
