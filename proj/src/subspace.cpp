#include "flagcodes/subspace.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace flagcodes {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool is_gf2(const FieldCtx& f) { return f.q() == 2; }

u64 pack_gf2_row(const u64* row, int n) {
    u64 m = 0;
    for (int j = 0; j < n; ++j) m |= (row[j] & 1) << j;
    return m;
}

void unpack_gf2_row(u64 mask, u64* row, int n) {
    for (int j = 0; j < n; ++j) row[j] = (mask >> j) & 1;
}

int rref_gf2(std::vector<u64>& masks, int ncols) {
    int rank = 0;
    const int rows = static_cast<int>(masks.size());
    for (int col = 0; col < ncols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if ((masks[r] >> col) & 1) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(masks[piv], masks[rank]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && ((masks[r] >> col) & 1)) masks[r] ^= masks[rank];
        ++rank;
    }
    masks.resize(rank);
    return rank;
}

int rank_gf2(std::vector<u64>& masks, int ncols) {
    int rank = 0;
    const int rows = static_cast<int>(masks.size());
    for (int col = 0; col < ncols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if ((masks[r] >> col) & 1) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(masks[piv], masks[rank]);
        for (int r = rank + 1; r < rows; ++r)
            if ((masks[r] >> col) & 1) masks[r] ^= masks[rank];
        ++rank;
    }
    return rank;
}

}  // namespace

namespace detail {

int rref(const FieldCtx& f, std::vector<u64>& rows, int ncols) {
    const int nrows = static_cast<int>(rows.size()) / std::max(ncols, 1);
    if (is_gf2(f) && ncols <= 63) {
        std::vector<u64> masks(nrows);
        for (int r = 0; r < nrows; ++r) masks[r] = pack_gf2_row(&rows[r * ncols], ncols);
        int rank = rref_gf2(masks, ncols);
        rows.resize(static_cast<size_t>(rank) * ncols);
        for (int r = 0; r < rank; ++r) unpack_gf2_row(masks[r], &rows[r * ncols], ncols);
        return rank;
    }
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[r * ncols + col]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int c = 0; c < ncols; ++c) std::swap(rows[piv * ncols + c], rows[rank * ncols + c]);
        u64 inv = f.inv_rep(rows[rank * ncols + col]);
        if (inv != 1)
            for (int c = col; c < ncols; ++c) rows[rank * ncols + c] = f.mul_rep(rows[rank * ncols + c], inv);
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            u64 fac = rows[r * ncols + col];
            if (!fac) continue;
            for (int c = col; c < ncols; ++c)
                rows[r * ncols + c] = f.sub_rep(rows[r * ncols + c], f.mul_rep(fac, rows[rank * ncols + c]));
        }
        ++rank;
    }
    rows.resize(static_cast<size_t>(rank) * ncols);
    return rank;
}

int rank_of(const FieldCtx& f, std::vector<u64> rows, int ncols) {
    const int nrows = static_cast<int>(rows.size()) / std::max(ncols, 1);
    if (is_gf2(f) && ncols <= 63) {
        std::vector<u64> masks(nrows);
        for (int r = 0; r < nrows; ++r) masks[r] = pack_gf2_row(&rows[r * ncols], ncols);
        return rank_gf2(masks, ncols);
    }
    return rref(f, rows, ncols);
}

}  // namespace detail

Subspace Subspace::from_coord_rows(std::shared_ptr<const FieldCtx> ctx, std::vector<u64> rows) {
    require(ctx != nullptr, "subspace requires a field context");
    Subspace s;
    s.ctx_ = std::move(ctx);
    const int n = s.ctx_->n();
    require(rows.size() % n == 0, "row data must be a multiple of n");
    s.dim_ = detail::rref(*s.ctx_, rows, n);
    s.rows_ = std::move(rows);
    return s;
}

Subspace Subspace::span_reps(std::shared_ptr<const FieldCtx> ctx, const std::vector<u64>& element_reps) {
    require(ctx != nullptr, "subspace requires a field context");
    const int n = ctx->n();
    std::vector<u64> rows(element_reps.size() * n);
    for (size_t i = 0; i < element_reps.size(); ++i) ctx->coord_reps(element_reps[i], &rows[i * n]);
    return from_coord_rows(std::move(ctx), std::move(rows));
}

Subspace Subspace::span(std::shared_ptr<const FieldCtx> ctx, const std::vector<FieldElem>& generators) {
    require(ctx != nullptr, "subspace requires a field context");
    std::vector<u64> reps;
    reps.reserve(generators.size());
    for (const auto& g : generators) {
        require(g.ctx() == ctx.get(), "generator from a different field context");
        reps.push_back(g.rep());
    }
    return span_reps(std::move(ctx), reps);
}

Subspace Subspace::zero(std::shared_ptr<const FieldCtx> ctx) { return from_coord_rows(std::move(ctx), {}); }

Subspace Subspace::subfield(std::shared_ptr<const FieldCtx> ctx, int m) {
    require(ctx != nullptr, "subspace requires a field context");
    FieldElem delta = ctx->subfield_generator(m);
    std::vector<u64> reps;
    u64 cur = 1;
    for (int j = 0; j < m; ++j) {
        reps.push_back(cur);
        cur = ctx->mul_rep(cur, delta.rep());
    }
    return span_reps(std::move(ctx), reps);
}

std::vector<FieldElem> Subspace::basis_elements() const {
    std::vector<FieldElem> out;
    out.reserve(dim_);
    for (u64 rep : basis_element_reps()) out.push_back({ctx_.get(), rep});
    return out;
}

std::vector<u64> Subspace::basis_element_reps() const {
    const int n = ctx_->n();
    std::vector<u64> out;
    out.reserve(dim_);
    for (int r = 0; r < dim_; ++r) out.push_back(ctx_->elem_from_coord_reps(&rows_[r * n]));
    return out;
}

bool Subspace::contains(const FieldElem& x) const {
    require(x.ctx() == ctx_.get(), "element from a different field context");
    const int n = ctx_->n();
    std::vector<u64> row(n);
    ctx_->coord_reps(x.rep(), row.data());
    // reduce against the canonical rows
    for (int r = 0; r < dim_; ++r) {
        int piv = -1;
        for (int c = 0; c < n; ++c)
            if (rows_[r * n + c]) {
                piv = c;
                break;
            }
        if (piv < 0 || row[piv] == 0) continue;
        u64 fac = row[piv];
        for (int c = piv; c < n; ++c) row[c] = ctx_->sub_rep(row[c], ctx_->mul_rep(fac, rows_[r * n + c]));
    }
    return std::all_of(row.begin(), row.end(), [](u64 v) { return v == 0; });
}

bool Subspace::contains_subspace(const Subspace& other) const {
    require(ctx_ == other.ctx_, "subspaces from different field contexts");
    if (other.dim_ > dim_) return false;
    for (const auto& e : other.basis_elements())
        if (!contains(e)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    require(ctx_ == other.ctx_, "subspaces from different field contexts");
    std::vector<u64> rows(rows_);
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return from_coord_rows(ctx_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
    require(ctx_ == other.ctx_, "subspaces from different field contexts");
    const int n = ctx_->n();
    // Zassenhaus: rows [u | u] for u in U and [v | 0] for v in V; after
    // elimination the rows with zero left half carry an intersection basis
    const int total = dim_ + other.dim_;
    std::vector<u64> work(static_cast<size_t>(total) * 2 * n, 0);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < n; ++c) {
            work[(static_cast<size_t>(r) * 2 * n) + c] = rows_[r * n + c];
            work[(static_cast<size_t>(r) * 2 * n) + n + c] = rows_[r * n + c];
        }
    for (int r = 0; r < other.dim_; ++r)
        for (int c = 0; c < n; ++c) work[(static_cast<size_t>(dim_ + r) * 2 * n) + c] = other.rows_[r * n + c];
    int rank = detail::rref(*ctx_, work, 2 * n);
    std::vector<u64> inter;
    for (int r = 0; r < rank; ++r) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c) left_zero = work[(static_cast<size_t>(r) * 2 * n) + c] == 0;
        if (left_zero)
            for (int c = 0; c < n; ++c) inter.push_back(work[(static_cast<size_t>(r) * 2 * n) + n + c]);
    }
    return from_coord_rows(ctx_, std::move(inter));
}

int Subspace::distance(const Subspace& other) const {
    require(ctx_ == other.ctx_, "subspaces from different field contexts");
    std::vector<u64> rows(rows_);
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    int rank = detail::rank_of(*ctx_, std::move(rows), ctx_->n());
    return 2 * rank - dim_ - other.dim_;
}

Subspace Subspace::scalar_mul(const FieldElem& alpha) const {
    require(alpha.ctx() == ctx_.get(), "element from a different field context");
    require(!alpha.is_zero(), "scalar multiplication requires a nonzero element");
    std::vector<u64> reps = basis_element_reps();
    for (u64& r : reps) r = ctx_->mul_rep(r, alpha.rep());
    return span_reps(ctx_, reps);
}

int Subspace::stabilizer_exponent() const {
    require(dim_ > 0 && dim_ < ctx_->n(), "stabilizer exponent requires a nonzero proper subspace");
    const auto& degs = ctx_->subfield_degrees();
    for (auto it = degs.rbegin(); it != degs.rend(); ++it) {
        int m = *it;
        if (m == ctx_->n()) continue;  // would force U = 0 or the whole field
        if (scalar_mul(ctx_->subfield_generator(m)) == *this) return m;
    }
    return 1;  // F_q always stabilizes
}

int Subspace::best_friend_exponent() const { return stabilizer_exponent(); }

std::vector<Subspace> Subspace::orbit_enumerate(u64 max_orbit) const {
    int m = stabilizer_exponent();
    u64 card = ctx_->subfield_index(m);
    if (card > max_orbit) throw BudgetExceeded("orbit cardinality exceeds the enumeration cap");
    std::vector<Subspace> orbit;
    orbit.reserve(card);
    std::set<std::vector<u64>> seen;
    std::vector<u64> reps = basis_element_reps();
    const u64 gamma = ctx_->gamma().rep();
    for (u64 i = 0; i < card; ++i) {
        Subspace s = span_reps(ctx_, reps);
        if (!seen.insert(s.rows()).second) throw std::logic_error("orbit transversal produced a repeat");
        orbit.push_back(std::move(s));
        for (u64& r : reps) r = ctx_->mul_rep(r, gamma);
    }
    return orbit;
}

namespace detail {

int distance_to_span(const Subspace& u, const std::vector<u64>& element_reps) {
    const FieldCtx& f = u.field();
    const int n = f.n();
    const int k = static_cast<int>(element_reps.size());
    if (f.q() == 2 && f.e() == 1 && n <= 63) {
        // rows of the canonical matrix coincide with the element bit masks
        std::vector<u64> masks;
        masks.reserve(u.dim() + k);
        for (int r = 0; r < u.dim(); ++r) masks.push_back(pack_gf2_row(&u.rows()[r * n], n));
        masks.insert(masks.end(), element_reps.begin(), element_reps.end());
        int rank = rank_gf2(masks, n);
        return 2 * rank - u.dim() - k;
    }
    std::vector<u64> rows(u.rows());
    rows.resize(rows.size() + static_cast<size_t>(k) * n);
    for (int i = 0; i < k; ++i) f.coord_reps(element_reps[i], &rows[(u.dim() + i) * static_cast<size_t>(n)]);
    int rank = rank_of(f, std::move(rows), n);
    return 2 * rank - u.dim() - k;
}

TransversalResult scan_transversal(u64 card, int floor, int jobs,
                                   const std::function<std::function<int()>(u64)>& make_walker) {
    TransversalResult best;
    best.min_distance = -1;
    if (card <= 1) return best;

    auto run_range = [&](u64 lo, u64 hi, std::atomic<u64>* floor_hit, TransversalResult* out) {
        auto next = make_walker(lo);
        TransversalResult local;
        local.min_distance = -1;
        for (u64 i = lo; i < hi; ++i) {
            if (floor_hit && floor_hit->load(std::memory_order_relaxed) < lo) break;
            int d = next();
            if (local.min_distance < 0 || d < local.min_distance) {
                local.min_distance = d;
                local.witness_exponent = i;
            }
            if (d <= floor) {
                if (floor_hit) {
                    u64 cur = floor_hit->load();
                    while (i < cur && !floor_hit->compare_exchange_weak(cur, i)) {
                    }
                }
                break;  // later exponents in this range cannot improve
            }
        }
        *out = local;
    };

    u64 steps = card - 1;
    int workers = jobs > 1 ? static_cast<int>(std::min<u64>(jobs, steps)) : 1;
    if (workers <= 1) {
        run_range(1, card, nullptr, &best);
        return best;
    }
    std::vector<TransversalResult> locals(workers);
    std::atomic<u64> floor_hit{~u64(0)};
    std::vector<std::thread> threads;
    u64 chunk = steps / workers, extra = steps % workers, start = 1;
    for (int w = 0; w < workers; ++w) {
        u64 len = chunk + (static_cast<u64>(w) < extra ? 1 : 0);
        threads.emplace_back(run_range, start, start + len, &floor_hit, &locals[w]);
        start += len;
    }
    for (auto& t : threads) t.join();
    for (const auto& l : locals) {
        if (l.min_distance < 0) continue;
        if (best.min_distance < 0 || l.min_distance < best.min_distance ||
            (l.min_distance == best.min_distance && l.witness_exponent < best.witness_exponent))
            best = l;
    }
    return best;
}

}  // namespace detail

SubspaceOrbitSummary Subspace::orbit_summary(const ScanOptions& opts) const {
    SubspaceOrbitSummary out;
    out.stabilizer_exponent = stabilizer_exponent();
    out.cardinality = ctx_->subfield_index(out.stabilizer_exponent);
    if (out.cardinality - 1 > opts.scan_cap) return out;

    const u64 gamma = ctx_->gamma().rep();
    const Subspace& base = *this;
    auto make_walker = [&](u64 start) {
        std::vector<u64> reps = basis_element_reps();
        u64 g_start = ctx_->exp(start).rep();
        for (u64& r : reps) r = ctx_->mul_rep(r, g_start);
        return [this, reps = std::move(reps), gamma, &base]() mutable {
            int d = detail::distance_to_span(base, reps);
            for (u64& r : reps) r = ctx_->mul_rep(r, gamma);
            return d;
        };
    };
    int floor = 2 * out.stabilizer_exponent;
    auto res = detail::scan_transversal(out.cardinality, floor, opts.jobs, make_walker);
    if (res.min_distance >= 0) {
        out.min_distance = res.min_distance;
        out.witness_exponent = res.witness_exponent;
    }
    return out;
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    return rows_ < o.rows_;
}

}  // namespace flagcodes
