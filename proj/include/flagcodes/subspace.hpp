#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flagcodes/field.hpp"

namespace flagcodes {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScanOptions {
    u64 scan_cap = u64(1) << 20;
    int jobs = 1;
};

struct SubspaceOrbitSummary {
    int stabilizer_exponent = 1;
    u64 cardinality = 0;
    std::optional<int> min_distance;
    std::optional<u64> witness_exponent;
};

/// F_q-subspace of F_{q^n} in unique reduced-row-echelon coordinate form
/// with respect to the basis {1, gamma, ..., gamma^{n-1}}. Two subspaces are
/// equal exactly when their canonical matrices coincide.
class Subspace {
public:
    Subspace() = default;

    static Subspace span(std::shared_ptr<const FieldCtx> ctx, const std::vector<FieldElem>& generators);
    static Subspace span_reps(std::shared_ptr<const FieldCtx> ctx, const std::vector<u64>& element_reps);
    static Subspace from_coord_rows(std::shared_ptr<const FieldCtx> ctx, std::vector<u64> rows);
    static Subspace zero(std::shared_ptr<const FieldCtx> ctx);
    /// the subfield F_{q^m} viewed as an m-dimensional F_q-subspace
    static Subspace subfield(std::shared_ptr<const FieldCtx> ctx, int m);

    bool valid() const { return ctx_ != nullptr; }
    const std::shared_ptr<const FieldCtx>& ctx() const { return ctx_; }
    const FieldCtx& field() const { return *ctx_; }
    int dim() const { return dim_; }
    int ambient_dim() const { return ctx_->n(); }
    /// canonical matrix, dim x n scalars row-major
    const std::vector<u64>& rows() const { return rows_; }

    std::vector<FieldElem> basis_elements() const;
    std::vector<u64> basis_element_reps() const;

    bool contains(const FieldElem& x) const;
    bool contains_subspace(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// subspace distance dim(U+V) - dim(U∩V), via one rank computation
    int distance(const Subspace& other) const;

    Subspace scalar_mul(const FieldElem& alpha) const;

    /// the unique m | n with Stab(U) = F_{q^m}^*, for proper nonzero U
    int stabilizer_exponent() const;
    /// largest m with U a vector space over F_{q^m}; equals the stabilizer exponent
    int best_friend_exponent() const;

    std::vector<Subspace> orbit_enumerate(u64 max_orbit = 4096) const;
    SubspaceOrbitSummary orbit_summary(const ScanOptions& opts = {}) const;

    bool operator==(const Subspace& o) const { return ctx_ == o.ctx_ && dim_ == o.dim_ && rows_ == o.rows_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const;

private:
    std::shared_ptr<const FieldCtx> ctx_;
    int dim_ = 0;
    std::vector<u64> rows_;
};

namespace detail {
/// reduced row echelon form over F_q in place; returns the rank and shrinks
/// the row vector to the nonzero rows
int rref(const FieldCtx& f, std::vector<u64>& rows, int ncols);
int rank_of(const FieldCtx& f, std::vector<u64> rows, int ncols);

/// distance from U to the span of the given independent element reps
int distance_to_span(const Subspace& u, const std::vector<u64>& element_reps);

struct TransversalResult {
    int min_distance = 0;
    u64 witness_exponent = 0;
};

/// Minimum of dist(i) over i in [1, card), ties to the smallest exponent.
/// make_walker(start) returns a callable yielding dist(start), dist(start+1), ...
/// floor is a proven lower bound; hitting it stops the scan early. The result
/// is independent of the number of jobs.
TransversalResult scan_transversal(u64 card, int floor, int jobs,
                                   const std::function<std::function<int()>(u64)>& make_walker);
}  // namespace detail

}  // namespace flagcodes
