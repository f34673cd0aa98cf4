#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "flagcodes/numbers.hpp"

namespace flagcodes {

class FieldCtx;

/// Parameters of the ambient field F_{q^n} with q = p^e. The modulus is a
/// monic primitive polynomial of degree e*n over F_p; when empty, the
/// lexicographically smallest primitive polynomial is selected so that
/// canonical forms are reproducible across runs.
struct FieldParams {
    u64 p = 2;
    int e = 1;
    int n = 0;
    std::vector<int> modulus;
    u64 table_cap = u64(1) << 26;
    bool allow_tableless = false;
};

/// Element of F_{q^n}, held as the packed coefficient vector of its
/// polynomial representation in the primitive element gamma over F_p.
/// Zero is rep 0; nonzero elements are gamma^k for a unique discrete log k.
class FieldElem {
public:
    FieldElem() : ctx_(nullptr), rep_(0) {}
    FieldElem(const FieldCtx* ctx, u64 rep) : ctx_(ctx), rep_(rep) {}

    u64 rep() const { return rep_; }
    const FieldCtx* ctx() const { return ctx_; }
    bool is_zero() const { return rep_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem inverse() const;
    FieldElem pow(u64 k) const;

    bool operator==(const FieldElem& o) const { return ctx_ == o.ctx_ && rep_ == o.rep_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
    const FieldCtx* ctx_;
    u64 rep_;
};

/// Immutable context for F_{q^n}: primitive element, exp/log tables (when
/// q^n is within the table cap), subfield lattice, and the basis-change
/// machinery for coordinates over the ground field F_q.
class FieldCtx {
public:
    static std::shared_ptr<const FieldCtx> create(FieldParams params);

    u64 p() const { return params_.p; }
    int e() const { return params_.e; }
    u64 q() const { return q_; }
    int n() const { return params_.n; }
    int degree() const { return en_; }
    u64 size() const { return qn_; }
    u64 order() const { return qn_ - 1; }
    const std::vector<int>& modulus() const { return params_.modulus; }
    const FieldParams& params() const { return params_; }
    bool has_tables() const { return !exp_.empty(); }

    FieldElem zero() const { return {this, 0}; }
    FieldElem one() const { return {this, 1}; }
    FieldElem gamma() const { return {this, gamma_rep_}; }
    FieldElem from_rep(u64 rep) const;

    /// gamma^k (k reduced mod q^n - 1)
    FieldElem exp(u64 k) const;
    /// discrete log of a nonzero element; requires tables
    u64 log(const FieldElem& x) const;

    u64 add_rep(u64 a, u64 b) const;
    u64 sub_rep(u64 a, u64 b) const;
    u64 mul_rep(u64 a, u64 b) const;
    u64 inv_rep(u64 a) const;
    u64 pow_rep(u64 a, u64 k) const;

    const std::vector<int>& subfield_degrees() const { return subfield_degrees_; }
    /// (q^n - 1) / (q^m - 1), the orbit index of the subfield F_{q^m}
    u64 subfield_index(int m) const;
    /// gamma^{(q^n-1)/(q^m-1)}, a generator of F_{q^m}^*
    FieldElem subfield_generator(int m) const;
    /// membership via the Frobenius fixed-point law x^{q^m} = x
    bool in_subfield(const FieldElem& x, int m) const;

    /// the q elements of the ground field F_q, ascending by rep
    const std::vector<u64>& ground_scalars() const { return ground_scalars_; }
    /// position of a ground scalar in a canonical [0, q) indexing
    int ground_index(u64 scalar_rep) const;
    u64 ground_from_index(int idx) const;

    /// coordinates of x over F_q with respect to the basis {1, gamma, ..., gamma^{n-1}}
    std::vector<FieldElem> coords_over_ground(const FieldElem& x) const;
    FieldElem elem_from_coords(std::span<const FieldElem> coords) const;

    // row-level variants used by the linear algebra layer
    void coord_reps(u64 x, u64* out) const;
    u64 elem_from_coord_reps(const u64* row) const;

    std::string describe() const;

private:
    FieldCtx() = default;
    void build_tables();
    void build_ground_maps();
    void self_check() const;

    FieldParams params_;
    u64 q_ = 0, qn_ = 0;
    int en_ = 0;
    u64 modulus_packed_ = 0;
    u64 gamma_rep_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<int> subfield_degrees_;
    std::vector<u64> ground_scalars_;

    // F_p-linear maps for e >= 2 (identity case handled directly when e == 1)
    std::vector<std::vector<int>> basis_to_digits_;  // inverse change of basis, en x en over F_p
    std::vector<u64> delta_pows_;                    // delta^j reps, j < e, delta generating F_q^*
};

}  // namespace flagcodes
