#include "flagcodes/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "flagcodes/gfpoly.hpp"

namespace flagcodes {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

const FieldCtx* common_ctx(const FieldElem& a, const FieldElem& b) {
    if (!a.ctx() || a.ctx() != b.ctx()) throw std::invalid_argument("elements from different field contexts");
    return a.ctx();
}

}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
    const FieldCtx* c = common_ctx(*this, o);
    return {c, c->add_rep(rep_, o.rep_)};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    const FieldCtx* c = common_ctx(*this, o);
    return {c, c->sub_rep(rep_, o.rep_)};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    const FieldCtx* c = common_ctx(*this, o);
    return {c, c->mul_rep(rep_, o.rep_)};
}

FieldElem FieldElem::inverse() const {
    require(ctx_ != nullptr, "element has no field context");
    return {ctx_, ctx_->inv_rep(rep_)};
}

FieldElem FieldElem::pow(u64 k) const {
    require(ctx_ != nullptr, "element has no field context");
    return {ctx_, ctx_->pow_rep(rep_, k)};
}

std::shared_ptr<const FieldCtx> FieldCtx::create(FieldParams params) {
    require(is_prime_u64(params.p), "p must be prime");
    require(params.e >= 1, "e must be positive");
    require(params.n >= 2, "extension degree n must be at least 2");

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    FieldCtx& f = *ctx;
    f.en_ = params.e * params.n;
    try {
        f.q_ = checked_pow_u64(params.p, params.e);
        f.qn_ = checked_pow_u64(params.p, f.en_);
        checked_pow_u64(params.p, f.en_ + 1);  // packed polynomial headroom
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("field too large for 64-bit element representation");
    }

    if (params.modulus.empty()) {
        u64 packed = gfpoly::default_modulus(params.p, f.en_);
        params.modulus = gfpoly::unpack(packed, params.p, f.en_ + 1);
        f.modulus_packed_ = packed;
    } else {
        require(static_cast<int>(params.modulus.size()) == f.en_ + 1, "modulus must have degree e*n");
        for (int c : params.modulus) require(c >= 0 && static_cast<u64>(c) < params.p, "modulus coefficient out of range");
        require(params.modulus.back() == 1, "modulus must be monic");
        f.modulus_packed_ = gfpoly::pack(params.modulus, params.p);
        if (!gfpoly::is_primitive(f.modulus_packed_, params.p))
            throw std::invalid_argument("modulus is not primitive over F_p");
    }
    f.params_ = params;
    f.gamma_rep_ = params.p;  // the class of x

    if (f.qn_ <= params.table_cap) {
        f.build_tables();
    } else if (!params.allow_tableless) {
        std::ostringstream os;
        os << "table cap exceeded: q^n = " << f.qn_ << " > " << params.table_cap;
        throw std::invalid_argument(os.str());
    } else {
        // order of gamma checked against the factorization of q^n - 1
        for (u64 l : prime_factors_u64(f.order()))
            if (gfpoly::powmod(f.gamma_rep_, f.order() / l, f.modulus_packed_, params.p) == 1)
                throw std::invalid_argument("modulus is not primitive over F_p");
    }

    for (u64 d : divisors_u64(static_cast<u64>(params.n))) f.subfield_degrees_.push_back(static_cast<int>(d));
    f.build_ground_maps();
    f.self_check();
    return ctx;
}

void FieldCtx::build_tables() {
    const u64 p = params_.p, ord = order();
    exp_.assign(ord, 0);
    log_.assign(qn_, 0);
    u64 r = 1;
    if (p == 2) {
        const u64 f = modulus_packed_;
        const u64 top = u64(1) << en_;
        for (u64 k = 0; k < ord; ++k) {
            if (r == 1 && k > 0) throw std::invalid_argument("modulus is not primitive over F_p");
            exp_[k] = static_cast<std::uint32_t>(r);
            log_[r] = static_cast<std::uint32_t>(k);
            r <<= 1;
            if (r & top) r ^= f;
        }
    } else {
        const u64 top = qn_;  // p^en
        for (u64 k = 0; k < ord; ++k) {
            if (r == 1 && k > 0) throw std::invalid_argument("modulus is not primitive over F_p");
            exp_[k] = static_cast<std::uint32_t>(r);
            log_[r] = static_cast<std::uint32_t>(k);
            r *= p;  // packed shift: multiply by x
            u64 c = r / top;
            if (c) {
                r -= c * top;
                // subtract c * (f - x^en)
                u64 fl = modulus_packed_ - top, mul = 1, adj = 0;
                while (fl) {
                    adj += (fl % p) * c % p * mul;
                    fl /= p;
                    mul *= p;
                }
                r = gfpoly::sub(r, adj, p);
            }
        }
    }
    if (r != 1) throw std::invalid_argument("modulus is not primitive over F_p");
}

void FieldCtx::build_ground_maps() {
    const u64 p = params_.p;
    const int e = params_.e;

    ground_scalars_.clear();
    ground_scalars_.push_back(0);
    if (e == 1) {
        for (u64 v = 1; v < p; ++v) ground_scalars_.push_back(v);
        return;
    }

    // delta generates F_q^*; {delta^j : j < e} is an F_p-basis of F_q
    u64 delta = subfield_generator(1).rep();
    delta_pows_.assign(e, 1);
    for (int j = 1; j < e; ++j) delta_pows_[j] = mul_rep(delta_pows_[j - 1], delta);

    u64 cur = 1;
    for (u64 j = 0; j + 1 < q_; ++j) {
        ground_scalars_.push_back(cur);
        cur = mul_rep(cur, delta);
    }
    std::sort(ground_scalars_.begin(), ground_scalars_.end());

    // change of basis from {delta^j gamma^i} to the F_p digit basis {gamma^i over F_p}
    const int d = en_;
    std::vector<std::vector<int>> m(d, std::vector<int>(2 * d, 0));
    u64 gpow = 1;
    for (int i = 0; i < params_.n; ++i) {
        for (int j = 0; j < e; ++j) {
            u64 col_elem = mul_rep(delta_pows_[j], gpow);
            auto digits = gfpoly::unpack(col_elem, p, d);
            int col = i * e + j;
            for (int row = 0; row < d; ++row) m[row][col] = digits[row];
        }
        gpow = mul_rep(gpow, gamma_rep_);
    }
    for (int i = 0; i < d; ++i) m[i][d + i] = 1;

    // Gauss-Jordan over F_p
    for (int col = 0, row = 0; col < d && row < d; ++col, ++row) {
        int piv = row;
        while (piv < d && m[piv][col] == 0) ++piv;
        if (piv == d) throw std::runtime_error("ground basis is singular");
        std::swap(m[piv], m[row]);
        u64 inv = powmod_u64(static_cast<u64>(m[row][col]), p - 2, p);
        for (int j = 0; j < 2 * d; ++j) m[row][j] = static_cast<int>(m[row][j] * inv % p);
        for (int r2 = 0; r2 < d; ++r2) {
            if (r2 == row || m[r2][col] == 0) continue;
            u64 fac = p - static_cast<u64>(m[r2][col]);
            for (int j = 0; j < 2 * d; ++j)
                m[r2][j] = static_cast<int>((m[r2][j] + fac * m[row][j]) % p);
        }
    }
    basis_to_digits_.assign(d, std::vector<int>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) basis_to_digits_[i][j] = m[i][d + j];
}

void FieldCtx::self_check() const {
    // cross-check table arithmetic against polynomial arithmetic on sampled pairs
    u64 state = 0x9e3779b97f4a7c15ull;
    auto next = [&state, this]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state % qn_;
    };
    for (int i = 0; i < 32; ++i) {
        u64 a = next(), b = next();
        u64 want = gfpoly::mulmod(a, b, modulus_packed_, params_.p);
        if (mul_rep(a, b) != want) throw std::runtime_error("table arithmetic disagrees with polynomial arithmetic");
        if (a != 0) {
            u64 ia = inv_rep(a);
            if (mul_rep(a, ia) != 1) throw std::runtime_error("inverse check failed");
        }
    }
}

FieldElem FieldCtx::from_rep(u64 rep) const {
    require(rep < qn_, "element representation out of range");
    if (params_.p > 2) {
        u64 v = rep;
        while (v) {
            require(v % params_.p < params_.p, "bad digit");
            v /= params_.p;
        }
    }
    return {this, rep};
}

FieldElem FieldCtx::exp(u64 k) const {
    k %= order();
    if (has_tables()) return {this, exp_[k]};
    return {this, gfpoly::powmod(gamma_rep_, k, modulus_packed_, params_.p)};
}

u64 FieldCtx::log(const FieldElem& x) const {
    require(x.ctx() == this, "element from a different field context");
    if (x.is_zero()) throw std::invalid_argument("discrete log of zero");
    if (!has_tables()) throw std::runtime_error("discrete log requires exp/log tables");
    return log_[x.rep()];
}

u64 FieldCtx::add_rep(u64 a, u64 b) const {
    if (params_.p == 2) return a ^ b;
    return gfpoly::add(a, b, params_.p);
}

u64 FieldCtx::sub_rep(u64 a, u64 b) const {
    if (params_.p == 2) return a ^ b;
    return gfpoly::sub(a, b, params_.p);
}

u64 FieldCtx::mul_rep(u64 a, u64 b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables()) {
        u64 k = log_[a] + log_[b];
        if (k >= order()) k -= order();
        return exp_[k];
    }
    return gfpoly::mulmod(a, b, modulus_packed_, params_.p);
}

u64 FieldCtx::inv_rep(u64 a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    if (has_tables()) {
        u64 k = log_[a];
        return exp_[k == 0 ? 0 : order() - k];
    }
    return gfpoly::powmod(a, order() - 1, modulus_packed_, params_.p);
}

u64 FieldCtx::pow_rep(u64 a, u64 k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    if (has_tables()) {
        u64 e = mulmod_u64(log_[a], k % order(), order());
        return exp_[e];
    }
    return gfpoly::powmod(a, k, modulus_packed_, params_.p);
}

u64 FieldCtx::subfield_index(int m) const {
    require(params_.n % m == 0 && m >= 1, "subfield degree must divide n");
    u64 qm = checked_pow_u64(q_, m);
    return order() / (qm - 1);
}

FieldElem FieldCtx::subfield_generator(int m) const { return exp(subfield_index(m)); }

bool FieldCtx::in_subfield(const FieldElem& x, int m) const {
    require(x.ctx() == this, "element from a different field context");
    u64 idx = subfield_index(m);
    if (x.is_zero()) return true;
    if (has_tables()) return log_[x.rep()] % idx == 0;
    u64 qm = checked_pow_u64(q_, m);
    return pow_rep(x.rep(), qm) == x.rep();
}

int FieldCtx::ground_index(u64 scalar_rep) const {
    if (params_.e == 1) {
        require(scalar_rep < params_.p, "scalar is not in the ground field");
        return static_cast<int>(scalar_rep);
    }
    if (scalar_rep == 0) return 0;
    // a ground scalar has coordinates (s, 0, ..., 0) over F_q, so the first
    // block of the digit change-of-basis yields its delta-power coordinates
    const u64 p = params_.p;
    auto digits = gfpoly::unpack(scalar_rep, p, en_);
    int idx = 0;
    for (int j = params_.e - 1; j >= 0; --j) {
        u64 c = 0;
        const auto& row = basis_to_digits_[j];
        for (int k = 0; k < en_; ++k) c += static_cast<u64>(row[k]) * digits[k] % p;
        idx = idx * static_cast<int>(p) + static_cast<int>(c % p);
    }
    return idx;
}

u64 FieldCtx::ground_from_index(int idx) const {
    if (params_.e == 1) {
        require(idx >= 0 && static_cast<u64>(idx) < params_.p, "scalar index out of range");
        return static_cast<u64>(idx);
    }
    u64 rep = 0;
    for (int j = 0; j < params_.e; ++j) {
        int digit = static_cast<int>((static_cast<u64>(idx) / checked_pow_u64(params_.p, j)) % params_.p);
        if (digit) rep = add_rep(rep, mul_rep(static_cast<u64>(digit), delta_pows_[j]));
    }
    return rep;
}

std::vector<FieldElem> FieldCtx::coords_over_ground(const FieldElem& x) const {
    require(x.ctx() == this, "element from a different field context");
    std::vector<u64> reps(params_.n);
    coord_reps(x.rep(), reps.data());
    std::vector<FieldElem> out;
    out.reserve(params_.n);
    for (u64 r : reps) out.push_back({this, r});
    return out;
}

FieldElem FieldCtx::elem_from_coords(std::span<const FieldElem> coords) const {
    require(static_cast<int>(coords.size()) == params_.n, "coordinate vector must have length n");
    std::vector<u64> reps(params_.n);
    for (int i = 0; i < params_.n; ++i) {
        require(coords[i].ctx() == this, "element from a different field context");
        reps[i] = coords[i].rep();
    }
    return {this, elem_from_coord_reps(reps.data())};
}

void FieldCtx::coord_reps(u64 x, u64* out) const {
    const u64 p = params_.p;
    if (params_.e == 1) {
        for (int i = 0; i < params_.n; ++i) {
            out[i] = x % p;
            x /= p;
        }
        return;
    }
    auto digits = gfpoly::unpack(x, p, en_);
    for (int i = 0; i < params_.n; ++i) {
        u64 scalar = 0;
        for (int j = 0; j < params_.e; ++j) {
            u64 c = 0;
            const auto& row = basis_to_digits_[i * params_.e + j];
            for (int k = 0; k < en_; ++k) c += static_cast<u64>(row[k]) * digits[k] % p;
            c %= p;
            if (c) scalar = add_rep(scalar, mul_rep(c, delta_pows_[j]));
        }
        out[i] = scalar;
    }
}

u64 FieldCtx::elem_from_coord_reps(const u64* row) const {
    const u64 p = params_.p;
    if (params_.e == 1) {
        u64 rep = 0, mul = 1;
        for (int i = 0; i < params_.n; ++i) {
            require(row[i] < p, "scalar is not in the ground field");
            rep += row[i] * mul;
            mul *= p;
        }
        return rep;
    }
    u64 rep = 0, gpow = 1;
    for (int i = 0; i < params_.n; ++i) {
        if (row[i]) rep = add_rep(rep, mul_rep(row[i], gpow));
        gpow = mul_rep(gpow, gamma_rep_);
    }
    return rep;
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (params_.e > 1) os << " (= F_" << params_.p << "^" << params_.e << ")";
    os << " extension of degree " << params_.n << ", " << qn_ << " elements, "
       << (has_tables() ? "exp/log tables" : "polynomial arithmetic");
    return os.str();
}

}  // namespace flagcodes
