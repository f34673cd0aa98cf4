#include "flagcodes/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flagcodes/bounds.hpp"

namespace flagcodes {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_bfv(const std::vector<int>& bfv) {
    require(!bfv.empty(), "best friend vector must be nonempty");
    for (int m : bfv) require(m >= 1, "best friend vector entries must be positive");
}

// generator exponents of the subfield F_{q^m} shifted by gamma^shift
std::vector<u64> subfield_term_exponents(const FieldCtx& f, int m, u64 shift) {
    std::vector<u64> out;
    u64 idx = f.subfield_index(m);
    for (int j = 0; j < m; ++j) out.push_back((idx * j + shift) % f.order());
    return out;
}

Subspace span_of_exponents(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<u64>& exps) {
    std::vector<u64> reps;
    reps.reserve(exps.size());
    for (u64 k : exps) reps.push_back(ctx->exp(k).rep());
    return Subspace::span_reps(ctx, reps);
}

bool is_constant(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });
}

bool is_strict_divisor_chain(const std::vector<int>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1] || v[i + 1] % v[i] != 0) return false;
    return true;
}

}  // namespace

ConstructedFlag galois_flag(std::shared_ptr<const FieldCtx> ctx, const std::vector<int>& chain) {
    require(ctx != nullptr, "construction requires a field context");
    require(!chain.empty(), "divisor chain must be nonempty");
    for (int t : chain) require(t >= 1, "chain entries must be positive");
    require(is_strict_divisor_chain(chain), "chain entries must strictly divide each other in order");
    require(ctx->n() % chain.back() == 0 && chain.back() < ctx->n(), "chain must continue dividing n, with t_r < n");

    ConstructedFlag out;
    std::vector<Subspace> subs;
    for (int t : chain) {
        out.generator_exponents.push_back(subfield_term_exponents(*ctx, t, 0));
        subs.push_back(Subspace::subfield(ctx, t));
    }
    out.flag = Flag::make(std::move(subs));
    return out;
}

bool realizable_len2(int m1, int m2, long long n) {
    if (m1 < 1 || m2 < 1 || n < 2) return false;
    long long l = std::lcm<long long>(m1, m2);
    if (n % l != 0) return false;
    long long s = n / l;
    return s >= (m1 == m2 ? 3 : 2);
}

ConstructedFlag construct_length2(std::shared_ptr<const FieldCtx> ctx, int m1, int m2) {
    require(ctx != nullptr, "construction requires a field context");
    require(realizable_len2(m1, m2, ctx->n()), "best friend vector (m1, m2) is not realizable on this field");
    return construct_general(std::move(ctx), {m1, m2});
}

ConstructionPlan construction_plan(const std::vector<int>& bfv) {
    require_bfv(bfv);
    const int r = static_cast<int>(bfv.size());
    ConstructionPlan plan;
    plan.bfv = bfv;
    plan.k.assign(r, 0);
    plan.prefix_lcm.assign(r, 0);
    long long l = 1;
    for (int i = 0; i < r; ++i) {
        if (i > 0) {
            bool nested_increase = bfv[i] % bfv[i - 1] == 0 && bfv[i] > bfv[i - 1];
            plan.k[i] = plan.k[i - 1] + (nested_increase ? 1 : 0);
        }
        l = std::lcm<long long>(l, bfv[i]);
        plan.prefix_lcm[i] = l;
    }
    plan.l = l;
    plan.k_r = plan.k[r - 1];
    plan.s = bfv.back() != l ? r - plan.k_r : r - plan.k_r + 1;
    plan.sufficient_n = static_cast<long long>(plan.s) * plan.l;
    return plan;
}

ConstructedFlag construct_general(std::shared_ptr<const FieldCtx> ctx, const std::vector<int>& bfv) {
    require(ctx != nullptr, "construction requires a field context");
    ConstructionPlan plan = construction_plan(bfv);
    const int n = ctx->n();
    for (int m : bfv) require(n % m == 0, "every entry of the best friend vector must divide n");
    require(n >= plan.sufficient_n, "n is below the sufficient bound s * lcm(m_1, ..., m_r)");

    // F_i = F_{q^{l_i}} + F_{q^{l_i}} a + ... + F_{q^{l_i}} a^{i-k_i-2} + F_{q^{m_i}} a^{i-k_i-1}
    // with a = gamma; the powers 1, gamma, ..., gamma^{s-1} are independent
    // over F_{q^l} because [F_{q^n} : F_{q^l}] = n/l >= s.
    ConstructedFlag out;
    std::vector<Subspace> subs;
    const int r = static_cast<int>(bfv.size());
    for (int i = 0; i < r; ++i) {
        int c = i + 1 - plan.k[i];  // number of summands of F_{i+1}
        int li = static_cast<int>(plan.prefix_lcm[i]);
        std::vector<u64> exps;
        for (int a = 0; a + 1 < c; ++a)
            for (u64 k : subfield_term_exponents(*ctx, li, static_cast<u64>(a))) exps.push_back(k);
        for (u64 k : subfield_term_exponents(*ctx, bfv[i], static_cast<u64>(c - 1))) exps.push_back(k);
        out.generator_exponents.push_back(exps);
        subs.push_back(span_of_exponents(ctx, exps));
    }
    out.flag = Flag::make(std::move(subs));
    return out;
}

namespace {

RealizabilityVerdict make_realizable(ConstructionPlan plan, const std::vector<int>& bfv,
                                     const std::shared_ptr<const FieldCtx>& ctx, const std::string& how) {
    RealizabilityVerdict v;
    v.status = Realizability::Realizable;
    v.reason = how;
    v.plan = std::move(plan);
    if (ctx) {
        ConstructedFlag cf = construct_general(ctx, bfv);
        if (cf.flag.best_friend_vector() != bfv)
            throw std::logic_error("constructed witness fails the best friend vector round-trip");
        v.witness = std::move(cf);
    }
    return v;
}

RealizabilityVerdict verdict_impl(const std::vector<int>& bfv, long long n,
                                  std::shared_ptr<const FieldCtx> ctx) {
    require_bfv(bfv);
    require(n >= 2, "ambient degree n must be at least 2");
    if (ctx) require(ctx->n() == n, "field context does not match the requested n");

    RealizabilityVerdict v;
    v.plan = construction_plan(bfv);
    const int r = static_cast<int>(bfv.size());

    for (int m : bfv) {
        if (n % m != 0) {
            std::ostringstream os;
            os << "entry " << m << " does not divide n = " << n;
            v.status = Realizability::NotRealizable;
            v.reason = os.str();
            return v;
        }
    }
    if (v.plan.l == n) {
        v.status = Realizability::NotRealizable;
        v.reason = "lcm of the entries equals n";
        return v;
    }

    if (r == 2) {
        if (realizable_len2(bfv[0], bfv[1], n))
            return make_realizable(v.plan, bfv, ctx, "length-2 characterization: n = s * lcm(m1, m2)");
        std::ostringstream os;
        os << "length-2 characterization fails: n = " << n << " is not s * " << v.plan.l << " with s >= "
           << (bfv[0] == bfv[1] ? 3 : 2);
        v.status = Realizability::NotRealizable;
        v.reason = os.str();
        return v;
    }
    if (r == 1) return make_realizable(v.plan, bfv, ctx, "single subfield subspace");
    if (is_constant(bfv)) {
        long long s = n / bfv[0];
        if (s >= r + 1) return make_realizable(v.plan, bfv, ctx, "constant-vector characterization: n = s*m, s >= r+1");
        std::ostringstream os;
        os << "constant vector of length " << r << " needs n = s * " << bfv[0] << " with s >= " << r + 1;
        v.status = Realizability::NotRealizable;
        v.reason = os.str();
        return v;
    }
    if (is_strict_divisor_chain(bfv))
        return make_realizable(v.plan, bfv, ctx, "strictly increasing divisor chain: the Galois flag realizes it");

    auto t_min = bounds::minimal_admissible_type(bfv);
    if (t_min.back() >= n) {
        std::ostringstream os;
        os << "no admissible type vector fits below n: the minimal one ends at " << t_min.back();
        v.status = Realizability::NotRealizable;
        v.reason = os.str();
        return v;
    }
    if (n >= v.plan.sufficient_n)
        return make_realizable(v.plan, bfv, ctx, "sufficient condition: n >= s * lcm(m_1, ..., m_r)");

    v.status = Realizability::Unknown;
    std::ostringstream os;
    os << "n = " << n << " is below the sufficient bound " << v.plan.sufficient_n
       << " and the sufficient condition is not necessary";
    v.reason = os.str();
    return v;
}

}  // namespace

RealizabilityVerdict realizability_verdict(const std::vector<int>& bfv, long long n) {
    return verdict_impl(bfv, n, nullptr);
}

RealizabilityVerdict realizability_verdict(const std::vector<int>& bfv, long long n,
                                           std::shared_ptr<const FieldCtx> ctx) {
    return verdict_impl(bfv, n, std::move(ctx));
}

}  // namespace flagcodes
