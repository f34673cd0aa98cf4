#pragma once

#include <optional>
#include <string>

#include "flagcodes/flag.hpp"

namespace flagcodes {

/// A flag together with the gamma-exponents of the generators used to build
/// each subspace, so files can be emitted without discrete logs.
struct ConstructedFlag {
    Flag flag;
    std::vector<std::vector<u64>> generator_exponents;
};

/// Galois flag (F_{q^{t_1}}, ..., F_{q^{t_r}}) for a strict divisor chain
/// t_1 | t_2 | ... | t_r | n with t_r < n.
ConstructedFlag galois_flag(std::shared_ptr<const FieldCtx> ctx, const std::vector<int>& chain);

/// Whether a length-2 best friend vector (m1, m2) occurs on F_{q^n}:
/// exactly when n = s * lcm(m1, m2) with s >= 2, or s >= 3 when m1 = m2.
bool realizable_len2(int m1, int m2, long long n);

ConstructedFlag construct_length2(std::shared_ptr<const FieldCtx> ctx, int m1, int m2);

struct ConstructionPlan {
    std::vector<int> bfv;
    std::vector<int> k;           // k_1 = 0, k_i per the nested-increase count
    std::vector<long long> prefix_lcm;
    long long l = 1;              // lcm of all entries
    int k_r = 0;
    int s = 0;                    // r - k_r, plus one when m_r = l
    long long sufficient_n = 0;   // s * l
};

ConstructionPlan construction_plan(const std::vector<int>& bfv);

/// Systematic construction of a flag with the prescribed best friend vector;
/// requires ctx->n() >= the plan's sufficient n and every entry dividing n.
ConstructedFlag construct_general(std::shared_ptr<const FieldCtx> ctx, const std::vector<int>& bfv);

enum class Realizability { Realizable, NotRealizable, Unknown };

struct RealizabilityVerdict {
    Realizability status = Realizability::Unknown;
    std::string reason;
    ConstructionPlan plan;
    std::optional<ConstructedFlag> witness;  // present for Realizable when a context was supplied
};

/// Three-valued realizability of a best friend vector on F_{q^n}. Realizable
/// verdicts built with a context carry a witness whose recomputed best friend
/// vector is verified against the request; NotRealizable cites the violated
/// condition; Unknown means the sufficient bound fails but nothing rules the
/// vector out.
RealizabilityVerdict realizability_verdict(const std::vector<int>& bfv, long long n);
RealizabilityVerdict realizability_verdict(const std::vector<int>& bfv, long long n,
                                           std::shared_ptr<const FieldCtx> ctx);

}  // namespace flagcodes
