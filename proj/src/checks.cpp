#include "flagcodes/checks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "flagcodes/bounds.hpp"
#include "flagcodes/gfpoly.hpp"
#include "flagcodes/io.hpp"

namespace flagcodes::checks {

using nlohmann::json;
using oracle::EnumBudget;

namespace {

std::mutex cache_mutex;
std::map<std::pair<u64, int>, std::shared_ptr<const FieldCtx>> field_cache;

json intvec(const std::vector<int>& v) { return json(v); }

Subspace random_subspace(const std::shared_ptr<const FieldCtx>& ctx, int dim, std::mt19937_64& rng) {
    Subspace cur = Subspace::zero(ctx);
    while (cur.dim() < dim) {
        FieldElem x = ctx->exp(rng() % ctx->order());
        if (cur.contains(x)) continue;
        auto reps = cur.basis_element_reps();
        reps.push_back(x.rep());
        cur = Subspace::span_reps(ctx, reps);
    }
    return cur;
}

Flag random_flag(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<int>& type, std::mt19937_64& rng) {
    std::vector<Subspace> subs;
    Subspace cur = Subspace::zero(ctx);
    for (int t : type) {
        while (cur.dim() < t) {
            FieldElem x = ctx->exp(rng() % ctx->order());
            if (cur.contains(x)) continue;
            auto reps = cur.basis_element_reps();
            reps.push_back(x.rep());
            cur = Subspace::span_reps(ctx, reps);
        }
        subs.push_back(cur);
    }
    return Flag::make(std::move(subs));
}

std::vector<int> random_type(int n, std::mt19937_64& rng) {
    int r = 1 + static_cast<int>(rng() % 3);
    std::set<int> dims;
    while (static_cast<int>(dims.size()) < r) dims.insert(1 + static_cast<int>(rng() % (n - 1)));
    return {dims.begin(), dims.end()};
}

// a small pool of interesting flags on a field: Galois chains, constructed
// witnesses and random flags
std::vector<Flag> sample_flags(const std::shared_ptr<const FieldCtx>& ctx, std::mt19937_64& rng, int randoms) {
    std::vector<Flag> out;
    const int n = ctx->n();
    std::vector<int> divs;
    for (int d : ctx->subfield_degrees())
        if (d < n) divs.push_back(d);
    // longest divisor chain through the lattice
    std::vector<int> chain;
    for (int d : divs)
        if (chain.empty() || d % chain.back() == 0) chain.push_back(d);
    if (!chain.empty()) out.push_back(galois_flag(ctx, chain).flag);
    if (divs.size() >= 2) out.push_back(galois_flag(ctx, {divs[divs.size() - 2]}).flag);
    for (int i = 0; i < randoms; ++i) out.push_back(random_flag(ctx, random_type(n, rng), rng));
    return out;
}

std::vector<std::vector<int>> all_length2_types(int n) {
    std::vector<std::vector<int>> out;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) out.push_back({a, b});
    return out;
}

// every even vector within the componentwise caps, zero at the given
// positions, satisfying the adjacency condition; returns the max component sum
int max_feasible_sum(const std::vector<int>& t, int n, const std::vector<int>& zeros) {
    const int r = static_cast<int>(t.size());
    std::vector<bool> zero_at(r, false);
    for (int z : zeros) zero_at[z - 1] = true;
    int best = -1;
    std::vector<int> d(r, 0);
    auto dfs = [&](auto&& self, int i, int sum) -> void {
        if (i == r) {
            best = std::max(best, sum);
            return;
        }
        int cap = 2 * std::min(t[i], n - t[i]);
        for (int v = 0; v <= cap; v += 2) {
            if (zero_at[i] && v != 0) continue;
            if (i > 0 && std::abs(v - d[i - 1]) > 2 * (t[i] - t[i - 1])) continue;
            d[i] = v;
            self(self, i + 1, sum + v);
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

std::vector<std::vector<int>> bfv_sweep_lcm_le(int max_lcm, int max_r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int r) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (r == max_r) return;
        for (int m = 1; m <= max_lcm; ++m) {
            cur.push_back(m);
            if (lcm_of(cur) <= max_lcm) self(self, r + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

// ---------------------------------------------------------------- field ---

CheckResult check_exp_log_roundtrip(const CheckOptions&) {
    CheckResult res{"field.exp-log-roundtrip"};
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 4}, {2, 6}, {3, 4}, {4, 3}, {5, 3}}) {
        auto ctx = cached_field(q, n);
        for (u64 k = 0; k < ctx->order(); ++k) {
            FieldElem x = ctx->exp(k);
            if (ctx->log(x) != k) {
                res.fail("log(exp(k)) != k", {{"q", q}, {"n", n}, {"k", k}});
                return res;
            }
        }
        for (u64 rep = 1; rep < ctx->size(); ++rep) {
            FieldElem x = ctx->from_rep(rep);
            if (ctx->exp(ctx->log(x)).rep() != rep) {
                res.fail("exp(log(x)) != x", {{"q", q}, {"n", n}, {"rep", rep}});
                return res;
            }
        }
    }
    res.detail = "exhaustive over five small fields";
    return res;
}

CheckResult check_frobenius_law(const CheckOptions&) {
    CheckResult res{"field.frobenius-subfield-law"};
    u64 total = 0;
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 12}, {2, 6}, {3, 4}, {4, 4}, {5, 2}}) {
        auto ctx = cached_field(q, n);
        for (int m : ctx->subfield_degrees()) {
            u64 qm = checked_pow_u64(ctx->q(), m);
            for (u64 rep = 0; rep < ctx->size(); ++rep) {
                FieldElem x = ctx->from_rep(rep);
                bool law = x.pow(qm) == x;
                if (ctx->in_subfield(x, m) != law) {
                    res.fail("membership disagrees with x^(q^m) = x", {{"q", q}, {"n", n}, {"m", m}, {"rep", rep}});
                    return res;
                }
                ++total;
            }
        }
    }
    res.detail = "exhaustive over " + std::to_string(total) + " (element, subfield) pairs";
    return res;
}

CheckResult check_subfield_lattice(const CheckOptions&) {
    CheckResult res{"field.subfield-lattice"};
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 12}, {2, 8}, {3, 6}, {4, 4}}) {
        auto ctx = cached_field(q, n);
        for (int a : ctx->subfield_degrees()) {
            FieldElem ga = ctx->subfield_generator(a);
            u64 qa = checked_pow_u64(ctx->q(), a);
            if (ga.pow(qa - 1) != ctx->one()) {
                res.fail("subfield generator order too small", {{"q", q}, {"n", n}, {"a", a}});
                return res;
            }
            for (u64 l : prime_factors_u64(qa - 1))
                if (ga.pow((qa - 1) / l) == ctx->one()) {
                    res.fail("subfield generator order not exact", {{"q", q}, {"n", n}, {"a", a}});
                    return res;
                }
            for (int b : ctx->subfield_degrees()) {
                bool want = b % a == 0;
                if (ctx->in_subfield(ga, b) != want) {
                    res.fail("containment disagrees with divisibility", {{"q", q}, {"n", n}, {"a", a}, {"b", b}});
                    return res;
                }
            }
        }
    }
    res.detail = "generator orders and lattice containments verified";
    return res;
}

CheckResult check_coords_roundtrip(const CheckOptions& opts) {
    CheckResult res{"field.coords-roundtrip"};
    std::mt19937_64 rng(opts.seed);
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 6}, {3, 4}, {4, 3}, {9, 2}}) {
        auto ctx = cached_field(q, n);
        for (u64 rep = 0; rep < ctx->size(); ++rep) {
            FieldElem x = ctx->from_rep(rep);
            auto coords = ctx->coords_over_ground(x);
            for (const auto& c : coords)
                if (!ctx->in_subfield(c, 1)) {
                    res.fail("coordinate not in the ground field", {{"q", q}, {"n", n}, {"rep", rep}});
                    return res;
                }
            if (ctx->elem_from_coords(coords) != x) {
                res.fail("elem(coords(x)) != x", {{"q", q}, {"n", n}, {"rep", rep}});
                return res;
            }
        }
        const auto& scalars = ctx->ground_scalars();
        for (int trial = 0; trial < 64; ++trial) {
            std::vector<FieldElem> v;
            for (int i = 0; i < ctx->n(); ++i) v.push_back(ctx->from_rep(scalars[rng() % scalars.size()]));
            auto back = ctx->coords_over_ground(ctx->elem_from_coords(v));
            if (back != v) {
                res.fail("coords(elem(v)) != v", {{"q", q}, {"n", n}});
                return res;
            }
        }
    }
    res.detail = "exhaustive one way, sampled the other";
    return res;
}

CheckResult check_gamma_order(const CheckOptions&) {
    CheckResult res{"field.gamma-order"};
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 4}, {2, 10}, {3, 4}, {4, 3}}) {
        auto ctx = cached_field(q, n);
        FieldElem g = ctx->gamma();
        if (g.pow(ctx->order()) != ctx->one()) {
            res.fail("gamma^(q^n-1) != 1", {{"q", q}, {"n", n}});
            return res;
        }
        for (u64 l : prime_factors_u64(ctx->order()))
            if (g.pow(ctx->order() / l) == ctx->one()) {
                res.fail("gamma has a smaller order", {{"q", q}, {"n", n}, {"factor", l}});
                return res;
            }
    }
    res.detail = "full multiplicative order confirmed against the factorization";
    return res;
}

CheckResult check_default_modulus(const CheckOptions&) {
    CheckResult res{"field.default-modulus-deterministic"};
    auto a = FieldCtx::create(io::make_field_params(2, 4));
    auto b = FieldCtx::create(io::make_field_params(2, 4));
    if (a->modulus() != b->modulus()) {
        res.fail("two builds picked different default moduli");
        return res;
    }
    // independent primitivity: the multiplicative order of x mod f is 15,
    // found by stepping a raw multiply-by-x loop
    auto order_of_x = [](u64 f) {
        u64 t = 2;  // t = x^k at the top of iteration k
        for (int k = 1; k <= 16; ++k) {
            if (t == 1) return k;
            if (t == 0) return 0;
            t = gfpoly::mulmod(t, 2, f, 2);
        }
        return 0;  // order exceeds the scan, cannot be 15
    };
    u64 packed = gfpoly::pack(a->modulus(), 2);
    if (order_of_x(packed) != 15) {
        res.fail("default modulus root does not have full order", {{"modulus", packed}});
        return res;
    }
    auto lex_less = [](u64 x, u64 y) {
        for (int i = 0; i < 5; ++i) {
            int cx = static_cast<int>((x >> i) & 1), cy = static_cast<int>((y >> i) & 1);
            if (cx != cy) return cx < cy;
        }
        return false;
    };
    for (u64 low = 0; low < 16; ++low) {
        u64 cand = 16 | low;
        if (cand == packed || !lex_less(cand, packed)) continue;
        if (order_of_x(cand) == 15) {
            res.fail("a lexicographically smaller primitive polynomial exists", {{"candidate", cand}});
            return res;
        }
    }
    res.detail = "deterministic and lex-minimal for degree 4 over F_2";
    return res;
}

// --------------------------------------------------------------- metric ---

CheckResult metric_axioms_on(const std::string& name, const std::vector<Subspace>& spaces) {
    CheckResult res{name};
    const size_t m = spaces.size();
    std::vector<int> dist(m * m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) dist[i * m + j] = spaces[i].distance(spaces[j]);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (dist[i * m + j] != dist[j * m + i]) {
                res.fail("symmetry fails", {{"i", i}, {"j", j}});
                return res;
            }
            bool zero = dist[i * m + j] == 0;
            if (zero != (spaces[i] == spaces[j])) {
                res.fail("identity of indiscernibles fails", {{"i", i}, {"j", j}});
                return res;
            }
        }
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k)
                if (dist[i * m + k] > dist[i * m + j] + dist[j * m + k]) {
                    res.fail("triangle inequality fails", {{"i", i}, {"j", j}, {"k", k}});
                    return res;
                }
    res.detail = "all axioms over " + std::to_string(m) + " subspaces";
    return res;
}

CheckResult check_metric_exhaustive(const CheckOptions&) {
    auto ctx = cached_field(2, 4);
    std::vector<Subspace> all;
    for (int k = 0; k <= 4; ++k)
        for (auto& s : oracle::enumerate_subspaces(ctx, k)) all.push_back(std::move(s));
    auto res = metric_axioms_on("metric.axioms-exhaustive-n4", all);
    return res;
}

CheckResult check_metric_sampled(const CheckOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    CheckResult res{"metric.axioms-sampled"};
    for (int n : {6, 8}) {
        auto ctx = cached_field(2, n);
        std::vector<Subspace> pool;
        for (int i = 0; i < 30; ++i) pool.push_back(random_subspace(ctx, 1 + static_cast<int>(rng() % (n - 1)), rng));
        auto r = metric_axioms_on(res.name, pool);
        if (!r.pass) return r;
    }
    res.detail = "sampled subspaces at n = 6 and n = 8";
    return res;
}

// ------------------------------------------------------------- subspace ---

CheckResult check_bf_divisibility(const CheckOptions& opts) {
    CheckResult res{"subspace.bf-divisibility"};
    std::mt19937_64 rng(opts.seed);
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 4}, {2, 6}, {2, 8}, {3, 4}}) {
        auto ctx = cached_field(q, n);
        for (int trial = 0; trial < 24; ++trial) {
            Subspace u = random_subspace(ctx, 1 + static_cast<int>(rng() % (n - 1)), rng);
            int m = u.best_friend_exponent();
            if (std::gcd(u.dim(), n) % m != 0) {
                res.fail("m does not divide gcd(dim, n)", {{"q", q}, {"n", n}, {"dim", u.dim()}, {"m", m}});
                return res;
            }
            u64 alphas = n <= 4 ? ctx->order() : 40;
            for (u64 t = 0; t < alphas; ++t) {
                u64 k = n <= 4 ? t : rng() % ctx->order();
                int d = u.distance(u.scalar_mul(ctx->exp(k)));
                if (d % (2 * m) != 0) {
                    res.fail("2m does not divide d_S(U, U a)", {{"q", q}, {"n", n}, {"m", m}, {"exponent", k}});
                    return res;
                }
            }
        }
    }
    res.detail = "full transversal at n = 4, sampled scalars beyond";
    return res;
}

CheckResult check_orbit_cardinality_law(const CheckOptions& opts) {
    CheckResult res{"subspace.orbit-cardinality-law"};
    std::mt19937_64 rng(opts.seed);
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 4}, {2, 6}, {2, 8}, {3, 4}}) {
        auto ctx = cached_field(q, n);
        for (int trial = 0; trial < 12; ++trial) {
            Subspace u = random_subspace(ctx, 1 + static_cast<int>(rng() % (n - 1)), rng);
            auto summary = u.orbit_summary({opts.budget, opts.jobs});
            u64 qm = checked_pow_u64(q, summary.stabilizer_exponent);
            if (summary.cardinality * (qm - 1) != ctx->order()) {
                res.fail("orbit size formula violated", {{"q", q}, {"n", n}, {"dim", u.dim()}});
                return res;
            }
            auto orbit = u.orbit_enumerate(1 << 12);
            if (orbit.size() != summary.cardinality) {
                res.fail("enumerated orbit size disagrees with the formula",
                         {{"q", q}, {"n", n}, {"enumerated", orbit.size()}, {"formula", summary.cardinality}});
                return res;
            }
        }
    }
    res.detail = "formula matches explicit enumeration";
    return res;
}

CheckResult check_scalar_mul_preserves_bf(const CheckOptions& opts) {
    CheckResult res{"subspace.scalar-mul-preserves-bf"};
    std::mt19937_64 rng(opts.seed);
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 6}, {2, 8}, {3, 4}}) {
        auto ctx = cached_field(q, n);
        for (int trial = 0; trial < 16; ++trial) {
            Subspace u = random_subspace(ctx, 1 + static_cast<int>(rng() % (n - 1)), rng);
            int m = u.best_friend_exponent();
            FieldElem a = ctx->exp(rng() % ctx->order());
            if (u.scalar_mul(a).best_friend_exponent() != m) {
                res.fail("best friend changed along the orbit", {{"q", q}, {"n", n}});
                return res;
            }
        }
    }
    return res;
}

CheckResult check_bf_equals_oracle(const CheckOptions&) {
    CheckResult res{"subspace.bf-equals-oracle"};
    u64 total = 0;
    for (int n = 2; n <= 6; ++n) {
        auto ctx = cached_field(2, n);
        for (int k = 1; k < n; ++k) {
            for (const auto& u : oracle::enumerate_subspaces(ctx, k)) {
                if (u.best_friend_exponent() != oracle::best_friend_bruteforce(u)) {
                    res.fail("fast best friend disagrees with the full subfield scan",
                             {{"n", n}, {"matrix", io::matrix_strings(u)}});
                    return res;
                }
                ++total;
            }
        }
    }
    res.detail = "exhaustive over " + std::to_string(total) + " subspaces of F_2^n, n <= 6";
    return res;
}

// ----------------------------------------------------------------- flag ---

CheckResult check_dvec_th39(const CheckOptions& opts) {
    CheckResult res{"flag.dvec-th39-conditions"};
    for (int n : {4, 5, 6}) {
        auto ctx = cached_field(2, n);
        for (const auto& t : all_length2_types(n)) {
            for (const auto& d : oracle::achievable_distance_vectors(ctx, t))
                if (!bounds::dvec_feasible(t, n, d)) {
                    res.fail("realized vector judged infeasible", {{"n", n}, {"type", intvec(t)}, {"d", intvec(d)}});
                    return res;
                }
        }
    }
    {
        auto ctx = cached_field(2, 5);
        for (const auto& d : oracle::achievable_distance_vectors(ctx, {1, 2, 3}))
            if (!bounds::dvec_feasible({1, 2, 3}, 5, d)) {
                res.fail("realized vector judged infeasible", {{"n", 5}, {"type", "1,2,3"}, {"d", intvec(d)}});
                return res;
            }
    }
    std::mt19937_64 rng(opts.seed);
    auto ctx = cached_field(2, 8);
    for (int trial = 0; trial < 40; ++trial) {
        auto type = random_type(8, rng);
        Flag a = random_flag(ctx, type, rng), b = random_flag(ctx, type, rng);
        if (!bounds::dvec_feasible(type, 8, a.distance_vector(b))) {
            res.fail("sampled pair realizes an infeasible vector", {{"n", 8}, {"type", intvec(type)}});
            return res;
        }
    }
    res.detail = "exhaustive at n <= 6 for length-2 types, sampled at n = 8";
    return res;
}

CheckResult check_scaling_invariance(const CheckOptions& opts) {
    CheckResult res{"flag.scaling-invariance"};
    std::mt19937_64 rng(opts.seed);
    for (int n : {6, 8}) {
        auto ctx = cached_field(2, n);
        for (int trial = 0; trial < 12; ++trial) {
            auto type = random_type(n, rng);
            Flag a = random_flag(ctx, type, rng), b = random_flag(ctx, type, rng);
            FieldElem alpha = ctx->exp(rng() % ctx->order());
            if (a.scalar_mul(alpha).best_friend_vector() != a.best_friend_vector()) {
                res.fail("best friend vector not invariant under scaling", {{"n", n}, {"type", intvec(type)}});
                return res;
            }
            if (a.scalar_mul(alpha).distance(b.scalar_mul(alpha)) != a.distance(b)) {
                res.fail("flag distance not invariant under simultaneous scaling",
                         {{"n", n}, {"type", intvec(type)}});
                return res;
            }
        }
    }
    return res;
}

CheckResult check_transversal_vs_allpairs(const CheckOptions& opts) {
    CheckResult res{"flag.transversal-equals-all-pairs"};
    std::mt19937_64 rng(opts.seed);
    int orbits = 0;
    for (int n : {4, 6, 8, 10}) {
        auto ctx = cached_field(2, n);
        int randoms = n <= 8 ? 3 : 1;
        for (const auto& f : sample_flags(ctx, rng, randoms)) {
            auto summary = f.orbit_summary({opts.budget, opts.jobs});
            if (!summary.min_distance.has_value()) continue;
            int brute = oracle::orbit_min_distance_bruteforce(f);
            if (*summary.min_distance != brute) {
                res.fail("transversal scan disagrees with the all-pairs minimum",
                         {{"n", n}, {"type", intvec(f.type())}, {"scan", *summary.min_distance}, {"brute", brute}});
                return res;
            }
            if (brute % (2 * summary.best_friend_exponent) != 0) {
                res.fail("2m does not divide the orbit distance", {{"n", n}, {"type", intvec(f.type())}});
                return res;
            }
            ++orbits;
        }
    }
    res.detail = "agreement on " + std::to_string(orbits) + " orbits up to n = 10";
    return res;
}

CheckResult check_gcd_equals_stabilizer(const CheckOptions& opts) {
    CheckResult res{"flag.gcd-equals-stabilizer"};
    std::mt19937_64 rng(opts.seed);
    for (int n : {6, 8, 12}) {
        auto ctx = cached_field(2, n);
        for (const auto& f : sample_flags(ctx, rng, 3)) {
            if (f.best_friend_exponent() != f.stabilizer_exponent()) {
                res.fail("gcd of the best friend vector differs from the flag stabilizer",
                         {{"n", n}, {"type", intvec(f.type())}, {"bfv", intvec(f.best_friend_vector())}});
                return res;
            }
        }
    }
    return res;
}

CheckResult check_cardinality_chain(const CheckOptions& opts) {
    CheckResult res{"flag.cardinality-chain"};
    std::mt19937_64 rng(opts.seed);
    for (int n : {6, 8, 12}) {
        auto ctx = cached_field(2, n);
        for (const auto& f : sample_flags(ctx, rng, 3)) {
            auto s = f.orbit_summary({0, 1});  // no scan, just the arithmetic
            u64 qm = checked_pow_u64(2, s.best_friend_exponent);
            for (size_t i = 0; i < s.bfv.size(); ++i) {
                u64 qmi = checked_pow_u64(2, s.bfv[i]);
                if (s.cardinality % s.projected_cardinalities[i] != 0 ||
                    s.cardinality != s.projected_cardinalities[i] * ((qmi - 1) / (qm - 1))) {
                    res.fail("projected cardinality quotient violated", {{"n", n}, {"i", i}});
                    return res;
                }
                bool equal = s.cardinality == s.projected_cardinalities[i];
                if (equal != (s.bfv[i] == s.best_friend_exponent)) {
                    res.fail("cardinality equality does not characterize m_i = m", {{"n", n}, {"i", i}});
                    return res;
                }
            }
        }
    }
    return res;
}

CheckResult check_normalize_contains_one(const CheckOptions& opts) {
    CheckResult res{"flag.normalize-contains-one"};
    std::mt19937_64 rng(opts.seed);
    for (int n : {6, 8, 12}) {
        auto ctx = cached_field(2, n);
        for (const auto& f : sample_flags(ctx, rng, 3)) {
            Flag g = f.normalize_contains_one();
            if (!g.subspace(0).contains(ctx->one())) {
                res.fail("normalized flag does not contain 1", {{"n", n}});
                return res;
            }
            if (g.type() != f.type() || g.best_friend_vector() != f.best_friend_vector()) {
                res.fail("normalization changed the type or best friend vector", {{"n", n}});
                return res;
            }
            auto bfv = g.best_friend_vector();
            long long l = 1;
            for (int i = 0; i < g.length(); ++i) {
                l = std::lcm<long long>(l, bfv[i]);
                if (!g.subspace(i).contains_subspace(Subspace::subfield(ctx, static_cast<int>(l)))) {
                    res.fail("normalized flag misses the prefix-lcm subfield", {{"n", n}, {"i", i}});
                    return res;
                }
            }
        }
    }
    return res;
}

// --------------------------------------------------------------- bounds ---

CheckResult check_zeros_monotone(const CheckOptions& opts) {
    CheckResult res{"bounds.zeros-monotone"};
    std::mt19937_64 rng(opts.seed);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 20);
        std::set<int> dims;
        int r = 1 + static_cast<int>(rng() % std::min(5, n - 1));
        while (static_cast<int>(dims.size()) < r) dims.insert(1 + static_cast<int>(rng() % (n - 1)));
        std::vector<int> t(dims.begin(), dims.end());
        std::vector<int> s;
        for (int i = 1; i <= r; ++i)
            if (rng() % 2) s.push_back(i);
        if (s.empty()) s.push_back(1 + static_cast<int>(rng() % r));
        std::vector<int> bigger = s;
        for (int i = 1; i <= r; ++i)
            if (std::find(bigger.begin(), bigger.end(), i) == bigger.end() && rng() % 2) bigger.push_back(i);
        std::sort(bigger.begin(), bigger.end());
        int d_all = bounds::max_flag_distance(t, n);
        int d_s = bounds::max_distance_with_zeros(t, n, s);
        int d_b = bounds::max_distance_with_zeros(t, n, bigger);
        if (!(d_b <= d_s && d_s <= d_all)) {
            res.fail("monotonicity violated", {{"t", intvec(t)}, {"n", n}, {"s", intvec(s)}, {"bigger", intvec(bigger)}});
            return res;
        }
    }
    res.detail = "200 random (type, zero-set) pairs";
    return res;
}

CheckResult check_zero_max_equals_search(const CheckOptions& opts) {
    CheckResult res{"bounds.zero-max-equals-search"};
    std::mt19937_64 rng(opts.seed);
    int cases = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 5 + static_cast<int>(rng() % 8);
        int r = 1 + static_cast<int>(rng() % 4);
        std::set<int> dims;
        while (static_cast<int>(dims.size()) < r) dims.insert(1 + static_cast<int>(rng() % (n - 1)));
        std::vector<int> t(dims.begin(), dims.end());
        if (t.back() > 12) continue;
        std::vector<int> s;
        for (int i = 1; i <= r; ++i)
            if (rng() % 2) s.push_back(i);
        if (s.empty()) s.push_back(1 + static_cast<int>(rng() % r));
        int formula = bounds::max_distance_with_zeros(t, n, s);
        int searched = max_feasible_sum(t, n, s);
        if (formula != searched) {
            res.fail("zero-constrained maximum differs from the exhaustive search",
                     {{"t", intvec(t)}, {"n", n}, {"zeros", intvec(s)}, {"formula", formula}, {"search", searched}});
            return res;
        }
        ++cases;
    }
    res.detail = std::to_string(cases) + " zero-set maxima matched by brute force";
    return res;
}

CheckResult check_bounds_bracket_exact(const CheckOptions& opts) {
    CheckResult res{"bounds.flag-bounds-bracket-exact"};
    std::mt19937_64 rng(opts.seed);
    int flags = 0;
    for (int n : {6, 8, 12}) {
        auto ctx = cached_field(2, n);
        for (const auto& f : sample_flags(ctx, rng, 4)) {
            auto summary = f.orbit_summary({opts.budget, opts.jobs});
            if (!summary.min_distance.has_value()) continue;
            auto rep = bounds::bounds_report(summary.bfv, f.type(), n);
            int exact = *summary.min_distance;
            if (!(rep.lower_bound <= exact && exact <= rep.upper_bound)) {
                res.fail("bounds do not bracket the exact orbit distance",
                         {{"n", n},
                          {"type", intvec(f.type())},
                          {"bfv", intvec(summary.bfv)},
                          {"lower", rep.lower_bound},
                          {"exact", exact},
                          {"upper", rep.upper_bound}});
                return res;
            }
            if (exact % (2 * summary.best_friend_exponent) != 0) {
                res.fail("2m does not divide the exact distance", {{"n", n}, {"type", intvec(f.type())}});
                return res;
            }
            ++flags;
        }
    }
    res.detail = "bounds bracket " + std::to_string(flags) + " exact orbit distances";
    return res;
}

CheckResult check_bound_baselines(const CheckOptions& opts) {
    CheckResult res{"bounds.baselines"};
    std::mt19937_64 rng(opts.seed);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 6 + static_cast<int>(rng() % 19);
        int r = 1 + static_cast<int>(rng() % 5);
        std::vector<int> bfv;
        auto divs = divisors_u64(static_cast<u64>(n));
        for (int i = 0; i < r; ++i) bfv.push_back(static_cast<int>(divs[rng() % divs.size()]));
        auto t = bounds::minimal_admissible_type(bfv);
        if (t.back() >= n) continue;
        auto rep = bounds::bounds_report(bfv, t, n);
        if (rep.lower_bound < rep.baseline_lower || rep.upper_bound > rep.baseline_upper ||
            rep.lower_bound > rep.upper_bound) {
            res.fail("baseline ordering violated", {{"bfv", intvec(bfv)}, {"t", intvec(t)}, {"n", n}});
            return res;
        }
    }
    res.detail = "2m <= lower <= upper <= D on random admissible inputs";
    return res;
}

// ------------------------------------------------------------ construct ---

CheckResult check_roundtrip_sweep(const CheckOptions&) {
    CheckResult res{"construct.bfv-roundtrip-sweep"};
    int built = 0;
    for (const auto& bfv : bfv_sweep_lcm_le(8, 4)) {
        auto plan = construction_plan(bfv);
        auto ctx = cached_field(2, static_cast<int>(plan.sufficient_n));
        ConstructedFlag cf = construct_general(ctx, bfv);
        if (cf.flag.best_friend_vector() != bfv) {
            res.fail("constructed flag has the wrong best friend vector",
                     {{"bfv", intvec(bfv)}, {"n", plan.sufficient_n}, {"got", intvec(cf.flag.best_friend_vector())}});
            return res;
        }
        ++built;
    }
    res.detail = std::to_string(built) + " vectors with lcm <= 8, r <= 4, at minimal sufficient n";
    return res;
}

CheckResult check_construct_type_constraints(const CheckOptions&) {
    CheckResult res{"construct.outputs-pass-type-constraints"};
    for (const auto& bfv : bfv_sweep_lcm_le(6, 3)) {
        auto plan = construction_plan(bfv);
        auto ctx = cached_field(2, static_cast<int>(plan.sufficient_n));
        ConstructedFlag cf = construct_general(ctx, bfv);
        auto violations = bounds::type_constraints_check(cf.flag.type(), bfv, ctx->n());
        if (!violations.empty() || cf.flag.type().back() >= ctx->n()) {
            res.fail("constructed flag violates a type constraint",
                     {{"bfv", intvec(bfv)}, {"type", intvec(cf.flag.type())}, {"n", ctx->n()}});
            return res;
        }
    }
    return res;
}

CheckResult check_len2_oracle(const CheckOptions&) {
    CheckResult res{"construct.len2-agrees-with-exhaustive-search"};
    auto classified = oracle::classify_subspaces_bruteforce(cached_field(2, 6));
    for (int m1 : {1, 2, 3, 6}) {
        for (int m2 : {1, 2, 3, 6}) {
            bool predicted = realizable_len2(m1, m2, 6);
            bool found = oracle::realizability_bruteforce({m1, m2}, classified).found;
            if (predicted != found) {
                res.fail("length-2 characterization disagrees with exhaustive search",
                         {{"m1", m1}, {"m2", m2}, {"predicted", predicted}, {"found", found}});
                return res;
            }
        }
    }
    res.detail = "all pairs over the divisors of 6, q = 2";
    return res;
}

CheckResult check_exact_cases_never_unknown(const CheckOptions&) {
    CheckResult res{"construct.exact-cases-never-unknown"};
    std::vector<std::vector<int>> vectors;
    for (int m = 1; m <= 4; ++m)
        for (int r = 2; r <= 4; ++r) vectors.push_back(std::vector<int>(r, m));
    vectors.push_back({1, 2});
    vectors.push_back({1, 2, 4});
    vectors.push_back({2, 4, 8});
    vectors.push_back({1, 3, 6});
    vectors.push_back({3, 6});
    for (const auto& bfv : vectors) {
        for (int n = 2; n <= 24; ++n) {
            auto v = realizability_verdict(bfv, n);
            if (v.status == Realizability::Unknown) {
                res.fail("exact characterization returned Unknown", {{"bfv", intvec(bfv)}, {"n", n}});
                return res;
            }
        }
    }
    res.detail = "constant vectors and strict divisor chains decided for all n <= 24";
    return res;
}

CheckResult check_notrealizable_sound(const CheckOptions&) {
    CheckResult res{"construct.notrealizable-unrefuted"};
    int checked = 0;
    for (int n : {4, 6}) {
        auto classified = oracle::classify_subspaces_bruteforce(cached_field(2, n));
        std::vector<int> divs;
        for (u64 d : divisors_u64(static_cast<u64>(n))) divs.push_back(static_cast<int>(d));
        std::vector<std::vector<int>> vectors;
        for (int a : divs) {
            vectors.push_back({a});
            for (int b : divs) {
                vectors.push_back({a, b});
                if (n == 6)
                    for (int c : divs) vectors.push_back({a, b, c});
            }
        }
        for (const auto& bfv : vectors) {
            auto verdict = realizability_verdict(bfv, n);
            auto search = oracle::realizability_bruteforce(bfv, classified);
            if (verdict.status == Realizability::NotRealizable && search.found) {
                res.fail("exhaustive search refutes a NotRealizable verdict", {{"bfv", intvec(bfv)}, {"n", n}});
                return res;
            }
            if (verdict.status == Realizability::Realizable && !search.found) {
                res.fail("exhaustive search cannot find a promised witness", {{"bfv", intvec(bfv)}, {"n", n}});
                return res;
            }
            ++checked;
        }
    }
    res.detail = std::to_string(checked) + " verdicts compared against exhaustive search";
    return res;
}

// --------------------------------------------------------------- oracle ---

CheckResult check_counts_equal_gaussian(const CheckOptions&) {
    CheckResult res{"oracle.counts-equal-gaussian"};
    for (auto [q, n] : std::vector<std::pair<u64, int>>{{2, 4}, {2, 6}, {3, 3}}) {
        auto ctx = cached_field(q, n);
        for (int k = 0; k <= n; ++k) {
            auto spaces = oracle::enumerate_subspaces(ctx, k, {u64(1) << 16, u64(1) << 21, 2048});
            if (oracle::cpp_int(spaces.size()) != oracle::gaussian_binomial(n, k, q)) {
                res.fail("enumeration count mismatch", {{"q", q}, {"n", n}, {"k", k}});
                return res;
            }
            std::set<Subspace> dedup(spaces.begin(), spaces.end());
            if (dedup.size() != spaces.size()) {
                res.fail("enumeration produced duplicates", {{"q", q}, {"n", n}, {"k", k}});
                return res;
            }
        }
    }
    // Pascal-style recurrence as an independent cross-check of the formula
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
            for (u64 q : {2ull, 3ull, 4ull}) {
                auto lhs = oracle::gaussian_binomial(n, k, q);
                auto rhs = oracle::gaussian_binomial(n - 1, k - 1, q) +
                           oracle::cpp_int(boost::multiprecision::pow(oracle::cpp_int(q), k)) *
                               oracle::gaussian_binomial(n - 1, k, q);
                if (lhs != rhs) {
                    res.fail("q-Pascal recurrence fails", {{"n", n}, {"k", k}, {"q", q}});
                    return res;
                }
            }
    res.detail = "counts, uniqueness and the q-Pascal recurrence";
    return res;
}

CheckResult check_dvec_iff_feasible(const CheckOptions&) {
    CheckResult res{"oracle.dvec-search-iff-feasible"};
    auto ctx = cached_field(2, 6);
    const int n = 6;
    int vectors = 0;
    for (const auto& t : all_length2_types(n)) {
        auto achieved = oracle::achievable_distance_vectors(ctx, t);
        int cap1 = 2 * std::min(t[0], n - t[0]), cap2 = 2 * std::min(t[1], n - t[1]);
        for (int d1 = 0; d1 <= cap1; d1 += 2) {
            for (int d2 = 0; d2 <= cap2; d2 += 2) {
                std::vector<int> d{d1, d2};
                bool feasible = bounds::dvec_feasible(t, n, d);
                bool realized = achieved.count(d) > 0;
                if (feasible != realized) {
                    res.fail("feasibility and exhaustive realization disagree",
                             {{"type", intvec(t)}, {"d", intvec(d)}, {"feasible", feasible}, {"realized", realized}});
                    return res;
                }
                ++vectors;
            }
        }
    }
    res.detail = std::to_string(vectors) + " vectors over all length-2 types at n = 6";
    return res;
}

CheckResult check_fixed_first_reduction(const CheckOptions&) {
    CheckResult res{"oracle.fixed-first-reduction"};
    auto ctx = cached_field(2, 4);
    for (const auto& t : all_length2_types(4)) {
        auto flags = oracle::enumerate_flags(ctx, t);
        std::set<std::vector<int>> all_pairs;
        for (const auto& a : flags)
            for (const auto& b : flags) all_pairs.insert(a.distance_vector(b));
        auto fixed = oracle::achievable_distance_vectors(ctx, t);
        if (all_pairs != fixed) {
            res.fail("fixed-first vector set differs from the all-pairs set", {{"type", intvec(t)}});
            return res;
        }
    }
    res.detail = "all-pairs sets match fixed-first sets for every length-2 type at n = 4";
    return res;
}

}  // namespace

std::shared_ptr<const FieldCtx> cached_field(u64 q, int n) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(q, n);
    auto it = field_cache.find(key);
    if (it != field_cache.end()) return it->second;
    auto ctx = FieldCtx::create(io::make_field_params(q, n, {}, u64(1) << 20, true));
    field_cache.emplace(key, ctx);
    return ctx;
}

std::vector<std::string> suite_names() {
    return {"field", "metric", "subspace", "flag", "bounds", "construct", "oracle", "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& opts) {
    using Fn = CheckResult (*)(const CheckOptions&);
    static const std::vector<std::pair<std::string, Fn>> table = {
        {"field", check_exp_log_roundtrip},
        {"field", check_frobenius_law},
        {"field", check_subfield_lattice},
        {"field", check_coords_roundtrip},
        {"field", check_gamma_order},
        {"field", check_default_modulus},
        {"metric", check_metric_exhaustive},
        {"metric", check_metric_sampled},
        {"subspace", check_bf_divisibility},
        {"subspace", check_orbit_cardinality_law},
        {"subspace", check_scalar_mul_preserves_bf},
        {"subspace", check_bf_equals_oracle},
        {"flag", check_dvec_th39},
        {"flag", check_scaling_invariance},
        {"flag", check_transversal_vs_allpairs},
        {"flag", check_gcd_equals_stabilizer},
        {"flag", check_cardinality_chain},
        {"flag", check_normalize_contains_one},
        {"bounds", check_zeros_monotone},
        {"bounds", check_zero_max_equals_search},
        {"bounds", check_bounds_bracket_exact},
        {"bounds", check_bound_baselines},
        {"construct", check_roundtrip_sweep},
        {"construct", check_construct_type_constraints},
        {"construct", check_len2_oracle},
        {"construct", check_exact_cases_never_unknown},
        {"construct", check_notrealizable_sound},
        {"oracle", check_counts_equal_gaussian},
        {"oracle", check_dvec_iff_feasible},
        {"oracle", check_fixed_first_reduction},
        {"oracle", check_bf_equals_oracle},
        {"oracle", check_notrealizable_sound},
    };
    bool all = suite == "all";
    std::vector<Fn> selected;
    for (const auto& [name, fn] : table) {
        if (!all && name != suite) continue;
        if (std::find(selected.begin(), selected.end(), fn) == selected.end()) selected.push_back(fn);
    }
    if (selected.empty()) throw std::invalid_argument("unknown verification suite: " + suite);
    std::vector<CheckResult> out;
    for (Fn fn : selected) out.push_back(fn(opts));
    return out;
}

}  // namespace flagcodes::checks
