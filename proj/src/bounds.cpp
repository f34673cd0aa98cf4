#include "flagcodes/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flagcodes/numbers.hpp"

namespace flagcodes::bounds {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_bfv(const IntVec& bfv) {
    require(!bfv.empty(), "best friend vector must be nonempty");
    for (int m : bfv) require(m >= 1, "best friend vector entries must be positive");
}

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

std::string join(const IntVec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// lower bound for the (i+1)-th dimension given the i-th, by the consecutive
// pair rule: gap at least gcd when one entry divides the other, else max
int gap_bound(int mi, int mj) {
    int g = std::gcd(mi, mj);
    if (g == mi) return mi;
    if (g == mj) return mj;
    return std::max(mi, mj);
}

// lower bound on the later dimension of an (earlier, later) pair of entries
long long pair_bound(int m_early, int m_late) {
    long long l = lcm_ll(m_early, m_late);
    if (m_late != 0 && m_early != 0 && (m_late % m_early) != 0) l += m_late;
    return l;
}

}  // namespace

bool valid_type(const IntVec& t, int n) {
    if (t.empty() || n < 2) return false;
    int prev = 0;
    for (int ti : t) {
        if (ti <= prev) return false;
        prev = ti;
    }
    return t.back() < n;
}

void require_valid_type(const IntVec& t, int n) {
    require(valid_type(t, n), "invalid type vector: need 0 < t_1 < ... < t_r < n");
}

int max_flag_distance(const IntVec& t, int n) {
    require_valid_type(t, n);
    int sum = 0;
    for (int ti : t) sum += std::min(ti, n - ti);
    return 2 * sum;
}

int max_distance_with_zeros(const IntVec& t, int n, const IntVec& zeros) {
    require_valid_type(t, n);
    require(!zeros.empty(), "zero set must be nonempty");
    for (int z : zeros) require(z >= 1 && z <= static_cast<int>(t.size()), "zero position out of range");
    int sum = 0;
    for (size_t k = 0; k < t.size(); ++k) {
        int best = std::min(t[k], n - t[k]);
        for (int z : zeros) best = std::min(best, std::abs(t[k] - t[z - 1]));
        sum += 2 * best;
    }
    return sum;
}

bool dvec_feasible(const IntVec& t, int n, const IntVec& d) {
    require_valid_type(t, n);
    require(d.size() == t.size(), "distance vector length must match the type length");
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0 || d[i] % 2 != 0) return false;
        if (d[i] > 2 * std::min(t[i], n - t[i])) return false;
    }
    for (size_t i = 0; i + 1 < d.size(); ++i)
        if (std::abs(d[i + 1] - d[i]) > 2 * (t[i + 1] - t[i])) return false;
    return true;
}

int lower_bound_min_distance(const IntVec& bfv) {
    require_bfv(bfv);
    int m = gcd_of(bfv);
    int j = static_cast<int>(std::count(bfv.begin(), bfv.end(), m));
    int mn = *std::min_element(bfv.begin(), bfv.end());
    return std::max(2 * mn, 2 * m * j);
}

namespace {

// Maximal divisibility chains among the distinct entries different from m.
// A zero set taking every position of each chain value dominates all its
// subsets, so the minimum over these sets is the minimum over all admissible
// zero sets.
std::vector<std::vector<int>> maximal_chains(const std::vector<int>& values) {
    std::vector<std::vector<int>> chains;
    auto has_between = [&](int a, int b) {
        for (int w : values)
            if (w != a && w != b && w % a == 0 && b % w == 0) return true;
        return false;
    };
    auto extensions = [&](int last) {
        std::vector<int> out;
        for (int w : values)
            if (w != last && w % last == 0 && !has_between(last, w)) out.push_back(w);
        return out;
    };
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int last) -> void {
        auto exts = extensions(last);
        if (exts.empty()) {
            chains.push_back(chain);
            return;
        }
        for (int w : exts) {
            chain.push_back(w);
            self(self, w);
            chain.pop_back();
        }
    };
    for (int v : values) {
        bool minimal = true;
        for (int u : values)
            if (u != v && v % u == 0) minimal = false;
        if (!minimal) continue;
        chain = {v};
        dfs(dfs, v);
    }
    return chains;
}

IntVec positions_of_values(const IntVec& bfv, const std::vector<int>& values) {
    IntVec out;
    for (size_t i = 0; i < bfv.size(); ++i)
        if (std::find(values.begin(), values.end(), bfv[i]) != values.end())
            out.push_back(static_cast<int>(i) + 1);
    return out;
}

// greedy fallback for long vectors: the longest divisibility chain through
// each starting value
std::vector<std::vector<int>> greedy_chains(const std::vector<int>& values) {
    std::vector<int> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> chains;
    for (int start : sorted) {
        std::vector<int> chain{start};
        for (int w : sorted)
            if (w % chain.back() == 0 && w != chain.back()) chain.push_back(w);
        chains.push_back(chain);
    }
    return chains;
}

}  // namespace

UpperBound upper_bound_min_distance(const IntVec& bfv, const IntVec& t, int n) {
    require_bfv(bfv);
    require(bfv.size() == t.size(), "best friend vector length must match the type length");
    require_valid_type(t, n);

    int m = gcd_of(bfv);
    std::set<int> distinct;
    for (int v : bfv)
        if (v != m) distinct.insert(v);

    UpperBound ub;
    ub.value = max_flag_distance(t, n);
    if (distinct.empty()) return ub;

    std::vector<int> values(distinct.begin(), distinct.end());
    auto chains = static_cast<int>(bfv.size()) <= 16 ? maximal_chains(values) : greedy_chains(values);
    for (const auto& chain : chains) {
        IntVec zeros = positions_of_values(bfv, chain);
        if (zeros.empty() || zeros.size() >= bfv.size()) continue;
        int d = max_distance_with_zeros(t, n, zeros);
        if (d < ub.value || (d == ub.value && ub.zero_set.empty())) {
            ub.value = d;
            ub.zero_set = zeros;
        }
    }
    return ub;
}

std::vector<Violation> type_constraints_check(const IntVec& t, const IntVec& bfv, int n) {
    require_bfv(bfv);
    require(bfv.size() == t.size(), "best friend vector length must match the type length");
    require_valid_type(t, n);

    std::vector<Violation> out;
    auto violation = [&out](const std::string& rule, const std::string& detail) {
        out.push_back({rule, detail});
    };
    const int r = static_cast<int>(t.size());

    for (int i = 0; i < r; ++i) {
        if (t[i] % bfv[i] != 0) {
            std::ostringstream os;
            os << "t_" << i + 1 << " = " << t[i] << " is not a multiple of m_" << i + 1 << " = " << bfv[i];
            violation("entry-divides-type", os.str());
        }
    }
    for (int i = 0; i + 1 < r; ++i) {
        int need = gap_bound(bfv[i], bfv[i + 1]);
        if (t[i + 1] - t[i] < need) {
            std::ostringstream os;
            os << "t_" << i + 2 << " - t_" << i + 1 << " = " << t[i + 1] - t[i] << " < " << need;
            violation("gap", os.str());
        }
    }
    long long prefix = 1;
    for (int i = 0; i < r; ++i) {
        prefix = lcm_ll(prefix, bfv[i]);
        if (t[i] < prefix || (t[i] == prefix && bfv[i] != prefix)) {
            std::ostringstream os;
            os << "t_" << i + 1 << " = " << t[i] << " vs lcm(m_1..m_" << i + 1 << ") = " << prefix
               << (t[i] == prefix ? " (equality requires t_i = m_i = lcm)" : "");
            violation("prefix-lcm", os.str());
        }
    }
    for (int i = 0; i < r; ++i) {
        for (int jj = i + 1; jj < r; ++jj) {
            long long need = pair_bound(bfv[i], bfv[jj]);
            if (t[jj] < need) {
                std::ostringstream os;
                os << "t_" << jj + 1 << " = " << t[jj] << " < " << need << " required by entries (m_" << i + 1
                   << ", m_" << jj + 1 << ") = (" << bfv[i] << ", " << bfv[jj] << ")";
                violation("pairwise-lcm", os.str());
            }
        }
    }
    long long total = 1;
    for (int v : bfv) total = lcm_ll(total, v);
    if (total >= n) {
        std::ostringstream os;
        os << "lcm(" << join(bfv) << ") = " << total << " is not below n = " << n;
        violation("total-lcm", os.str());
    }
    return out;
}

IntVec minimal_admissible_type(const IntVec& bfv) {
    require_bfv(bfv);
    const int r = static_cast<int>(bfv.size());
    IntVec t(r, 0);
    long long prefix = 1;
    for (int i = 0; i < r; ++i) {
        prefix = lcm_ll(prefix, bfv[i]);
        long long low = prefix;
        if (bfv[i] != prefix) low = prefix + 1;
        if (i > 0) low = std::max(low, static_cast<long long>(t[i - 1]) + gap_bound(bfv[i - 1], bfv[i]));
        for (int jj = 0; jj < i; ++jj) low = std::max(low, pair_bound(bfv[jj], bfv[i]));
        long long rounded = (low + bfv[i] - 1) / bfv[i] * bfv[i];
        t[i] = static_cast<int>(rounded);
    }
    return t;
}

BoundsReport bounds_report(const IntVec& bfv, const IntVec& t, int n) {
    require_bfv(bfv);
    require(bfv.size() == t.size(), "best friend vector length must match the type length");
    require_valid_type(t, n);

    BoundsReport rep;
    rep.type = t;
    rep.bfv = bfv;
    rep.n = n;
    rep.m = gcd_of(bfv);
    rep.j = static_cast<int>(std::count(bfv.begin(), bfv.end(), rep.m));
    rep.baseline_lower = 2 * rep.m;
    rep.baseline_upper = max_flag_distance(t, n);
    rep.lower_bound = lower_bound_min_distance(bfv);
    auto ub = upper_bound_min_distance(bfv, t, n);
    rep.upper_bound = ub.value;
    rep.upper_zero_set = ub.zero_set;
    rep.violations = type_constraints_check(t, bfv, n);

    // certificates: one per repeated value class and one per maximal chain
    std::set<IntVec> seen;
    std::set<int> distinct;
    for (int v : bfv)
        if (v != rep.m) distinct.insert(v);
    std::vector<int> values(distinct.begin(), distinct.end());
    auto add_cert = [&](const IntVec& zeros) {
        if (zeros.empty() || zeros.size() >= bfv.size() || !seen.insert(zeros).second) return;
        rep.certificates.push_back({zeros, max_distance_with_zeros(t, n, zeros)});
    };
    for (int v : values) add_cert(positions_of_values(bfv, {v}));
    for (const auto& chain : maximal_chains(values)) add_cert(positions_of_values(bfv, chain));
    std::sort(rep.certificates.begin(), rep.certificates.end(),
              [](const Certificate& a, const Certificate& b) { return a.zero_set < b.zero_set; });
    return rep;
}

}  // namespace flagcodes::bounds
