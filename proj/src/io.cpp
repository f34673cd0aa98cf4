#include "flagcodes/io.hpp"

#include <algorithm>
#include <sstream>

namespace flagcodes::io {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

FieldParams make_field_params(u64 q, int n, const std::vector<int>& modulus, u64 table_cap,
                              bool allow_tableless) {
    auto pe = prime_power_decompose(q);
    require(pe.has_value(), "q must be a prime power");
    FieldParams params;
    params.p = pe->first;
    params.e = pe->second;
    params.n = n;
    params.modulus = modulus;
    params.table_cap = table_cap;
    params.allow_tableless = allow_tableless;
    return params;
}

json field_descriptor(const FieldCtx& f) {
    return json{{"p", f.p()}, {"e", f.e()}, {"n", f.n()}, {"modulus", f.modulus()}};
}

FieldElem parse_elem_literal(const FieldCtx& f, const std::string& text) {
    if (text == "0") return f.zero();
    require(text.size() > 2 && text[0] == 'g' && text[1] == '^', "element literal must be \"0\" or \"g^k\"");
    u64 k = 0;
    for (size_t i = 2; i < text.size(); ++i) {
        require(text[i] >= '0' && text[i] <= '9', "element literal exponent must be decimal");
        k = k * 10 + static_cast<u64>(text[i] - '0');
    }
    require(k < f.order(), "element literal exponent out of range");
    return f.exp(k);
}

std::string elem_literal_from_exponent(std::optional<u64> exponent) {
    if (!exponent.has_value()) return "0";
    return "g^" + std::to_string(*exponent);
}

std::string elem_literal(const FieldElem& x) {
    if (x.is_zero()) return "0";
    return elem_literal_from_exponent(x.ctx()->log(x));
}

std::vector<std::string> matrix_strings(const Subspace& s) {
    const FieldCtx& f = s.field();
    const int n = f.n();
    std::vector<std::string> out;
    for (int r = 0; r < s.dim(); ++r) {
        std::ostringstream os;
        for (int c = 0; c < n; ++c) {
            int idx = f.ground_index(s.rows()[static_cast<size_t>(r) * n + c]);
            if (f.q() <= 10)
                os << idx;
            else
                os << (c ? " " : "") << idx;
        }
        out.push_back(os.str());
    }
    return out;
}

json subspace_record(const Subspace& s) {
    json basis = json::array();
    for (const auto& e : s.basis_elements()) basis.push_back(elem_literal(e));
    return json{{"basis", basis}, {"dim", s.dim()}, {"matrix", matrix_strings(s)}};
}

json subspace_record(const Subspace& s, const std::vector<u64>& generator_exponents) {
    json basis = json::array();
    for (u64 k : generator_exponents) basis.push_back(elem_literal_from_exponent(k));
    return json{{"basis", basis}, {"dim", s.dim()}, {"matrix", matrix_strings(s)}};
}

namespace {

json flag_json_impl(const Flag& f, const std::vector<std::vector<u64>>* exponents) {
    const FieldCtx& F = f.field();
    json subs = json::array();
    for (int i = 0; i < f.length(); ++i) {
        json basis = json::array();
        if (exponents) {
            for (u64 k : (*exponents)[i]) basis.push_back(elem_literal_from_exponent(k));
        } else {
            for (const auto& e : f.subspace(i).basis_elements()) basis.push_back(elem_literal(e));
        }
        subs.push_back(json{{"basis", basis}});
    }
    return json{{"q", F.q()}, {"n", F.n()}, {"modulus", F.modulus()}, {"subspaces", subs}};
}

}  // namespace

json flag_to_json(const Flag& f) { return flag_json_impl(f, nullptr); }

json flag_to_json(const ConstructedFlag& cf) { return flag_json_impl(cf.flag, &cf.generator_exponents); }

LoadedFlag flag_from_json(const json& j, u64 table_cap, bool allow_tableless) {
    require(j.is_object(), "flag file must be a JSON object");
    require(j.contains("q") && j.contains("n") && j.contains("subspaces"), "flag file needs q, n and subspaces");
    u64 q = j.at("q").get<u64>();
    int n = j.at("n").get<int>();
    std::vector<int> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<int>>();

    LoadedFlag out;
    out.ctx = FieldCtx::create(make_field_params(q, n, modulus, table_cap, allow_tableless));

    const auto& subs = j.at("subspaces");
    require(subs.is_array() && !subs.empty(), "flag file needs a nonempty subspace list");
    std::vector<Subspace> spaces;
    for (const auto& rec : subs) {
        require(rec.is_object() && rec.contains("basis"), "each subspace needs a basis list");
        std::vector<FieldElem> gens;
        for (const auto& lit : rec.at("basis")) gens.push_back(parse_elem_literal(*out.ctx, lit.get<std::string>()));
        spaces.push_back(Subspace::span(out.ctx, gens));
    }
    out.flag = Flag::make(std::move(spaces));
    return out;
}

namespace {

bool scalar_like(const json& v) { return v.is_number() || v.is_string() || v.is_boolean() || v.is_null(); }

std::string scalar_str(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void flatten(const json& v, const std::string& path, std::ostringstream& os) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
        return;
    }
    if (v.is_array()) {
        bool all_scalar = std::all_of(v.begin(), v.end(), scalar_like);
        if (all_scalar) {
            os << path << ",";
            for (size_t i = 0; i < v.size(); ++i) os << (i ? ";" : "") << scalar_str(v[i]);
            os << "\n";
            return;
        }
        for (size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i), os);
        return;
    }
    os << path << "," << scalar_str(v) << "\n";
}

}  // namespace

std::string to_csv(const json& report) {
    std::ostringstream os;
    os << "key,value\n";
    flatten(report, "", os);
    return os.str();
}

}  // namespace flagcodes::io
