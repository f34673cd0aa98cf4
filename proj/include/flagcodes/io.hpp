#pragma once

#include <json.hpp>

#include "flagcodes/construct.hpp"

namespace flagcodes::io {

using json = nlohmann::json;

/// Resolve q = p^e and assemble field parameters; q must be a prime power.
FieldParams make_field_params(u64 q, int n, const std::vector<int>& modulus = {},
                              u64 table_cap = u64(1) << 26, bool allow_tableless = false);

/// {"p": ..., "e": ..., "n": ..., "modulus": [...]}
json field_descriptor(const FieldCtx& f);

/// Element literals are "0" or "g^k" with k the discrete log of gamma^k.
FieldElem parse_elem_literal(const FieldCtx& f, const std::string& text);
std::string elem_literal(const FieldElem& x);           // needs exp/log tables
std::string elem_literal_from_exponent(std::optional<u64> exponent);

/// Canonical matrix rows as F_q-digit strings (one character per scalar for
/// q <= 10, space-separated canonical indices otherwise).
std::vector<std::string> matrix_strings(const Subspace& s);

json subspace_record(const Subspace& s);                           // via tables
json subspace_record(const Subspace& s, const std::vector<u64>& generator_exponents);

json flag_to_json(const Flag& f);                                  // via tables
json flag_to_json(const ConstructedFlag& cf);                      // via recorded exponents

struct LoadedFlag {
    std::shared_ptr<const FieldCtx> ctx;
    Flag flag;
};

LoadedFlag flag_from_json(const json& j, u64 table_cap = u64(1) << 26, bool allow_tableless = false);

/// Flatten a report to CSV lines "path,value"; vectors join with semicolons.
std::string to_csv(const json& report);

}  // namespace flagcodes::io
