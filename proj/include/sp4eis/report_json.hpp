#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sp4eis/constant_term.hpp"
#include "sp4eis/scenario.hpp"
#include "sp4eis/theorems.hpp"

namespace sp4eis {

/// Key order is insertion order, so equal inputs give byte-identical output.
using Json = nlohmann::ordered_json;

inline constexpr const char *kReportSchema = "sp4eis.report/1";

Json to_json(const OrderValue &v);
Json to_json(const ConstantTermReport &r);
Json to_json(const ClauseRow &r);
Json to_json(const NumericCheckRow &r);

/// Coset tables for both cases and the full group: words, aliases, lengths,
/// negative sets.
Json weyl_json();
Json normfactor_json(Case cs, const WeylElement &w);

/// Wraps a payload: {"schema", "command", ..., "pass"}.
Json envelope(const std::string &command, Json payload, bool pass);

/// Two-space indentation plus trailing newline.
std::string dump(const Json &j);

}  // namespace sp4eis
