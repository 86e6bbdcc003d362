#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "invol/block_form.hpp"
#include "invol/classify.hpp"
#include "invol/construct.hpp"
#include "invol/cotree.hpp"
#include "invol/verify.hpp"

namespace invol {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"kind": "join"|"union"|"leaf", "vertex": int?, "children": [...]}
Json to_json(const Cotree& t);
/// Throws ParseError on malformed input.
Cotree cotree_from_json(const Json& j);

Json to_json(const BlockForm& bf);
Json to_json(const Certificate& c);

/// {"schema", "verdict", "q_lower_bound", "q_upper_bound", "certificate",
///  "note"?}
Json to_json(const Classification& c);

/// {"residual", "pattern_ok", "gram_ok", "mult_neg1", "eigenvalues",
///  "verdict", "failures", ...}
Json to_json(const VerifyReport& r);

/// {"schema", "kind", "n", "u", "v", "scale", "matrix_file",
///  "raw_matrix_file"?}; u, v and scale are null without a rank-two witness.
Json witness_json(const Construction& c,
                  const std::optional<std::string>& matrix_file,
                  const std::optional<std::string>& raw_matrix_file = {});

/// Reads u and v back from witness_json output and rebuilds the pair.
/// Throws ParseError when u or v are missing.
WitnessPair witness_from_json(const Json& j);

}  // namespace invol
