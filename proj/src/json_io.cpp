#include "invol/json_io.hpp"

#include "invol/errors.hpp"

namespace invol {

Json to_json(const Cotree& t) {
  Json j;
  j["kind"] = std::string(to_string(t.kind));
  if (t.is_leaf()) {
    j["vertex"] = t.vertex;
    return j;
  }
  Json kids = Json::array();
  for (const auto& c : t.children) kids.push_back(to_json(c));
  j["children"] = std::move(kids);
  return j;
}

Cotree cotree_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("cotree json: missing \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "leaf") {
    if (!j.contains("vertex") || !j["vertex"].is_number_integer())
      throw ParseError("cotree json: leaf without integer \"vertex\"");
    return Cotree::leaf(j["vertex"].get<int>());
  }
  CotreeKind k;
  if (kind == "union")
    k = CotreeKind::Union;
  else if (kind == "join")
    k = CotreeKind::Join;
  else
    throw ParseError("cotree json: unknown kind '" + kind + "'");
  if (!j.contains("children") || !j["children"].is_array())
    throw ParseError("cotree json: internal node without \"children\"");
  std::vector<Cotree> kids;
  for (const auto& c : j["children"]) kids.push_back(cotree_from_json(c));
  return Cotree::node(k, std::move(kids));
}

Json to_json(const BlockForm& bf) {
  Json blocks = Json::array();
  for (const auto& b : bf.blocks) blocks.push_back({b.a, b.b});
  return Json{{"blocks", std::move(blocks)},
              {"clique", bf.clique_size},
              {"dsl", to_dsl(bf)}};
}

namespace {

Json partition_json(const BlockPartition& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks) blocks.push_back({b.a_side, b.b_side});
  return Json{{"blocks", std::move(blocks)}, {"clique", p.clique}};
}

}  // namespace

Json to_json(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Edgeless>) {
          return {{"type", "edgeless"}, {"vertices", c.vertices}};
        } else if constexpr (std::is_same_v<T, IsolatedSplit>) {
          return {{"type", "isolated_split"},
                  {"clique", c.clique},
                  {"isolated", c.isolated}};
        } else if constexpr (std::is_same_v<T, BlockCertificate>) {
          Json j = to_json(c.partition.shape());
          j["type"] = "block_form";
          j["vertices"] = partition_json(c.partition);
          j["isolated"] = c.isolated;
          return j;
        } else if constexpr (std::is_same_v<T, TwoCliques>) {
          return {{"type", "two_cliques"},
                  {"cliques", {c.first, c.second}},
                  {"isolated", c.isolated}};
        } else if constexpr (std::is_same_v<T, PathCertificate>) {
          return {{"type", "unique_path"},
                  {"endpoints", {c.x, c.y}},
                  {"distance", c.distance},
                  {"shortest_path_count", c.shortest_path_count}};
        } else if constexpr (std::is_same_v<T, InducedP4>) {
          return {{"type", "induced_p4"}, {"path", c.path}};
        } else if constexpr (std::is_same_v<T, Coclique3>) {
          return {{"type", "coclique3"}, {"vertices", c.vertices}};
        } else {
          return {{"type", "components"},
                  {"components", c.components},
                  {"reason", c.reason}};
        }
      },
      cert);
}

Json to_json(const Classification& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["verdict"] = std::string(to_string(c.verdict));
  j["q_lower_bound"] = c.q_lower_bound;
  const auto upper = q_upper_bound_report(c);
  j["q_upper_bound"] = upper ? Json(*upper) : Json(nullptr);
  j["certificate"] = to_json(c.certificate);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["residual"] = r.involution_residual;
  j["pattern_ok"] = r.pattern_ok;
  j["offending"] =
      r.offending ? Json{r.offending->first, r.offending->second} : Json(nullptr);
  j["gram_ok"] = r.gram_ok ? Json(*r.gram_ok) : Json(nullptr);
  j["mult_neg1"] =
      r.neg_one_multiplicity ? Json(*r.neg_one_multiplicity) : Json(nullptr);
  j["expected_mult_neg1"] = r.expected_neg_one_multiplicity;
  j["eigenvalues"] = r.eigenvalues;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["failures"] = r.failures;
  return j;
}

namespace {

std::string_view kind_name(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::RankTwo:
      return "rank_two";
    case ConstructionKind::CompletePlusIsolated:
      return "complete_plus_isolated";
    case ConstructionKind::TwoCliques:
      return "two_cliques";
  }
  return "?";
}

}  // namespace

Json witness_json(const Construction& c,
                  const std::optional<std::string>& matrix_file,
                  const std::optional<std::string>& raw_matrix_file) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = std::string(kind_name(c.kind));
  j["n"] = c.matrix.order();
  j["mult_neg1"] = c.expected_neg_one_multiplicity;
  if (c.witness) {
    j["u"] = c.witness->u;
    j["v"] = c.witness->v;
    j["scale"] = c.witness->scale;
  } else {
    j["u"] = nullptr;
    j["v"] = nullptr;
    j["scale"] = nullptr;
  }
  j["matrix_file"] = matrix_file ? Json(*matrix_file) : Json(nullptr);
  if (raw_matrix_file) j["raw_matrix_file"] = *raw_matrix_file;
  return j;
}

WitnessPair witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v") ||
      !j["u"].is_array() || !j["v"].is_array())
    throw ParseError("witness json: \"u\" and \"v\" arrays required");
  try {
    return make_witness(j["u"].get<std::vector<double>>(),
                        j["v"].get<std::vector<double>>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("witness json: ") + e.what());
  }
}

}  // namespace invol
