#include "invol/classify.hpp"

#include <algorithm>

#include "invol/cotree.hpp"
#include "invol/errors.hpp"

namespace invol {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::EmptyQ1:
      return "EMPTY_Q1";
    case Verdict::CompletePlusIsolated:
      return "COMPLETE_PLUS_ISOLATED_N1_1";
    case Verdict::MinimalN2_2:
      return "MINIMAL_N2_2";
    case Verdict::NoBipartitionQge3:
      return "NO_BIPARTITION_QGE3";
    case Verdict::OutOfScope:
      return "OUT_OF_SCOPE";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view s) {
  for (Verdict v : {Verdict::EmptyQ1, Verdict::CompletePlusIsolated,
                    Verdict::MinimalN2_2, Verdict::NoBipartitionQge3,
                    Verdict::OutOfScope})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

namespace {

int verdict_bound(Verdict v) {
  switch (v) {
    case Verdict::EmptyQ1:
      return 1;
    case Verdict::NoBipartitionQge3:
      return 3;
    default:
      // Every remaining verdict is reached only by graphs with an edge.
      return 2;
  }
}

Classification make(const Graph& g, Verdict v, Certificate cert,
                    std::string note = {}) {
  Classification c;
  c.verdict = v;
  c.certificate = std::move(cert);
  c.q_lower_bound = std::max(verdict_bound(v), unique_path_bound(g));
  c.note = std::move(note);
  return c;
}

std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  return vs;
}

void remap(std::vector<Vertex>& vs, const std::vector<Vertex>& labels) {
  for (auto& v : vs) v = labels[v];
}

// Rewrites every vertex label of a certificate computed on an induced
// subgraph into the parent graph's labels.
Certificate remap(Certificate cert, const std::vector<Vertex>& labels) {
  std::visit(
      [&labels](auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Edgeless>) {
          remap(c.vertices, labels);
        } else if constexpr (std::is_same_v<T, IsolatedSplit>) {
          remap(c.clique, labels);
          remap(c.isolated, labels);
        } else if constexpr (std::is_same_v<T, BlockCertificate>) {
          for (auto& b : c.partition.blocks) {
            remap(b.a_side, labels);
            remap(b.b_side, labels);
          }
          remap(c.partition.clique, labels);
          remap(c.isolated, labels);
        } else if constexpr (std::is_same_v<T, TwoCliques>) {
          remap(c.first, labels);
          remap(c.second, labels);
          remap(c.isolated, labels);
        } else if constexpr (std::is_same_v<T, PathCertificate>) {
          c.x = labels[c.x];
          c.y = labels[c.y];
        } else if constexpr (std::is_same_v<T, InducedP4>) {
          for (auto& v : c.path) v = labels[v];
        } else if constexpr (std::is_same_v<T, Coclique3>) {
          for (auto& v : c.vertices) v = labels[v];
          std::sort(c.vertices.begin(), c.vertices.end());
        } else if constexpr (std::is_same_v<T, ComponentReport>) {
          for (auto& comp : c.components) remap(comp, labels);
        }
      },
      cert);
  return cert;
}

}  // namespace

Classification classify_connected(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw PreconditionError("classify_connected requires n >= 1");
  if (!is_connected(g))
    throw PreconditionError("classify_connected requires a connected graph");

  if (n == 1) return make(g, Verdict::EmptyQ1, Edgeless{{0}});
  if (g.is_complete())
    return make(g, Verdict::CompletePlusIsolated,
                IsolatedSplit{iota_vertices(n), {}});

  auto tree = build_cotree(g);
  if (auto* p4 = std::get_if<InducedP4>(&tree))
    return make(g, Verdict::OutOfScope, *p4);

  auto extracted = extract_block_form(std::get<Cotree>(tree), g);
  if (auto* cc = std::get_if<Coclique3>(&extracted))
    return make(g, Verdict::OutOfScope, *cc);

  auto& part = std::get<BlockPartition>(extracted);
  if (part.blocks.size() == 1 && part.clique.size() == 1) {
    // Any a-side vertex reaches any b-side vertex only through the apex.
    const auto& blk = part.blocks.front();
    auto path = count_shortest_paths(g, blk.a_side.front(), blk.b_side.front());
    return make(g, Verdict::NoBipartitionQge3, *path);
  }
  return make(g, Verdict::MinimalN2_2, BlockCertificate{std::move(part), {}});
}

Classification classify(const Graph& g) {
  const int n = g.order();
  if (n == 0) {
    Classification c = make(g, Verdict::EmptyQ1, Edgeless{});
    c.q_lower_bound = 1;
    c.note = "degenerate: n = 0";
    return c;
  }
  auto comps = components(g);
  if (comps.size() == 1) return classify_connected(g);

  std::vector<std::vector<Vertex>> nontrivial;
  std::vector<Vertex> isolated;
  for (auto& comp : comps) {
    if (comp.size() == 1)
      isolated.push_back(comp.front());
    else
      nontrivial.push_back(comp);
  }

  if (nontrivial.empty())
    return make(g, Verdict::EmptyQ1, Edgeless{std::move(isolated)});

  if (nontrivial.size() == 1) {
    const auto& labels = nontrivial.front();
    Classification inner = classify_connected(g.induced(labels));
    Certificate cert = remap(std::move(inner.certificate), labels);
    switch (inner.verdict) {
      case Verdict::CompletePlusIsolated:
        return make(g, Verdict::CompletePlusIsolated,
                    IsolatedSplit{labels, std::move(isolated)});
      case Verdict::MinimalN2_2: {
        auto& bc = std::get<BlockCertificate>(cert);
        bc.isolated = std::move(isolated);
        return make(g, Verdict::MinimalN2_2, std::move(cert));
      }
      default:
        return make(g, Verdict::OutOfScope, std::move(cert),
                    "the only non-trivial component is " +
                        std::string(to_string(inner.verdict)));
    }
  }

  if (nontrivial.size() == 2) {
    auto complete = [&g](const std::vector<Vertex>& c) {
      return g.induced(c).is_complete();
    };
    if (complete(nontrivial[0]) && complete(nontrivial[1]))
      return make(g, Verdict::MinimalN2_2,
                  TwoCliques{nontrivial[0], nontrivial[1], std::move(isolated)});
    return make(g, Verdict::OutOfScope,
                ComponentReport{std::move(comps),
                                "two non-trivial components, not both complete"});
  }

  return make(g, Verdict::OutOfScope,
              ComponentReport{std::move(comps),
                              "more than two non-trivial components"});
}

std::optional<int> q_upper_bound_report(const Classification& c) {
  switch (c.verdict) {
    case Verdict::EmptyQ1:
      return 1;
    case Verdict::CompletePlusIsolated:
    case Verdict::MinimalN2_2:
      return 2;
    default:
      return std::nullopt;
  }
}

}  // namespace invol
