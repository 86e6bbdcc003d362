#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "invol/block_form.hpp"
#include "invol/graph.hpp"

namespace invol {

/// Minimal multiplicity bipartition verdicts.
enum class Verdict {
  EmptyQ1,               // no edges: one distinct eigenvalue
  CompletePlusIsolated,  // minimal bipartition [n-1, 1]
  MinimalN2_2,           // minimal bipartition [n-2, 2]
  NoBipartitionQge3,     // (K_a ∪ K_b) ∇ K_1: a unique 2-path forces q >= 3
  OutOfScope,            // neither [n-1,1] nor [n-2,2]; q not determined
};

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view s);

struct Edgeless {
  std::vector<Vertex> vertices;
};

/// A clique plus isolated vertices.
struct IsolatedSplit {
  std::vector<Vertex> clique;
  std::vector<Vertex> isolated;
};

/// A connected block-form part plus isolated vertices.
struct BlockCertificate {
  BlockPartition partition;
  std::vector<Vertex> isolated;
};

/// K_a ∪ K_b ∪ isolated vertices, a, b >= 2.
struct TwoCliques {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  std::vector<Vertex> isolated;
};

/// Component structure of a disconnected graph outside every positive shape.
struct ComponentReport {
  std::vector<std::vector<Vertex>> components;
  std::string reason;
};

using Certificate =
    std::variant<Edgeless, IsolatedSplit, BlockCertificate, TwoCliques,
                 PathCertificate, InducedP4, Coclique3, ComponentReport>;

struct Classification {
  Verdict verdict = Verdict::OutOfScope;
  Certificate certificate;
  /// max(unique_path_bound(g), bound implied by the verdict).
  int q_lower_bound = 1;
  std::string note;
};

/// Decision procedure for connected graphs, n >= 1:
///   n = 1                       -> EmptyQ1
///   complete                    -> CompletePlusIsolated
///   induced P4                  -> OutOfScope (P4 witness)
///   3-coclique                  -> OutOfScope (coclique witness)
///   (K_a ∪ K_b) ∇ K_1           -> NoBipartitionQge3 (unique 2-path)
///   any other block form        -> MinimalN2_2
/// Throws PreconditionError for disconnected or empty input.
Classification classify_connected(const Graph& g);

/// Any graph. Disconnected graphs follow the component characterization:
/// two non-trivial cliques plus isolated vertices, or one [n-2,2] component
/// plus isolated vertices, are MinimalN2_2.
Classification classify(const Graph& g);

/// 1 for EmptyQ1, 2 for the two bipartition verdicts, otherwise unknown.
std::optional<int> q_upper_bound_report(const Classification& c);

}  // namespace invol
