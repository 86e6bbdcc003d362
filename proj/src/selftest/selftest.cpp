#include "selftest.hpp"

#include <algorithm>
#include <exception>

#include "invol/classify.hpp"
#include "invol/construct.hpp"
#include "invol/errors.hpp"
#include "invol/graph_io.hpp"
#include "oracle.hpp"

namespace invol {
namespace {

bool constructible(Verdict v) {
  return v == Verdict::MinimalN2_2 || v == Verdict::CompletePlusIsolated;
}

std::string label(const Graph& g) {
  return g.order() <= kMaxGraph6Order ? encode_graph6(g)
                                      : "n=" + std::to_string(g.order());
}

// Returns an empty string on success.
std::string check_graph(const Graph& g, const Tolerances& tol, bool& built) {
  built = false;
  const Classification cls = classify(g);
  const Verdict expected = oracle::verdict(g);
  if (cls.verdict != expected)
    return "verdict " + std::string(to_string(cls.verdict)) + ", oracle " +
           std::string(to_string(expected));
  if (!constructible(cls.verdict)) {
    try {
      construct(g, cls);
      return "construct accepted " + std::string(to_string(cls.verdict));
    } catch (const NotConstructible&) {
      return {};
    }
  }
  try {
    const Construction c = construct(g, cls);
    const VerifyReport r = verify_construction(c, g, tol);
    built = true;
    if (!r.pass)
      return "verify failed: " + (r.failures.empty() ? "?" : r.failures.front());
  } catch (const std::exception& e) {
    return std::string("construct threw: ") + e.what();
  }
  return {};
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& opts, std::ostream* log) {
  SelftestReport rep;
  const int max_n = std::clamp(opts.max_n, 0, 7);
  for (int n = 1; n <= max_n; ++n) {
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      ++rep.graphs;
      const bool conn = is_connected(g);
      if (conn) ++rep.connected;
      bool built = false;
      const std::string err = check_graph(g, opts.tol, built);
      if (built) ++rep.constructions;
      if (err.empty()) {
        ++rep.agreements;
        if (conn) ++rep.connected_agreements;
      } else {
        rep.failures.push_back(label(g) + ": " + err);
      }
    });
  }
  if (log) {
    auto pct = [](long num, long den) {
      return den == 0 ? 100.0 : 100.0 * static_cast<double>(num) / den;
    };
    *log << "connected graphs n≤" << max_n << " checked: "
         << pct(rep.connected_agreements, rep.connected)
         << "% verdict agreement (" << rep.connected << " graphs)\n";
    *log << "all graphs n≤" << max_n << " checked: "
         << pct(rep.agreements, rep.graphs) << "% verdict agreement ("
         << rep.graphs << " graphs, " << rep.constructions
         << " witnesses verified)\n";
  }

  oracle::Rng rng(opts.seed);
  long random_failures = 0;
  for (int i = 0; i < opts.random_shapes; ++i) {
    const int k = rng.uniform(1, 4);
    int clique = rng.uniform(0, 6);
    if (k == 1 && clique < 2) clique = rng.uniform(2, 6);
    const BlockForm bf = oracle::random_block_form(rng, k, 5, clique);
    const Graph base = realize_block_form(bf);
    const Graph g = relabel(base, oracle::random_permutation(rng, base.order()));
    bool built = false;
    std::string err = check_graph(g, opts.tol, built);
    if (err.empty() && !built) err = "not constructed";
    ++rep.random_shapes;
    if (!err.empty()) {
      ++random_failures;
      rep.failures.push_back(label(g) + " [" + to_dsl(bf) + "]: " + err);
    }
  }
  if (log) {
    *log << "random block forms (seed " << opts.seed << "): "
         << (rep.random_shapes - random_failures) << "/" << rep.random_shapes
         << " verified\n";
    for (const auto& f : rep.failures) *log << "FAIL " << f << "\n";
  }
  return rep;
}

}  // namespace invol
