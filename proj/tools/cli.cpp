#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "invol/block_form.hpp"
#include "invol/classify.hpp"
#include "invol/construct.hpp"
#include "invol/cotree.hpp"
#include "invol/dsl.hpp"
#include "invol/errors.hpp"
#include "invol/graph_io.hpp"
#include "invol/json_io.hpp"
#include "invol/matrix.hpp"
#include "invol/verify.hpp"
#include "selftest.hpp"

namespace invol::cli {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string command;
  std::optional<std::string> dsl;
  std::optional<std::string> g6;
  std::optional<std::string> edges;
  std::optional<std::string> out_dir;
  bool json = false;
  bool text = false;
  Tolerances tol;
  std::uint64_t seed = 1;
  int max_n = 6;
  int random_shapes = 200;
  std::optional<std::string> matrix_path;
  std::optional<std::string> witness_path;
  std::optional<int> mult;

  int sources() const { return !!dsl + !!g6 + !!edges; }
};

// A graph with where it came from, for error messages.
struct Input {
  Graph graph;
  std::string origin;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  return read_all(f);
}

std::string with_offset(const ParseError& e) {
  std::string msg = e.what();
  if (e.offset() != ParseError::npos)
    msg += " (at byte " + std::to_string(e.offset()) + ")";
  return msg;
}

// Streams graph6 lines into `fn`; blank lines are skipped. Stops on the
// first malformed line.
template <typename F>
void for_each_graph6(std::istream& is, const std::string& name, F&& fn) {
  std::string line;
  long lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Graph g(0);
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw InputError(name + ": line " + std::to_string(lineno) + ": " +
                       with_offset(e));
    }
    fn(Input{std::move(g), name + ":" + std::to_string(lineno)});
  }
}

// Every graph of the configured source, in input order.
template <typename F>
void for_each_input(const RunConfig& cfg, std::istream& in, F&& fn) {
  if (cfg.dsl) {
    try {
      fn(Input{parse_block_dsl(*cfg.dsl).graph, "dsl"});
    } catch (const ParseError& e) {
      throw InputError("dsl: line 1: " + with_offset(e));
    }
  } else if (cfg.edges) {
    const std::string text = read_source(*cfg.edges, in);
    try {
      fn(Input{parse_edge_list(text), *cfg.edges});
    } catch (const ParseError& e) {
      std::string where;
      if (e.offset() != ParseError::npos) {
        const auto upto = text.substr(0, std::min(e.offset(), text.size()));
        where = "line " +
                std::to_string(1 + std::count(upto.begin(), upto.end(), '\n')) +
                ": ";
      }
      throw InputError(*cfg.edges + ": " + where + e.what());
    }
  } else {
    const std::string name = *cfg.g6 == "-" ? "stdin" : *cfg.g6;
    if (*cfg.g6 == "-") {
      for_each_graph6(in, name, fn);
    } else {
      std::ifstream f(*cfg.g6, std::ios::binary);
      if (!f) throw InputError("cannot open '" + *cfg.g6 + "'");
      for_each_graph6(f, name, fn);
    }
  }
}

// The one graph of a single-graph command.
Input single_input(const RunConfig& cfg, std::istream& in) {
  std::optional<Input> first;
  for_each_input(cfg, in, [&](Input x) {
    if (first)
      throw InputError(x.origin + ": " + cfg.command +
                       " takes a single graph");
    first = std::move(x);
  });
  if (!first) throw InputError("no graph in input");
  return std::move(*first);
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string join_ints(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

std::string classification_text(const Graph& g, const Classification& c) {
  std::ostringstream os;
  os << to_string(c.verdict) << " n=" << g.order()
     << " q>=" << c.q_lower_bound;
  if (const auto up = q_upper_bound_report(c)) os << " q<=" << *up;
  const Json cert = to_json(c.certificate);
  os << " certificate=" << cert["type"].get<std::string>();
  if (std::holds_alternative<BlockCertificate>(c.certificate))
    os << " shape=" << cert["dsl"].get<std::string>();
  else if (const auto* p4 = std::get_if<InducedP4>(&c.certificate))
    os << " path=" << join_ints({p4->path.begin(), p4->path.end()});
  else if (const auto* cc = std::get_if<Coclique3>(&c.certificate))
    os << " vertices=" << join_ints({cc->vertices.begin(), cc->vertices.end()});
  else if (const auto* pc = std::get_if<PathCertificate>(&c.certificate))
    os << " endpoints=" << pc->x << "," << pc->y
       << " distance=" << pc->distance;
  if (!c.note.empty()) os << " note=\"" << c.note << "\"";
  return os.str();
}

Json classification_json(const Graph& g, const Classification& c) {
  Json j = to_json(c);
  Json out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out[it.key()] = it.value();
    if (it.key() == "schema") out["n"] = g.order();
  }
  return out;
}

int cmd_classify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  for_each_input(cfg, in, [&](const Input& x) {
    const Classification c = classify(x.graph);
    if (cfg.text)
      out << classification_text(x.graph, c) << '\n';
    else
      emit(out, classification_json(x.graph, c));
  });
  return kExitOk;
}

std::string cotree_text(const Cotree& t) {
  if (t.is_leaf()) return std::to_string(t.vertex);
  std::string s = "(";
  const char* sep = t.kind == CotreeKind::Join ? " * " : " + ";
  for (std::size_t i = 0; i < t.children.size(); ++i)
    s += (i ? sep : "") + cotree_text(t.children[i]);
  return s + ")";
}

int cmd_cotree(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  for_each_input(cfg, in, [&](const Input& x) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["n"] = x.graph.order();
    if (x.graph.order() == 0) throw InputError(x.origin + ": empty graph");
    const auto r = build_cotree(x.graph);
    if (const auto* p4 = std::get_if<InducedP4>(&r)) {
      j["cograph"] = false;
      j["induced_p4"] = p4->path;
      if (cfg.text)
        out << "not a cograph: induced P4 " << join_ints({p4->path.begin(), p4->path.end()})
            << '\n';
      else
        emit(out, j);
      return;
    }
    const Cotree& t = std::get<Cotree>(r);
    j["cograph"] = true;
    j["cotree"] = to_json(t);
    j["block_form"] = nullptr;
    if (t.kind != CotreeKind::Union) {
      const auto bf = extract_block_form(t, x.graph);
      if (const auto* p = std::get_if<BlockPartition>(&bf))
        j["block_form"] = to_json(p->shape());
    }
    if (cfg.text) {
      out << cotree_text(t);
      if (!j["block_form"].is_null())
        out << "  block form " << j["block_form"]["dsl"].get<std::string>();
      out << '\n';
    } else {
      emit(out, j);
    }
  });
  return kExitOk;
}

int cmd_bound(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  for_each_input(cfg, in, [&](const Input& x) {
    const int b = unique_path_bound(x.graph);
    const auto path = longest_unique_path(x.graph);
    if (cfg.text) {
      out << "q>=" << b;
      if (path)
        out << " unique path " << path->x << "-" << path->y << " length "
            << path->distance;
      out << '\n';
      return;
    }
    Json j;
    j["schema"] = kSchemaVersion;
    j["n"] = x.graph.order();
    j["unique_path_bound"] = b;
    j["certificate"] = path ? to_json(Certificate{*path}) : Json(nullptr);
    emit(out, j);
  });
  return kExitOk;
}

void write_text_file(const fs::path& p, const std::string& body) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + p.string() + "'");
  f << body;
  if (!f) throw std::runtime_error("write failed: '" + p.string() + "'");
}

int cmd_construct(const RunConfig& cfg, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  const Input x = single_input(cfg, in);
  const Classification cls = classify(x.graph);
  Construction c;
  try {
    c = construct(x.graph, cls);
  } catch (const NotConstructible& e) {
    Json j = classification_json(x.graph, cls);
    j["error"] = e.what();
    emit(out, j);
    err << "not constructible: " << to_string(cls.verdict) << ": " << e.what()
        << '\n';
    return kExitNotConstructible;
  }
  const VerifyReport report = verify_construction(c, x.graph, cfg.tol);

  std::optional<std::string> matrix_file;
  std::optional<std::string> raw_file;
  if (cfg.out_dir) {
    const fs::path dir(*cfg.out_dir);
    fs::create_directories(dir);
    matrix_file = "matrix.txt";
    write_text_file(dir / *matrix_file, format_matrix(c.matrix));
    if (c.adjacency_form) {
      raw_file = "raw_matrix.txt";
      write_text_file(dir / *raw_file, format_matrix(*c.adjacency_form));
    }
    write_text_file(dir / "witness.json",
                    witness_json(c, matrix_file, raw_file).dump(2) + "\n");
  }

  if (cfg.text) {
    out << (report.pass ? "pass" : "fail") << " n=" << x.graph.order()
        << " verdict=" << to_string(cls.verdict) << " mult(-1)="
        << (report.neg_one_multiplicity ? std::to_string(*report.neg_one_multiplicity)
                                        : "?")
        << " residual=" << report.involution_residual << '\n';
    for (const auto& f : report.failures) out << "  " << f << '\n';
  } else {
    Json j;
    j["schema"] = kSchemaVersion;
    j["n"] = x.graph.order();
    j["verdict"] = std::string(to_string(cls.verdict));
    j["witness"] = witness_json(c, matrix_file, raw_file);
    if (!cfg.out_dir) j["matrix"] = format_matrix(c.matrix);
    j["verify"] = to_json(report);
    emit(out, j);
  }
  if (!report.pass) {
    err << "verify failed";
    if (!report.failures.empty()) err << ": " << report.failures.front();
    err << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

Matrix load_matrix(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return parse_matrix(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + with_offset(e));
  }
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out,
               std::ostream& err) {
  if (!!cfg.matrix_path == !!cfg.witness_path)
    throw InputError("verify needs exactly one of --matrix, --witness");
  const Input x = single_input(cfg, in);

  VerifyReport report;
  if (cfg.witness_path) {
    Json j;
    {
      std::ifstream f(*cfg.witness_path, std::ios::binary);
      if (!f) throw InputError("cannot open '" + *cfg.witness_path + "'");
      j = Json::parse(f, nullptr, false);
      if (j.is_discarded())
        throw InputError(*cfg.witness_path + ": malformed JSON");
    }
    if (j.contains("u") && j["u"].is_array()) {
      WitnessPair w;
      try {
        w = witness_from_json(j);
      } catch (const ParseError& e) {
        throw InputError(*cfg.witness_path + ": " + e.what());
      } catch (const PreconditionError& e) {
        throw InputError(*cfg.witness_path + ": " + e.what());
      }
      if (static_cast<int>(w.u.size()) != x.graph.order())
        throw InputError(*cfg.witness_path + ": witness has " +
                         std::to_string(w.u.size()) + " rows, graph has " +
                         std::to_string(x.graph.order()) + " vertices");
      report = verify_witness(w, x.graph, cfg.tol);
    } else {
      if (!j.contains("matrix_file") || !j["matrix_file"].is_string())
        throw InputError(*cfg.witness_path + ": no u/v and no matrix_file");
      const fs::path mp = fs::path(*cfg.witness_path).parent_path() /
                          j["matrix_file"].get<std::string>();
      const int mult = cfg.mult ? *cfg.mult : j.value("mult_neg1", 2);
      report = verify_matrix(load_matrix(mp.string(), in), x.graph, mult, cfg.tol);
    }
  } else {
    report = verify_matrix(load_matrix(*cfg.matrix_path, in), x.graph,
                           cfg.mult.value_or(2), cfg.tol);
  }

  if (cfg.text) {
    out << (report.pass ? "pass" : "fail")
        << " residual=" << report.involution_residual
        << " pattern_ok=" << (report.pattern_ok ? "true" : "false");
    if (report.gram_ok) out << " gram_ok=" << (*report.gram_ok ? "true" : "false");
    if (report.neg_one_multiplicity)
      out << " mult(-1)=" << *report.neg_one_multiplicity;
    out << '\n';
    for (const auto& f : report.failures) out << "  " << f << '\n';
  } else {
    Json j;
    j["schema"] = kSchemaVersion;
    const Json body = to_json(report);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    emit(out, j);
  }
  if (!report.pass) {
    err << "verify failed\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  SelftestOptions opts;
  opts.max_n = cfg.max_n;
  opts.seed = cfg.seed;
  opts.random_shapes = cfg.random_shapes;
  opts.tol = cfg.tol;
  SelftestReport r;
  if (cfg.json) {
    r = run_selftest(opts);
    Json j;
    j["schema"] = kSchemaVersion;
    j["max_n"] = opts.max_n;
    j["seed"] = opts.seed;
    j["graphs"] = r.graphs;
    j["connected_graphs"] = r.connected;
    j["agreements"] = r.agreements;
    j["connected_agreements"] = r.connected_agreements;
    j["witnesses_verified"] = r.constructions;
    j["random_shapes"] = r.random_shapes;
    j["failures"] = r.failures;
    j["verdict"] = r.ok() ? "pass" : "fail";
    emit(out, j);
  } else {
    r = run_selftest(opts, &out);
    out << (r.ok() ? "selftest: pass" : "selftest: FAIL") << '\n';
  }
  return r.ok() ? kExitOk : kExitFailure;
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  auto* dsl = sub->add_option("--dsl", cfg.dsl, "block expression, e.g. \"(K1+K2)*K3\"");
  auto* g6 = sub->add_option("--g6", cfg.g6, "graph6 file, one graph per line, or - for stdin");
  auto* edges = sub->add_option("--edges", cfg.edges, "edge list file \"n i j ...\", or -");
  dsl->excludes(g6)->excludes(edges);
  g6->excludes(edges);
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  auto* json = sub->add_flag("--json", cfg.json, "JSON output (default)");
  auto* text = sub->add_flag("--text", cfg.text, "human-readable output");
  json->excludes(text);
}

void add_tolerance_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tol-involution", cfg.tol.involution,
                  "max |A^2 - I| entry")
      ->check(CLI::PositiveNumber);
  sub->add_option("--tol-zero", cfg.tol.zero, "zero-entry threshold")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Minimal multiplicity bipartitions of graphs with two distinct eigenvalues",
               "invol"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "verdict and certificate per graph");
  auto* construct_cmd = app.add_subcommand("construct", "build and verify a witness matrix");
  auto* verify_cmd = app.add_subcommand("verify", "check a matrix or witness against a graph");
  auto* cotree_cmd = app.add_subcommand("cotree", "cotree and block form");
  auto* bound_cmd = app.add_subcommand("bound", "unique shortest path lower bound on q");
  auto* selftest_cmd = app.add_subcommand("selftest", "exhaustive and randomized self checks");

  for (auto* sub : {classify_cmd, construct_cmd, verify_cmd, cotree_cmd, bound_cmd}) {
    add_input_options(sub, cfg);
    add_output_options(sub, cfg);
  }
  for (auto* sub : {construct_cmd, verify_cmd, selftest_cmd})
    add_tolerance_options(sub, cfg);
  add_output_options(selftest_cmd, cfg);

  construct_cmd->add_option("--out", cfg.out_dir,
                            "directory for witness.json, matrix.txt, raw_matrix.txt");
  verify_cmd->add_option("--matrix", cfg.matrix_path, "matrix text file");
  verify_cmd->add_option("--witness", cfg.witness_path, "witness.json from construct");
  verify_cmd->add_option("--mult", cfg.mult, "expected multiplicity of -1")
      ->check(CLI::NonNegativeNumber);
  selftest_cmd->add_option("--seed", cfg.seed, "seed of the randomized suite");
  selftest_cmd->add_option("--max-n", cfg.max_n, "largest exhaustive order")
      ->check(CLI::Range(0, 7));
  selftest_cmd->add_option("--random", cfg.random_shapes, "randomized block forms")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitParse;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (cfg.command != "selftest" && cfg.sources() != 1) {
    err << "invol " << cfg.command << ": exactly one of --dsl, --g6, --edges is required\n";
    return kExitParse;
  }
  if (cfg.command == "selftest") cfg.text = !cfg.json;

  try {
    if (cfg.command == "classify") return cmd_classify(cfg, in, out);
    if (cfg.command == "construct") return cmd_construct(cfg, in, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, in, out, err);
    if (cfg.command == "cotree") return cmd_cotree(cfg, in, out);
    if (cfg.command == "bound") return cmd_bound(cfg, in, out);
    return cmd_selftest(cfg, out);
  } catch (const InputError& e) {
    out.flush();
    err << "invol " << cfg.command << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    out.flush();
    err << "invol " << cfg.command << ": " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace invol::cli
