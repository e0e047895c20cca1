#include "sympl/harness.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using sympl::io::Json;
namespace io = sympl::io;
namespace harness = sympl::harness;

struct Options {
  std::string field = "q";
  std::uint32_t p = 0;
  std::size_t n = 4;
  std::size_t k = 1;
  long bound = 10;
  std::uint64_t seed = harness::SuiteConfig{}.seed;
  std::string suite = "all";
  std::size_t count = 0;
  unsigned threads = 0;
  std::string input = "-";
  std::string output;
};

class Emitter {
 public:
  explicit Emitter(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw sympl::UsageError("cannot open output file " + path);
    }
  }
  void line(const Json& j) { out() << j.dump() << '\n'; }

 private:
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  std::ofstream file_;
};

/// Line-delimited JSON documents from a file or stdin ("-"); a single multi-line document is also accepted.
std::vector<Json> read_documents(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw sympl::UsageError("cannot open input file " + path);
    buffer << in.rdbuf();
  }
  const std::string text = buffer.str();
  std::vector<Json> docs;
  try {
    docs.push_back(Json::parse(text));
    return docs;
  } catch (const nlohmann::json::parse_error&) {
  }
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      docs.push_back(Json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
      throw sympl::ParseError(std::string("invalid JSON input: ") + e.what());
    }
  }
  if (docs.empty()) throw sympl::ParseError("no JSON input");
  return docs;
}

template <class Field>
sympl::AdelicAutomorphism<Field> automorphism_of(const Field& K, const Json& doc, std::size_t N) {
  if (doc.contains("automorphism")) {
    auto A = io::parse_automorphism(K, doc.at("automorphism"));
    if (A.dim() != N) throw sympl::DimensionError("automorphism dimension differs from N");
    return A;
  }
  return sympl::AdelicAutomorphism<Field>::identity(N);
}

/// basis / decompose / flags share the construction step.
Json symplectic_command(const std::string& command, const Json& doc) {
  return std::visit(
      [&](const auto& space) -> Json {
        const auto& K = space.field;
        auto A = automorphism_of(K, doc, space.N);
        auto run = sympl::symplectic_basis(A, space);
        Json out{{"basis", io::basis_json(K, run.basis)}};
        if (command == "basis") {
          out["report"] = io::report_json(sympl::verify_bounds(A, space, run.basis));
          out["levels"] = io::levels_json(K, run.levels);
        } else if (command == "decompose") {
          out["planes"] = io::subspaces_json(K, sympl::hyperbolic_decomposition(space, run.basis));
        } else {
          auto flags = sympl::isotropic_flags(A, space, run.basis);
          auto report = sympl::verify_bounds(A, space, run.basis);
          Json order = Json::array();
          for (auto i : flags.order) order.push_back(i + 1);
          out["order"] = std::move(order);
          out["V"] = io::subspaces_json(K, flags.V);
          out["W"] = io::subspaces_json(K, flags.W);
          Json bounds = Json::array();
          for (const auto& f : report.flags)
            bounds.push_back(Json{{"n", f.n}, {"lhs", io::value_json(f.lhs, true)}, {"satisfied", f.satisfied}});
          out["bounds"] = std::move(bounds);
          out["rhsTheorem"] = io::value_json(report.rhsTheorem, true);
          out["isotropic"] = report.flagsIsotropic;
        }
        return out;
      },
      io::parse_instance(doc));
}

Json graph_command(const Json& doc) {
  auto g = io::parse_graph(doc);
  const std::size_t k = doc.contains("k") ? doc.at("k").get<std::size_t>() : g.size() / 2;
  Json out{{"graph", io::graph_json(g)}, {"k", k}};
  try {
    auto pairs = sympl::disjoint_disconnected_pairs(g, k);
    out["pairs"] = io::pairs_json(pairs);
    out["pairCount"] = pairs.size();
  } catch (const sympl::CliqueViolation& e) {
    Json clique = Json::array();
    for (int v : e.clique()) clique.push_back(v + 1);
    out["cliqueViolation"] = Json{{"message", e.what()}, {"clique", std::move(clique)}};
  }
  if (g.size() <= 12) out["oracle"] = sympl::oracle_max_disjoint_pairs(g);
  out["expected"] = sympl::lemma_pair_count(k);
  return out;
}

Json heights_command(const Json& doc) {
  return std::visit(
      [&](const auto& K) -> Json {
        using Field = std::decay_t<decltype(K)>;
        Json out;
        auto with_A = [&](std::size_t N) { return automorphism_of(K, doc, N); };
        if (doc.contains("vector")) {
          auto x = io::parse_vector(K, doc.at("vector"));
          out["kind"] = "vector";
          out["height"] = io::value_json(sympl::height_vector(K, with_A(x.size()), x), true);
        } else if (doc.contains("subspace")) {
          auto X = io::parse_matrix(K, doc.at("subspace"));
          auto V = sympl::Subspace<Field>::from_basis(K, X);
          out["kind"] = "subspace";
          out["height"] = io::value_json(sympl::height_subspace(K, with_A(X.rows()), V), true);
        } else if (doc.contains("matrix")) {
          auto M = io::parse_matrix(K, doc.at("matrix"));
          if (!doc.contains("orientation")) throw sympl::UsageError("matrix heights need \"orientation\"");
          const std::string o = doc.at("orientation").get<std::string>();
          if (o != "columns" && o != "rows") throw sympl::UsageError("orientation must be \"columns\" or \"rows\"");
          auto orientation = o == "rows" ? sympl::Orientation::Rows : sympl::Orientation::Columns;
          const std::size_t N = orientation == sympl::Orientation::Rows ? M.cols() : M.rows();
          out["kind"] = "matrix";
          out["height"] = io::value_json(sympl::height_matrix(K, with_A(N), M, orientation), true);
        } else if (doc.contains("form")) {
          auto F = io::parse_matrix(K, doc.at("form"));
          out["kind"] = "form";
          out["height"] = io::value_json(sympl::form_height(K, F), true);
        } else {
          throw sympl::UsageError("heights input needs one of \"vector\", \"subspace\", \"matrix\", \"form\"");
        }
        return out;
      },
      io::parse_field(doc));
}

int verify_command(const Options& opt, Emitter& emit) {
  std::vector<std::string> names;
  if (opt.suite == "all")
    names = harness::suite_names();
  else
    names = {opt.suite};
  harness::SuiteConfig cfg;
  cfg.count = opt.count;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  bool ok = true;
  for (const auto& name : names) {
    cfg.suite = name;
    auto report = harness::run_suite(cfg);
    for (auto& rec : report.records) {
      rec["suite"] = name;
      emit.line(rec);
    }
    Json summary = report.summary();
    summary["type"] = "summary";
    emit.line(summary);
    std::cerr << name << ": " << report.passed << "/" << report.total << " passed in " << report.seconds << " s"
              << (report.ok() ? "" : "  FAILED") << '\n';
    ok = ok && report.ok();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symplectic bases of small height over Q and F_p(t)"};
  app.require_subcommand(1);
  Options opt;

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", opt.field, "Ground field: q or fp(t)")->check(CLI::IsMember({"q", "Q", "fp(t)"}));
    cmd->add_option("--p", opt.p, "Characteristic for fp(t)");
  };
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "Input JSON file, - for stdin");
    cmd->add_option("--output", opt.output, "Write JSON lines to this file instead of stdout");
  };

  auto* gen = app.add_subcommand("gen", "Generate a random regular instance");
  add_field(gen);
  gen->add_option("--n", opt.n, "Ambient dimension N");
  gen->add_option("--k", opt.k, "Half-dimension of Z");
  gen->add_option("--bound", opt.bound, "Coefficient bound (degree bound over fp(t))");
  gen->add_option("--seed", opt.seed, "64-bit seed");
  gen->add_option("--count", opt.count, "Number of instances (consecutive seeds)");
  gen->add_option("--output", opt.output, "Write JSON lines to this file instead of stdout");

  std::vector<CLI::App*> per_document;
  for (const char* name : {"basis", "decompose", "flags"}) {
    auto* cmd = app.add_subcommand(name, std::string(name) == "basis"       ? "Symplectic basis and bound report"
                                         : std::string(name) == "decompose" ? "Hyperbolic planes of the basis"
                                                                            : "Isotropic flags and their bounds");
    add_io(cmd);
    per_document.push_back(cmd);
  }
  auto* graph = app.add_subcommand("graph-lemma", "Disjoint disconnected pairs of a graph and the oracle count");
  add_io(graph);
  auto* heights = app.add_subcommand("heights", "Exact height of a vector, subspace, matrix or form");
  add_io(heights);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", opt.suite, "Suite name or all");
  verify->add_option("--count", opt.count, "Override the suite's instance count");
  verify->add_option("--seed", opt.seed, "64-bit seed");
  verify->add_option("--threads", opt.threads, "Worker threads (capped by SYMPL_THREADS)");
  verify->add_option("--output", opt.output, "Write JSON lines to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    Emitter emit(opt.output);
    if (gen->parsed()) {
      const std::size_t count = opt.count ? opt.count : 1;
      for (std::size_t i = 0; i < count; ++i) {
        harness::GenParams params{sympl::make_field(opt.field, opt.p), opt.n, opt.k, opt.bound, opt.seed + i};
        std::visit([&](const auto& space) { emit.line(io::instance_json(space)); }, harness::generate_instance(params));
      }
      return 0;
    }
    if (verify->parsed()) return verify_command(opt, emit);
    for (const auto& doc : read_documents(opt.input)) {
      if (graph->parsed())
        emit.line(graph_command(doc));
      else if (heights->parsed())
        emit.line(heights_command(doc));
      else
        for (auto* cmd : per_document)
          if (cmd->parsed()) emit.line(symplectic_command(cmd->get_name(), doc));
    }
    return 0;
  } catch (const sympl::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const sympl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "JSON error: " << e.what() << '\n';
    return 2;
  }
}
