// Runs every acceptance criterion at exact arithmetic and prints one pass/fail line per criterion.
// Options: --seed <n> (default: the suite default), --threads <n>.

#include "sympl/harness.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace harness = sympl::harness;

struct Criterion {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
};

std::string counts(const harness::SuiteReport& r) {
  std::ostringstream out;
  out << r.suite << " " << r.passed << "/" << r.total;
  for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i) out << "; " << r.failures[i];
  return out.str();
}

Criterion from_reports(std::string id, std::string title, const std::vector<harness::SuiteReport>& reports) {
  Criterion c{std::move(id), std::move(title), true, ""};
  for (const auto& r : reports) {
    c.pass = c.pass && r.ok();
    c.detail += (c.detail.empty() ? "" : ", ") + counts(r);
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  harness::SuiteConfig base;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--seed") == 0)
      base.seed = std::stoull(argv[i + 1]);
    else if (std::strcmp(argv[i], "--threads") == 0)
      base.threads = static_cast<unsigned>(std::stoul(argv[i + 1]));
    else {
      std::cerr << "usage: acceptance [--seed N] [--threads N]\n";
      return 2;
    }
  }
  auto run = [&](const std::string& suite) {
    harness::SuiteConfig cfg = base;
    cfg.suite = suite;
    return harness::run_suite(cfg);
  };

  std::vector<Criterion> results;
  try {
    const auto start = std::chrono::steady_clock::now();
    auto corpus = harness::run_corpus_suites(base);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto find = [&](const std::string& name) {
      for (const auto& r : corpus)
        if (r.suite == name) return r;
      throw sympl::UsageError("corpus pass did not produce suite " + name);
    };

    auto c1 = from_reports("c1", "symplectic relations on the corpus", {find("symplectic")});
    std::ostringstream rt;
    rt << std::fixed << std::setprecision(1) << seconds;
    c1.detail += ", corpus runtime " + rt.str() + " s (limit 120 s)";
    c1.pass = c1.pass && seconds < 120.0;
    results.push_back(c1);
    results.push_back(from_reports("c2", "main theorem bound on the corpus", {find("theorem-bound")}));
    results.push_back(from_reports("c3", "twisted theorem bound", {run("twisted-bound")}));
    results.push_back(from_reports("c4", "hyperbolic and flag corollaries", {find("corollaries")}));
    results.push_back(from_reports("c5", "Siegel certification and genus-0 tightness", {find("siegel")}));
    results.push_back(from_reports("c6", "disjoint disconnected pairs vs oracle", {run("graph-lemma-oracle")}));
    results.push_back(
        from_reports("c7", "height identities", {run("product-formula"), run("height-identities")}));
    results.push_back(from_reports("c8", "height inequalities", {run("inequalities")}));
    results.push_back(from_reports("c9", "exponent table", {run("exponents")}));
  } catch (const sympl::Error& e) {
    std::cerr << "acceptance aborted: " << e.what() << '\n';
    return 1;
  }

  bool all = true;
  for (const auto& c : results) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << c.detail << '\n';
    all = all && c.pass;
  }
  std::cout << (all ? "all 9 criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
