// Acceptance gate: one pass/fail line per release criterion, exercising the
// full randomized suites at their contracted trial counts plus the golden
// CLI transcripts.  Exits nonzero when any criterion fails.
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "doublekit/relative.hpp"
#include "doublekit/session.hpp"
#include "doublekit/verifier.hpp"

using namespace doublekit;

namespace {

int g_failures = 0;

void report(const std::string& criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << criterion << ": " << detail
            << "\n";
  if (!ok) ++g_failures;
}

// Runs one suite and folds its summary into `detail`; returns pass/fail.
bool suite(const std::string& id, unsigned trials, uint64_t seed,
           std::string& detail) {
  PropertyReport r = run_property(id, trials, seed);
  if (!detail.empty()) detail += " | ";
  detail += r.summary_line();
  return r.pass();
}

unsigned note_count(const PropertyReport& r, const std::string& label) {
  for (const auto& [name, count] : r.notes)
    if (name == label) return count;
  return 0;
}

// ---- golden transcripts ----

struct CliRun {
  std::string output;
  int exit_code = -1;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  CliRun result;
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
    result.output.append(buf, n);
  int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status))
                         ? WEXITSTATUS(status)
                         : -1;
  return result;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---- hand-built spot checks for the relative-double criterion ----

RelativeMap cusp_map() {
  PolyRing rx({"x1", "x2"});
  PolyRing ry({"t"});
  return RelativeMap(DoubleContext(rx), DoubleContext(ry, {"s"}, {"t"}),
                     RingMorphism(rx, ry, {Polynomial::parse(ry, "t^2"),
                                           Polynomial::parse(ry, "t^3")}));
}

bool cusp_spot_checks(std::string& detail) {
  RelativeMap rel = cusp_map();
  const PolyRing& rx = rel.context_x().base();
  const PolyRing& ry = rel.context_y().base();
  const PolyRing& sx = rel.context_x().doubled();

  // The slot identity on a spread of tensor elements over the cusp.
  for (const char* text : {"x1*y1", "x1 - y1", "x1^2*y2 + x2", "y1*y2"}) {
    if (!two_route_slot_identity(rel, Polynomial::parse(sx, text))) {
      detail += " cusp slot identity failed on " + std::string(text);
      return false;
    }
  }

  // The defining identity phi_D(h_D) = (phi(h))_D over the cusp.
  Submodule m(rx, 1, {ModuleElement::parse(rx, "(x1)"),
                      ModuleElement::parse(rx, "(x2)")});
  Submodule n(ry, 1, {ModuleElement::parse(ry, "(t^2)")});
  GeneratorImageHom phi(rel, m, n,
                        {ModuleElement::parse(ry, "(t^2)"),
                         ModuleElement::parse(ry, "(t^3)")});
  RelativeDoubledHom phi_d = relative_double_hom(phi);
  for (const char* text : {"(x1)", "(x2)", "(x1^2 + x2)", "(x1*x2)"}) {
    ModuleElement h = ModuleElement::parse(rx, text);
    if (phi_d.apply(double_element(rel.context_x(), h)) !=
        double_element(rel.context_y(), phi.apply(h))) {
      detail += " cusp defining identity failed on " + std::string(text);
      return false;
    }
  }
  detail += "cusp spot checks ok";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string fixtures;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") cli = argv[i + 1];
    if (flag == "--fixtures") fixtures = argv[i + 1];
  }
  if (cli.empty() || fixtures.empty()) {
    std::cerr << "usage: acceptance_tests --cli <binary> --fixtures <dir>\n";
    return 2;
  }

  // 1. Membership / containment / equality transfer.
  {
    std::string detail;
    bool ok = suite("P3.1-a", 200, 101, detail);
    ok &= suite("P3.1-b", 200, 102, detail);
    ok &= suite("P3.1-c", 200, 103, detail);
    ok &= suite("P3.1-d", 200, 104, detail);
    report("transfer-laws", ok, detail);
  }

  // 2. Closed-form generating family vs brute-force double span.
  {
    std::string detail;
    bool ok = suite("DGEN-ORACLE", 50, 201, detail);
    report("double-generation-oracle", ok, detail);
  }

  // 3. Functor laws: defining identity, composition, additivity,
  //    identity-on-objects, faithfulness.
  {
    std::string detail;
    bool ok = suite("T3.3", 200, 301, detail);
    ok &= suite("P3.9-a", 200, 302, detail);
    ok &= suite("P3.9-b", 200, 303, detail);
    ok &= suite("P3.9-c", 200, 304, detail);
    ok &= suite("T3.16-id", 200, 305, detail);
    ok &= suite("T3.16-obj", 200, 306, detail);
    ok &= suite("T3.16-faithful", 200, 307, detail);
    report("functor-laws", ok, detail);
  }

  // 4. Image equality and kernel inclusion (strict inclusions logged).
  {
    std::string detail;
    bool ok = suite("P3.4-a", 200, 401, detail);
    PropertyReport kernel_rep = run_property("P3.4-b", 200, 402);
    detail += " | " + kernel_rep.summary_line();
    detail += " strict-inclusion-witnesses=" +
              std::to_string(note_count(kernel_rep,
                                        "kernel-strict-inclusion"));
    ok &= kernel_rep.pass();
    report("image-kernel", ok, detail);
  }

  // 5. Surjectivity / injectivity / isomorphism / zero-map transfer.
  {
    std::string detail;
    bool ok = suite("C3.5-a", 200, 501, detail);
    ok &= suite("C3.5-b", 200, 502, detail);
    ok &= suite("C3.5-c", 200, 503, detail);
    ok &= suite("C3.5-d", 200, 504, detail);
    report("hom-property-transfer", ok, detail);
  }

  // 6. Block shape of every doubled matrix.
  {
    std::string detail;
    bool ok = suite("P3.20", 200, 601, detail);
    detail += " (block shape also asserted on every hom doubled in the "
              "other suites)";
    report("block-structure", ok, detail);
  }

  // 7. Direct sums: pairwise isomorphism and threefold associativity.
  {
    std::string detail;
    bool ok = suite("T3.21", 100, 701, detail);
    ok &= suite("C3.22", 30, 702, detail);
    report("direct-sums", ok, detail);
  }

  // 8. Quotient doubles: presentation equality and representative
  //    independence.
  {
    std::string detail;
    bool ok = suite("Q4-pres", 100, 801, detail);
    ok &= suite("Q4-rep", 200, 802, detail);
    report("quotient-doubles", ok, detail);
  }

  // 9. Colength transfer on finite instances.
  {
    std::string detail;
    bool ok = suite("P3.1.13-b", 30, 901, detail);
    report("colength-transfer", ok, detail);
  }

  // 10. Complex suite plus the exactness experiment table.
  {
    std::string detail;
    bool ok = suite("P3.6", 100, 1001, detail);
    ok &= suite("L3.12", 100, 1002, detail);
    ok &= suite("P3.13", 100, 1003, detail);
    ok &= suite("C3.15", 100, 1004, detail);
    ok &= suite("P3.8", 100, 1005, detail);
    report("complex-suite", ok, detail);
    ExactnessExperiment tally = exactness_experiment(100, 1006);
    std::cout << "  EXPERIMENT exactness-pairs: both=" << tally.both
              << " base_only=" << tally.base_only
              << " doubled_only=" << tally.doubled_only
              << " neither=" << tally.neither << "\n";
  }

  // 11. Relative doubles: cusp spot checks, randomized germs, composition.
  {
    std::string detail;
    bool ok = cusp_spot_checks(detail);
    detail += " | ";
    bool slot = suite("L3.23", 50, 1101, detail);
    bool defining = suite("T3.24", 50, 1102, detail);
    bool compose = suite("P3.25", 30, 1103, detail);
    ok = ok && slot && defining && compose;
    report("relative-doubles", ok, detail);
  }

  // 12. Evenness of the generic rank of every double.
  {
    std::string detail;
    bool ok = suite("RANK-EVEN", 200, 1201, detail);
    report("generic-rank-even", ok, detail);
  }

  // 13. Golden CLI transcripts.
  {
    std::string detail;
    bool ok = true;
    unsigned count = 0;
    std::vector<std::filesystem::path> sessions;
    for (const auto& entry :
         std::filesystem::directory_iterator(fixtures)) {
      if (entry.path().extension() == ".dk") sessions.push_back(entry.path());
    }
    std::sort(sessions.begin(), sessions.end());
    for (const auto& session_path : sessions) {
      std::filesystem::path golden = session_path;
      golden.replace_extension(".out");
      if (!std::filesystem::exists(golden)) continue;  // library file
      ++count;
      CliRun run = run_cli(cli, "run " + session_path.string());
      std::string expected = slurp(golden);
      if (run.exit_code != 0) {
        ok = false;
        detail += " " + session_path.filename().string() + " exited " +
                  std::to_string(run.exit_code) + ";";
      } else if (run.output != expected) {
        ok = false;
        detail += " " + session_path.filename().string() + " diverged;";
      }
    }
    if (count < 10) {
      ok = false;
      detail += " only " + std::to_string(count) + " fixtures found;";
    }
    if (ok) detail = std::to_string(count) + " transcripts byte-identical";
    report("golden-transcripts", ok, detail);
  }

  if (g_failures == 0) {
    std::cout << "acceptance: all 13 criteria pass\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
  return 1;
}
