// The definition-file surface: parsing, printing, name resolution, include
// handling, and every session command.
#include "doctest.h"

#include "doublekit/session.hpp"

#include <filesystem>
#include <fstream>
#include <string>

using namespace doublekit;

namespace {

// The running example: the principal ideal <x> on the line.
const char* kLineSession =
    "ring R vars x;\n"
    "module M in R^1 gens [(x)];\n";

std::string output_of(const std::string& text) {
  SessionResult result = run_session_text(text);
  CAPTURE(result.error);
  REQUIRE(result.error.empty());
  return result.output;
}

}  // namespace

TEST_CASE("a minimal session binds a ring and a module") {
  Session s = parse_session(kLineSession);
  CHECK(s.order().size() == 2);
  CHECK(s.has("R"));
  CHECK(s.has("M"));
  CHECK(s.get("R").kind == BindingKind::Ring);
  CHECK(s.get("M").kind == BindingKind::Module);
  CHECK(s.get("M").module.rank() == 1);
  CHECK_THROWS_AS(s.get("Q"), Error);
}

TEST_CASE("duplicate names are rejected by name") {
  SessionResult r = run_session_text(
      "ring R vars x;\n"
      "ring R vars y;\n");
  CHECK_FALSE(r.error.empty());
  CHECK(r.error.find("name already bound: R") != std::string::npos);
  CHECK(r.exit_code != 0);
}

TEST_CASE("errors carry line and column positions") {
  SessionResult r = run_session_text(
      "ring R vars x;\n"
      "module M in S^1 gens [(x)];\n");
  REQUIRE_FALSE(r.error.empty());
  CHECK(r.error.rfind("error: 2:", 0) == 0);  // second line
  CHECK(r.error.find("unknown name: S") != std::string::npos);
}

TEST_CASE("print and parse are mutually inverse") {
  std::string text =
      "ring R vars x1 x2;\n"
      "module M in R^2 gens [(x1, x2), (0, x1^2)];\n"
      "module N in R^1 gens [(x1), (x2)];\n"
      "hom f : N -> N matrix [[x1*x2]];\n"
      "complex C modules [N, N] diffs [f];\n"
      "germ phi : R -> S sends [t^2, t^3] doubled [s, t];\n";
  // The germ target ring must exist first.
  std::string full = "ring S vars t;\n" + text;
  Session s = parse_session(full);
  std::string printed = print_session(s);
  Session reparsed = parse_session(printed);
  CHECK(print_session(reparsed) == printed);
  CHECK(reparsed.order() == s.order());
}

TEST_CASE("printing covers derived bindings created by commands") {
  Session s;
  exec_command(s, "ring R vars x;");
  exec_command(s, "module M in R^1 gens [(x)];");
  exec_command(s, "double M;");
  CHECK(s.has("R_D"));
  CHECK(s.has("M_D"));
  std::string printed = print_session(s);
  CHECK(printed.find("ring R_D vars x y;") != std::string::npos);
  Session reparsed = parse_session(printed);
  CHECK(print_session(reparsed) == printed);
}

TEST_CASE("doubling a module prints the structural generators") {
  std::string out = output_of(
      "ring R vars x;\n"
      "module M in R^1 gens [(x)];\n"
      "double M;\n");
  CHECK(out ==
        "(x, y)\n"
        "(0, (y - x)*y)\n");
}

TEST_CASE("membership in the doubled module") {
  std::string out = output_of(
      "ring R vars x;\n"
      "module M in R^1 gens [(x)];\n"
      "double M;\n"
      "member M_D (x^2, y^2);\n"
      "member M_D (x, x);\n");
  CHECK(out ==
        "(x, y)\n"
        "(0, (y - x)*y)\n"
        "true\n"
        "false\n");
}

TEST_CASE("redoubling the same module is idempotent, conflicts are caught") {
  // Re-running `double M` rebinds M_D to an equal value: allowed.
  std::string out = output_of(
      "ring R vars x;\n"
      "module M in R^1 gens [(x)];\n"
      "double M;\n"
      "double M;\n");
  CHECK_FALSE(out.empty());
  // A user binding that collides with a derived name is an error when the
  // values differ.
  SessionResult r = run_session_text(
      "ring R vars x;\n"
      "module M in R^1 gens [(x)];\n"
      "module M_D in R^1 gens [(x^2)];\n"
      "double M;\n");
  CHECK_FALSE(r.error.empty());
  CHECK(r.error.find("already bound") != std::string::npos);
}

TEST_CASE("eq on modules and on homs") {
  std::string out = output_of(
      "ring R vars x;\n"
      "module A in R^1 gens [(x), (x^2)];\n"
      "module B in R^1 gens [(x)];\n"
      "module C in R^1 gens [(x^2)];\n"
      "eq A B;\n"
      "eq B C;\n");
  CHECK(out == "true\nfalse\n");

  std::string homs = output_of(
      "ring R vars x1 x2;\n"
      "module M in R^2 gens [(x1, x2)];\n"
      "module F in R^1 gens [(1)];\n"
      "hom f : M -> F matrix [[x2, 0]];\n"
      "hom g : M -> F matrix [[0, x1]];\n"
      "eq f g;\n");
  CHECK(homs == "true\n");
}

TEST_CASE("kernel and image commands print canonical generators") {
  std::string out = output_of(
      "ring R vars x;\n"
      "module F in R^1 gens [(1)];\n"
      "hom f : F -> F matrix [[x]];\n"
      "kernel f;\n"
      "image f;\n");
  CHECK(out == "0\n(x)\n");
}

TEST_CASE("colength and rank commands") {
  std::string out = output_of(
      "ring R vars x;\n"
      "module M in R^1 gens [(x^2)];\n"
      "module F in R^1 gens [(1)];\n"
      "colength M F;\n"
      "rank M;\n");
  CHECK(out == "2\n1\n");
}

TEST_CASE("the doubled colength of the running example is infinite") {
  std::string out = output_of(
      "ring R vars x;\n"
      "module M in R^1 gens [(x)];\n"
      "module F in R^1 gens [(1)];\n"
      "double M;\n"
      "double F;\n"
      "colength M_D F_D;\n");
  CHECK(out.find("INFINITE\n") != std::string::npos);
}

TEST_CASE("complex declaration, exactness, and doubling") {
  std::string out = output_of(
      "ring R vars x1 x2;\n"
      "module T in R^1 gens [(1)];\n"
      "module Mid in R^2 gens [(1, 0), (0, 1)];\n"
      "module B in R^1 gens [(x1), (x2)];\n"
      "hom d2 : T -> Mid matrix [[-x2], [x1]];\n"
      "hom d1 : Mid -> B matrix [[x1, x2]];\n"
      "complex K modules [T, Mid, B] diffs [d2, d1];\n"
      "exact K;\n"
      "double K;\n"
      "exact K_D;\n");
  // The fragment is exact; its double's exactness is whatever the engine
  // computes -- the command output records it.
  CHECK(out.rfind("true\n", 0) == 0);
}

TEST_CASE("chain maps and homotopies through the session") {
  std::string out = output_of(
      "ring R vars x;\n"
      "module F in R^1 gens [(1)];\n"
      "hom d : F -> F matrix [[1]];\n"
      "complex C modules [F, F] diffs [d];\n"
      "hom a1 : F -> F matrix [[1]];\n"
      "hom a0 : F -> F matrix [[1]];\n"
      "hom z1 : F -> F matrix [[0]];\n"
      "hom z0 : F -> F matrix [[0]];\n"
      "chainmap one : C -> C maps [a1, a0];\n"
      "chainmap nil : C -> C maps [z1, z0];\n"
      "hom up : F -> F matrix [[1]];\n"
      "degmap mu : C -> C maps [up];\n"
      "homotopy one nil mu;\n");
  CHECK(out == "true\n");
}

TEST_CASE("germs and relative doubles through the session") {
  std::string out = output_of(
      "ring X vars x;\n"
      "ring Y vars t;\n"
      "germ phi : X -> Y sends [t^2] doubled [s, t];\n"
      "module M in X^1 gens [(x)];\n"
      "module N in Y^1 gens [(t^2)];\n"
      "relhom f : M -> N germ phi images [(t^2)];\n"
      "relative-double phi f;\n");
  CHECK(out ==
        "(s^2, t^2)\n"
        "(0, -s^2*t^2 + t^4)\n");
}

TEST_CASE("relative doubles reject a mismatched germ") {
  SessionResult r = run_session_text(
      "ring X vars x;\n"
      "ring Y vars t;\n"
      "germ phi : X -> Y sends [t^2] doubled [s, t];\n"
      "germ psi : X -> Y sends [t^3] doubled [s, t];\n"
      "module M in X^1 gens [(x)];\n"
      "module N in Y^1 gens [(t^2), (t^3)];\n"
      "relhom f : M -> N germ phi images [(t^2)];\n"
      "relative-double psi f;\n");
  REQUIRE_FALSE(r.error.empty());
  CHECK(r.error.find("different germ") != std::string::npos);
}

TEST_CASE("an ill-defined relhom reports the broken relation") {
  SessionResult r = run_session_text(
      "ring X vars x;\n"
      "ring Y vars t;\n"
      "germ phi : X -> Y sends [t^2] doubled [s, t];\n"
      "module M in X^1 gens [(x), (x^2)];\n"
      "module N in Y^1 gens [(1)];\n"
      "relhom f : M -> N germ phi images [(t^2), (t^5)];\n");
  REQUIRE_FALSE(r.error.empty());
  CHECK(r.error.find("do not define a homomorphism") != std::string::npos);
}

TEST_CASE("verify runs a suite inside a session") {
  std::string out = output_of(
      "verify P3.4-a --trials 5 --seed 7;\n");
  CHECK(out == "PROP P3.4-a trials=5 failures=0\n");
}

TEST_CASE("verify validates its flags") {
  SessionResult unknown = run_session_text("verify P3.4-a --fast;\n");
  CHECK_FALSE(unknown.error.empty());
  CHECK(unknown.error.find("unknown verify flag") != std::string::npos);
  SessionResult format = run_session_text("verify P3.4-a --format json;\n");
  CHECK_FALSE(format.error.empty());
  CHECK(format.error.find("unsupported format") != std::string::npos);
  SessionResult bad_id = run_session_text("verify NOPE;\n");
  CHECK_FALSE(bad_id.error.empty());
}

TEST_CASE("a failing verify sets the exit code and keeps prior output") {
  SessionResult r = run_session_text(
      "ring R vars x;\n"
      "module M in R^1 gens [(x)];\n"
      "double M;\n"
      "verify SELFTEST-FAIL --trials 4 --seed 1;\n");
  CHECK(r.error.empty());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("(x, y)\n") != std::string::npos);
  CHECK(r.output.find("PROP SELFTEST-FAIL trials=4 failures=") !=
        std::string::npos);
  // Clean up the replay artifacts the failing suite wrote into cwd.
  for (const auto& entry : std::filesystem::directory_iterator(".")) {
    std::string name = entry.path().filename().string();
    if (name.rfind("replay-SELFTEST-FAIL-", 0) == 0)
      std::filesystem::remove(entry.path());
  }
}

TEST_CASE("include pulls in a library file relative to the includer") {
  namespace fs = std::filesystem;
  fs::path dir = fs::path("session_include_test");
  fs::create_directories(dir);
  {
    std::ofstream lib(dir / "lib.dk");
    lib << "ring R vars x;\nmodule M in R^1 gens [(x)];\n";
  }
  {
    std::ofstream main(dir / "main.dk");
    main << "include \"lib.dk\";\ndouble M;\n";
  }
  SessionResult r = run_session_file((dir / "main.dk").string());
  CAPTURE(r.error);
  CHECK(r.error.empty());
  CHECK(r.output ==
        "(x, y)\n"
        "(0, (y - x)*y)\n");
  fs::remove_all(dir);
}

TEST_CASE("include depth is capped") {
  namespace fs = std::filesystem;
  fs::path dir = fs::path("session_include_loop");
  fs::create_directories(dir);
  {
    std::ofstream self(dir / "self.dk");
    self << "include \"self.dk\";\n";
  }
  SessionResult r = run_session_file((dir / "self.dk").string());
  CHECK_FALSE(r.error.empty());
  CHECK(r.error.find("include depth") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("missing session files are reported") {
  SessionResult r = run_session_file("no_such_session_file.dk");
  CHECK_FALSE(r.error.empty());
  CHECK(r.exit_code != 0);
}

TEST_CASE("comments and blank lines are ignored") {
  std::string out = output_of(
      "# the running example\n"
      "ring R vars x;  # inline note\n"
      "\n"
      "module M in R^1 gens [(x)];\n"
      "member M (x^3);\n");
  CHECK(out == "true\n");
}

TEST_CASE("malformed statements name the offending construct") {
  SessionResult r = run_session_text("module M in R^0 gens [];\n");
  CHECK_FALSE(r.error.empty());
  SessionResult r2 = run_session_text("ring R vars x;\nmodule M in R^1;\n");
  CHECK_FALSE(r2.error.empty());
  SessionResult r3 = run_session_text("frobnicate Z;\n");
  CHECK_FALSE(r3.error.empty());
}

TEST_CASE("element and matrix dimensions are validated") {
  SessionResult wrong_rank = run_session_text(
      "ring R vars x;\n"
      "module M in R^2 gens [(x)];\n");
  CHECK_FALSE(wrong_rank.error.empty());
  SessionResult wrong_member = run_session_text(
      "ring R vars x;\n"
      "module M in R^1 gens [(x)];\n"
      "member M (x, x);\n");
  CHECK_FALSE(wrong_member.error.empty());
  CHECK(wrong_member.error.find("rank") != std::string::npos);
}
