#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "doublekit/session.hpp"
#include "doublekit/verifier.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "doublekit: the double construction on finitely generated submodules "
      "of free modules over Q[x1..xn]"};
  app.require_subcommand(1);

  std::string session_path;
  CLI::App* run = app.add_subcommand("run", "Execute a session file");
  run->add_option("file", session_path, "session file")->required();

  std::string prop_id;
  unsigned trials = 20;
  uint64_t seed = 0;
  std::string format = "text";
  CLI::App* verify =
      app.add_subcommand("verify", "Run one cataloged property suite");
  verify->add_option("id", prop_id, "property id (see catalog)")->required();
  verify->add_option("--trials", trials, "number of randomized trials");
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--format", format, "output format (only: text)");

  CLI::App* catalog =
      app.add_subcommand("catalog", "List every property id in the catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      doublekit::SessionResult result =
          doublekit::run_session_file(session_path);
      std::cout << result.output;
      if (!result.error.empty()) std::cerr << result.error << "\n";
      return result.exit_code;
    }
    if (verify->parsed()) {
      if (format != "text") {
        std::cerr << "error: unsupported format: " << format << "\n";
        return 2;
      }
      doublekit::PropertyReport report =
          doublekit::run_property(prop_id, trials, seed);
      std::cout << report.summary_line() << "\n";
      if (!report.pass()) {
        for (const auto& f : doublekit::write_replay_files(report, "."))
          std::cerr << "replay written: " << f << "\n";
        return 1;
      }
      return 0;
    }
    if (catalog->parsed()) {
      for (const auto& e : doublekit::property_catalog())
        std::cout << e.id << "  [" << e.kind << "]  " << e.summary << "\n";
      return 0;
    }
  } catch (const doublekit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
