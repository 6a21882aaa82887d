// infinireg: command-line driver for scripts, single commands and property suites.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "infinireg/cli/script.hpp"
#include "infinireg/cli/suites.hpp"

using namespace infinireg;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool usage_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::NameClash:
    case ErrorCode::UnknownIdent:
    case ErrorCode::Precondition: return true;
    default: return false;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Precondition, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Parses the file with one extra command appended and runs only that command.
int run_single(const std::string& path, const std::vector<std::string>& words) {
  static const std::regex word("[A-Za-z0-9_-]+");
  std::string line = "\ncmd";
  for (const auto& w : words) {
    if (!std::regex_match(w, word)) throw Error(ErrorCode::ParseError, "bad argument '" + w + "'");
    line += " " + w;
  }
  const CommandScript script = parse_script(read_file(path) + line + ";\n");
  try {
    return execute_command(script, script.commands.back(), std::cout) ? 0 : kExitFail;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact infinitesimal weight-two regulator computations"};
  app.require_subcommand(1);

  std::string script_path;
  auto* run = app.add_subcommand("run", "Run a command script");
  run->add_option("script", script_path, "Script file (.irg)")->required();

  SuiteConfig cfg;
  auto* check = app.add_subcommand("check", "Run a seeded property suite");
  check->add_option("suite", cfg.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  check->add_option("--seed", cfg.seed, "Random seed");
  check->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::PositiveNumber);
  check->add_option("--xvars", cfg.xvars, "Base variables")->check(CLI::Range(1, 7));
  check->add_option("--tvars", cfg.tvars, "Generators of I")->check(CLI::Range(1, 7));
  check->add_option("--deg", cfg.size.degree, "Polynomial degree bound")->check(CLI::Range(1, 4));
  check->add_option("--height", cfg.size.height, "Coefficient height bound")->check(CLI::Range(1, 1000));
  check->add_option("--cap", cfg.cap, "Degree cap for the exactness ansatz");

  std::string cech_mode;
  std::string cech_name;
  unsigned cap = 6;
  auto* cech = app.add_subcommand("cech", "Verify or glue the cech blocks of a script");
  cech->add_option("mode", cech_mode, "verify or rho1")->required()->check(CLI::IsMember({"verify", "rho1"}));
  cech->add_option("script", script_path, "Script file")->required();
  cech->add_option("--name", cech_name, "Only this cech block");
  cech->add_option("--cap", cap, "Degree cap for the exactness ansatz");

  std::string method = "first";
  std::vector<std::string> names;
  auto* li2 = app.add_subcommand("li2", "li2 <script> <splitting> <bloch|infbloch>");
  li2->add_option("script", script_path)->required();
  li2->add_option("names", names)->required()->expected(2);
  li2->add_option("--method", method)->check(CLI::IsMember({"first", "second", "both"}));

  struct Simple {
    const char* name;
    const char* help;
    int arity;
  };
  const Simple simple[] = {
      {"delta", "delta <script> <bloch|infbloch>", 1},
      {"fiveterm", "fiveterm <script> <elem> <elem>", 2},
      {"logdlog", "logdlog <script> <fwedge|bloch|infbloch>", 1},
      {"homotopy", "homotopy <script> <hom> <splitting1> <splitting2> <fwedge|infbloch>", 4},
      {"eqhom", "eqhom <script> <hom> <splitting1> <splitting2> <infbloch>", 4},
  };
  std::vector<CLI::App*> simple_apps;
  for (const auto& s : simple) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("script", script_path)->required();
    sub->add_option("names", names)->required()->expected(s.arity);
    simple_apps.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) {
      const CommandScript script = parse_script_file(script_path);
      return run_script(script, std::cout) == 0 ? 0 : kExitFail;
    }
    if (*check) {
      try {
        return run_suite(cfg, std::cout) ? 0 : kExitFail;
      } catch (const Error& e) {
        if (usage_error(e)) throw;
        std::cerr << e.what() << "\n";
        return kExitFail;
      }
    }
    if (*cech) {
      std::vector<std::string> words = {"cech", cech_mode};
      if (!cech_name.empty()) words.push_back(cech_name);
      if (cech_mode == "rho1") {
        words.push_back("--cap");
        words.push_back(std::to_string(cap));
      }
      return run_single(script_path, words);
    }
    if (*li2) {
      return run_single(script_path, {"li2", names[0], names[1], "--method", method});
    }
    for (std::size_t k = 0; k < simple_apps.size(); ++k) {
      if (*simple_apps[k]) {
        std::vector<std::string> words = {simple[k].name};
        words.insert(words.end(), names.begin(), names.end());
        return run_single(script_path, words);
      }
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return usage_error(e) ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}
