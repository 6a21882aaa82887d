#include <sstream>

#include "doctest.h"
#include "infinireg/cli/generators.hpp"
#include "infinireg/cli/script.hpp"
#include "infinireg/cli/suites.hpp"

using namespace infinireg;

namespace {

const char* const kRing = "ring { xvars = [x]; tvars = [t1]; }\n";

ErrorCode parse_code(const std::string& text) {
  try {
    parse_script(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::string parse_message(const std::string& text) {
  try {
    parse_script(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::string run_text(const std::string& text, int* status = nullptr) {
  std::ostringstream out;
  const int rc = run_script(parse_script(text), out);
  if (status) *status = rc;
  return out.str();
}

std::string suite_output(const std::string& name, std::uint64_t seed, int samples, bool* ok = nullptr) {
  SuiteConfig cfg;
  cfg.suite = name;
  cfg.seed = seed;
  cfg.samples = samples;
  std::ostringstream out;
  const bool pass = run_suite(cfg, out);
  if (ok) *ok = pass;
  return out.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("minimal ring script parses with nothing to run") {
  const CommandScript s = parse_script(kRing);
  CHECK(s.primary == "ring1");
  CHECK(s.ring().n == 1);
  CHECK(s.ring().m == 1);
  CHECK(s.commands.empty());
  int status = -1;
  CHECK(run_text(kRing, &status).empty());
  CHECK(status == 0);
}

TEST_CASE("name and syntax errors") {
  CHECK(parse_code(std::string(kRing) + "elem a = x;\nelem a = t1;\n") == ErrorCode::NameClash);
  CHECK(parse_code(std::string(kRing) + "elem a = y + 1;\n") == ErrorCode::UnknownIdent);
  CHECK(parse_code(std::string(kRing) + "cmd li2 tau0 nothing;\n") == ErrorCode::UnknownIdent);
  CHECK(parse_code(std::string(kRing) + "elem a = (x + ;\n") == ErrorCode::ParseError);
  CHECK(parse_code("elem a = 1;\n") == ErrorCode::ParseError);
  CHECK(parse_code(std::string(kRing) + "cmd frobnicate;\n") == ErrorCode::ParseError);
}

TEST_CASE("errors carry line and column") {
  const std::string msg = parse_message(std::string(kRing) + "elem a = x;\n  elem b = x +* 2;\n");
  CHECK(contains(msg, "PARSE_ERROR"));
  CHECK(contains(msg, "3:"));
  const std::string clash = parse_message(std::string(kRing) + "elem a = x;\nelem a = 2;\n");
  CHECK(contains(clash, "NAME_CLASH"));
  CHECK(contains(clash, "3:"));
}

TEST_CASE("evaluation errors keep their code") {
  CHECK(parse_code(std::string(kRing) + "elem a = 1/(x - x);\n") == ErrorCode::NonUnit);
  CHECK(parse_code(std::string(kRing) + "bloch q = [t1];\n") == ErrorCode::FlatnessViolation);
}

TEST_CASE("commands become dispatch records") {
  const CommandScript s = parse_script(std::string(kRing) + "bloch q = [x + t1] - [x];\ncmd li2 tau0 q;\n"
                                                            "cmd cech rho1 --cap 3;\n");
  REQUIRE(s.commands.size() == 2);
  CHECK(s.commands[0].name == "li2");
  CHECK(s.commands[0].args == std::vector<std::string>{"tau0", "q"});
  CHECK(s.commands[0].pos.line == 3);
  CHECK(s.commands[1].name == "cech");
  CHECK(s.commands[1].options.at("cap") == "3");
  CHECK(s.kinds.at("q") == ValueKind::Bloch);
}

TEST_CASE("running a script") {
  const std::string text = std::string(kRing) +
                           "splitting tau { x -> t1; }\n"
                           "infbloch g = [x, t1];\n"
                           "cmd li2 tau g --method both;\n"
                           "cmd eqhom id tau0 tau g;\n";
  int status = -1;
  const std::string out = run_text(text, &status);
  CHECK(status == 0);
  CHECK(contains(out, "> li2 tau g --method both"));
  CHECK(contains(out, "agreement: PASS"));
  CHECK(contains(out, "eqhom: PASS"));
}

TEST_CASE("a failing command is reported and sets the status") {
  const std::string text = std::string(kRing) + "fwedge w = BASE(x, x + 1);\ncmd homotopy id tau0 tau0 w;\n";
  int status = -1;
  const std::string out = run_text(text, &status);
  CHECK(status == 1);
  CHECK(contains(out, "ERROR at 3:"));
}

TEST_CASE("suites are deterministic in the seed") {
  bool ok = false;
  const std::string a = suite_output("five-term", 42, 5, &ok);
  CHECK(ok);
  CHECK(a == suite_output("five-term", 42, 5));
  CHECK(a != suite_output("five-term", 43, 5));
  CHECK(contains(a, "five-term: 5 passed, 0 failed"));
}

TEST_CASE("degenerate samples are regenerated, not counted") {
  bool ok = false;
  const std::string out = suite_output("five-term", 3, 25, &ok);
  CHECK(ok);
  CHECK(contains(out, "regenerated"));
  CHECK(contains(out, "five-term: 25 passed, 0 failed"));
}

TEST_CASE("unknown suite is a precondition error") {
  std::ostringstream out;
  SuiteConfig cfg;
  cfg.suite = "nonesuch";
  CHECK_THROWS_AS(run_suite(cfg, out), Error);
  CHECK(suite_names().size() == 10);
}

TEST_CASE("random polynomials respect size bounds") {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    // At most three terms of height 3, which may share a monomial.
    const Poly p = rng.poly(2, 2, 3, 3);
    CHECK(p.total_degree() <= 2);
    CHECK(p.size() <= 3);
    for (const auto& t : p.terms()) CHECK(abs(t.coef.get_num()) <= 9);
  }
}

}  // TEST_SUITE
