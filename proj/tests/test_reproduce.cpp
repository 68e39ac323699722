#include <doctest.h>

#include <fstream>
#include <sstream>

#include "matdec/reproduce.hpp"

using namespace matdec;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(MATDEC_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("coextension table of Q13") {
  const TableReproduction t = r12_coextension_table();
  REQUIRE(t.rows.size() == 14);
  CHECK(t.all_match());
  CHECK(t.flagged() == 1);
  std::size_t regular = 0;
  for (const auto& r : t.rows) {
    CHECK(r.parent_lambda == 2);
    if (r.regular) {
      ++regular;
      CHECK(r.lambda_text == "λ{3, 4, 8, 9, 12, 13, 14} = 2");
    }
    CHECK((r.flag.empty() == (r.listed == r.evaluated)));
  }
  CHECK(regular == 4);
}

TEST_CASE("extension table of P13* and Q13*") {
  const TableReproduction t = r12_extension_table();
  REQUIRE(t.rows.size() == 8);
  CHECK(t.all_match());
  CHECK(t.group_flags.size() == 2);
  CHECK(t.flagged() == 3);
  for (const auto& r : t.rows)
    if (r.regular) CHECK(r.lambda_text == "λ{3, 4, 8, 9, 12, 13, 14} = 2");
}

TEST_CASE("counterexample checks") {
  const CounterexampleReproduction c = counterexample_checks();
  for (const auto& x : c.checks) CHECK_MESSAGE(x.holds, x.claim << ": " << x.observed);
  CHECK(c.checks.size() == 14);
}

TEST_CASE("golden documents") {
  CHECK(reproduce_r12() == golden("r12_tables.md"));
  CHECK(reproduce_counterexample() == golden("counterexample.md"));
}

TEST_CASE("documents do not depend on the worker count") {
  CHECK(reproduce_r12(Execution::serial()) == reproduce_r12(Execution::parallel(3)));
  CHECK(reproduce_counterexample(Execution::serial()) == reproduce_counterexample(Execution::parallel(3)));
}
