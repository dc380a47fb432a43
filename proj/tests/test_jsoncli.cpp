#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lie/algebraicity.hpp"
#include "lie/catalog.hpp"
#include "lie/cli.hpp"
#include "lie/errors.hpp"
#include "lie/jordan.hpp"
#include "lie/jsonio.hpp"
#include "lie/replica.hpp"
#include "lie/rng.hpp"

using namespace lie;
using jsonio::json;

namespace {

struct CliRun {
  int exit_code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::vector<const char*> argv{"lietool"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return CliRun{code, out.str(), err.str()};
}

// temp files for --matrix/--basis inputs
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "lietool_test_" + std::to_string(counter++) + ".json";
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

QMatrix random_matrix(Rng& rng, std::size_t dim) {
  QMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rng.rational(9, 7);
  return m;
}

}  // namespace

TEST_CASE("matrix JSON round trip") {
  Rng rng(79);
  for (int t = 0; t < 20; ++t) {
    const QMatrix m = random_matrix(rng, 1 + static_cast<std::size_t>(rng.integer(0, 4)));
    CHECK(jsonio::matrix_from_json(jsonio::to_json(m)) == m);
  }
}

TEST_CASE("subspace and subalgebra JSON round trips") {
  const LieSubalgebra h = heisenberg_h(Rational(2), Rational(-1));
  const LieSubalgebra back = jsonio::subalgebra_from_json(jsonio::to_json(h));
  CHECK(back.space() == h.space());
  CHECK(back.basis() == h.basis());

  const Subspace n1 = nilradical_n1(Rational(2), Rational(-1));
  CHECK(jsonio::subspace_from_json(jsonio::to_json(n1)) == n1);
}

TEST_CASE("malformed JSON inputs are rejected") {
  CHECK_THROWS_AS(jsonio::matrix_from_json(json{{"dim", 2}}), Error);
  CHECK_THROWS_AS(jsonio::matrix_from_json(json::parse(R"({"dim":2,"entries":[["1","2"],["3"]]})")), Error);
  CHECK_THROWS_AS(jsonio::matrix_from_json(json::parse(R"({"dim":2,"entries":[["1","x"],["3","4"]]})")), Error);
  CHECK_THROWS_AS(jsonio::rational_from_json(json(5)), Error);
  // a span that is not bracket-closed cannot be read as a subalgebra
  const LieSubalgebra h = heisenberg_h(Rational(1), Rational(1));
  json bad = json{{"dim", 4}, {"basis", json::array({jsonio::to_json(h.basis()[0]), jsonio::to_json(h.basis()[1])})}};
  CHECK_THROWS_AS(jsonio::subalgebra_from_json(bad), NotClosed);
}

TEST_CASE("verdict and replica JSON shapes") {
  const LieSubalgebra h = heisenberg_h(Rational(1), Rational(1));
  const Verdict v = check_algebraic(h);
  const json jv = jsonio::to_json(v);
  CHECK(jv.at("kind") == "NotAlgebraic");
  CHECK(jv.contains("witness"));
  CHECK(jsonio::matrix_from_json(jv.at("witness").at("element")) == h.basis()[0]);
  CHECK(jv.at("witness").at("part") == "semisimple-part");

  const ReplicaResult rep = replica(h.basis()[0]);
  const json jr = jsonio::to_json(rep);
  CHECK(jr.at("total").size() == 2);
  CHECK(jr.at("lattice").is_array());
  CHECK(jr.at("semisimple_replica").size() == 1);
  CHECK(jr.at("nilpotent_replica").size() == 1);
}

TEST_CASE("cli: catalog output pipes into check") {
  const CliRun catalog = run({"catalog", "heisenberg4", "--alpha", "1", "--beta", "1"});
  REQUIRE(catalog.exit_code == 0);
  const json parsed = json::parse(catalog.out);
  CHECK(parsed.at("basis").size() == 3);
  // emitted JSON re-parses into equal values
  const LieSubalgebra h = jsonio::subalgebra_from_json(parsed);
  CHECK(h.space() == heisenberg_h(Rational(1), Rational(1)).space());

  const TempFile file(catalog.out);
  const CliRun check = run({"check", "--basis", file.path});
  CHECK(check.exit_code == 1);  // refuted
  const json verdict = json::parse(check.out);
  CHECK(verdict.at("kind") == "NotAlgebraic");
  CHECK(verdict.at("witness").at("part") == "semisimple-part");
}

TEST_CASE("cli: jordan on the zero matrix") {
  const TempFile file(jsonio::to_json(QMatrix(3)).dump());
  const CliRun r = run({"jordan", "--matrix", file.path});
  CHECK(r.exit_code == 0);
  const json parsed = json::parse(r.out);
  CHECK(jsonio::matrix_from_json(parsed.at("semisimple")).is_zero());
  CHECK(jsonio::matrix_from_json(parsed.at("nilpotent")).is_zero());
}

TEST_CASE("cli: domain errors are structured JSON with exit 1") {
  const CliRun bad_params = run({"catalog", "heisenberg4", "--alpha", "1", "--beta", "-1"});
  CHECK(bad_params.exit_code == 1);
  CHECK(json::parse(bad_params.out).at("error").at("type") == "ParamDomain");

  // irrational spectrum
  QMatrix rotation(2);
  rotation.at(0, 1) = -1;
  rotation.at(1, 0) = 1;
  const TempFile file(jsonio::to_json(rotation).dump());
  const CliRun split = run({"replica", "--matrix", file.path});
  CHECK(split.exit_code == 1);
  CHECK(json::parse(split.out).at("error").at("type") == "SplitFailure");
}

TEST_CASE("cli: usage and parse errors exit 2") {
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"jordan"}).exit_code == 2);                               // missing --matrix
  CHECK(run({"jordan", "--matrix", "missing_file.json"}).exit_code == 2);
  const TempFile junk("this is not json");
  CHECK(run({"jordan", "--matrix", junk.path}).exit_code == 2);
  CHECK(run({"catalog", "nonsense", "--alpha", "1", "--beta", "1"}).exit_code == 2);
  CHECK(run({"catalog", "filiform", "--alpha", "1", "--beta", "1"}).exit_code == 2);  // missing --n --a
}

TEST_CASE("cli: hull and decompose") {
  const CliRun catalog = run({"catalog", "heisenberg4", "--alpha", "2", "--beta", "-1"});
  const TempFile h_file(catalog.out);
  const CliRun hull = run({"hull", "--basis", h_file.path});
  CHECK(hull.exit_code == 0);
  const json hull_json = json::parse(hull.out);
  CHECK(hull_json.at("valid") == true);
  CHECK(hull_json.at("hull").at("basis").size() == 4);
  CHECK(hull_json.at("adjoined").size() == 1);

  const CliRun m_catalog = run({"catalog", "m4", "--alpha", "2", "--beta", "-1"});
  const TempFile m_file(m_catalog.out);
  const CliRun decompose = run({"decompose", "--basis", m_file.path});
  CHECK(decompose.exit_code == 0);
  const json d = json::parse(decompose.out);
  CHECK(d.at("valid") == true);
  CHECK(d.at("nil_part").at("basis").size() == 3);
  CHECK(d.at("semisimple_part").at("basis").size() == 1);

  const CliRun no_split = run({"decompose", "--basis", h_file.path});
  CHECK(no_split.exit_code == 1);
  CHECK(json::parse(no_split.out).at("valid") == false);
}

TEST_CASE("cli: identical invocations produce identical bytes") {
  const CliRun a = run({"check", "--basis", "-", "--seed", "4"});  // stdin empty -> parse error path
  CHECK(a.exit_code == 2);

  const CliRun c1 = run({"catalog", "m4", "--alpha", "1/2", "--beta", "1/2"});
  const TempFile file(c1.out);
  const CliRun r1 = run({"check", "--basis", file.path, "--samples", "24", "--seed", "9"});
  const CliRun r2 = run({"check", "--basis", file.path, "--samples", "24", "--seed", "9"});
  CHECK(r1.exit_code == r2.exit_code);
  CHECK(r1.out == r2.out);

  const CliRun c2 = run({"catalog", "m4", "--alpha", "1/2", "--beta", "1/2"});
  CHECK(c1.out == c2.out);
}

TEST_CASE("cli: structure constants and lattice serialization") {
  const CliRun model = run({"catalog", "ln-model", "--n", "4"});
  REQUIRE(model.exit_code == 0);
  const json parsed = json::parse(model.out);
  CHECK(parsed.at("c").size() == 4);
  CHECK(parsed.at("c").at(0).at(1).at(2) == "1");

  const CliRun filiform = run({"catalog", "filiform", "--n", "4", "--a", "1/3", "--alpha", "1", "--beta", "1"});
  REQUIRE(filiform.exit_code == 0);
  const json f = json::parse(filiform.out);
  CHECK(f.at("report").at("items").is_array());
  CHECK(f.at("generated").at("basis").size() == 4);
}
