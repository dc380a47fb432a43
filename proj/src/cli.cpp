#include "lie/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lie/algebraicity.hpp"
#include "lie/catalog.hpp"
#include "lie/errors.hpp"
#include "lie/jordan.hpp"
#include "lie/jsonio.hpp"
#include "lie/poly.hpp"
#include "lie/replica.hpp"
#include "lie/verify.hpp"

namespace lie {

namespace {

using jsonio::json;

json read_json_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw Error("input is not valid JSON: " + path);
  return parsed;
}

void emit(std::ostream& out, const json& payload) { out << payload.dump(2) << "\n"; }

int emit_domain_error(std::ostream& out, const std::string& type, const std::string& message) {
  emit(out, json{{"error", json{{"type", type}, {"message", message}}}});
  return 1;
}

struct Flags {
  std::string matrix_path, basis_path, catalog_name;
  std::uint64_t seed = 0;
  std::size_t samples = 32;
  long bound = 5;
  std::size_t max_rounds = 16;
  std::string alpha = "1", beta = "1", a = "1";
  unsigned n = 4;
  bool has_alpha = false, has_beta = false, has_a = false, has_n = false;
};

int run_catalog(const Flags& flags, std::ostream& out) {
  const std::string& name = flags.catalog_name;
  auto need = [&](bool present, const std::string& flag) {
    if (!present) throw Error("catalog " + name + " needs " + flag);
  };
  if (name == "heisenberg4" || name == "m4" || name == "x4" || name == "n1" || name == "a1") {
    need(flags.has_alpha, "--alpha");
    need(flags.has_beta, "--beta");
    const Rational alpha = rational_from_string(flags.alpha);
    const Rational beta = rational_from_string(flags.beta);
    if (name == "heisenberg4") emit(out, jsonio::to_json(heisenberg_h(alpha, beta)));
    else if (name == "m4") emit(out, jsonio::to_json(hull_m(alpha, beta)));
    else if (name == "x4") emit(out, jsonio::to_json(x4(alpha, beta)));
    else if (name == "n1") emit(out, jsonio::to_json(nilradical_n1(alpha, beta)));
    else emit(out, jsonio::to_json(torus_a1(alpha, beta)));
    return 0;
  }
  if (name == "filiform") {
    need(flags.has_n, "--n");
    need(flags.has_a, "--a");
    need(flags.has_alpha, "--alpha");
    need(flags.has_beta, "--beta");
    emit(out, jsonio::to_json(filiform_rep(flags.n, rational_from_string(flags.a),
                                           rational_from_string(flags.alpha),
                                           rational_from_string(flags.beta))));
    return 0;
  }
  if (name == "ln-model") {
    need(flags.has_n, "--n");
    emit(out, jsonio::to_json(model_filiform(flags.n)));
    return 0;
  }
  throw Error("unknown catalog name: " + name);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for algebraicity of matrix Lie algebras"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* jordan_cmd = app.add_subcommand("jordan", "additive semisimple + nilpotent decomposition of a matrix");
  jordan_cmd->add_option("--matrix", flags.matrix_path, "matrix JSON file, or - for stdin")->required();

  CLI::App* replica_cmd = app.add_subcommand("replica", "smallest algebraic subalgebra containing a matrix");
  replica_cmd->add_option("--matrix", flags.matrix_path, "matrix JSON file, or - for stdin")->required();

  CLI::App* check_cmd = app.add_subcommand("check", "closure test for algebraicity of a spanned subalgebra");
  check_cmd->add_option("--basis", flags.basis_path, "basis JSON file, or - for stdin")->required();
  check_cmd->add_option("--samples", flags.samples, "random samples beyond basis and pair sums");
  check_cmd->add_option("--bound", flags.bound, "coefficient bound for random samples");
  check_cmd->add_option("--seed", flags.seed, "seed for all randomness");

  CLI::App* hull_cmd = app.add_subcommand("hull", "smallest algebraic algebra containing the input");
  hull_cmd->add_option("--basis", flags.basis_path, "basis JSON file, or - for stdin")->required();
  hull_cmd->add_option("--samples", flags.samples, "random samples per round");
  hull_cmd->add_option("--bound", flags.bound, "coefficient bound for random samples");
  hull_cmd->add_option("--seed", flags.seed, "seed for all randomness");
  hull_cmd->add_option("--max-rounds", flags.max_rounds, "round cap");

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "split a nilpotent algebra into nilradical and central torus");
  decompose_cmd->add_option("--basis", flags.basis_path, "basis JSON file, or - for stdin")->required();

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "construct a bundled example");
  catalog_cmd->add_option("name", flags.catalog_name, "heisenberg4 | m4 | x4 | n1 | a1 | filiform | ln-model")->required();
  catalog_cmd->add_option("--alpha", flags.alpha, "family parameter");
  catalog_cmd->add_option("--beta", flags.beta, "family parameter");
  catalog_cmd->add_option("--a", flags.a, "filiform parameter, nonzero");
  catalog_cmd->add_option("--n", flags.n, "filiform dimension, >= 4 (ln-model: >= 3)");

  CLI::App* verify_cmd = app.add_subcommand("verify-paper", "re-run every bundled worked example and claim");
  verify_cmd->add_option("--seed", flags.seed, "seed for the sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (jordan_cmd->parsed()) {
      const QMatrix x = jsonio::matrix_from_json(read_json_input(flags.matrix_path));
      emit(out, jsonio::to_json(jordan_decompose(x)));
      return 0;
    }
    if (replica_cmd->parsed()) {
      const QMatrix x = jsonio::matrix_from_json(read_json_input(flags.matrix_path));
      try {
        emit(out, jsonio::to_json(replica(x)));
        return 0;
      } catch (const SplitFailure& e) {
        return emit_domain_error(out, "SplitFailure", std::string("irrational spectrum unsupported: ") + e.what());
      }
    }
    if (check_cmd->parsed()) {
      const LieSubalgebra L = jsonio::subalgebra_from_json(read_json_input(flags.basis_path));
      const Verdict v = check_algebraic(L, CheckOptions{flags.samples, flags.bound, flags.seed});
      emit(out, jsonio::to_json(v));
      return v.kind == VerdictKind::NotAlgebraic ? 1 : 0;
    }
    if (hull_cmd->parsed()) {
      const LieSubalgebra L = jsonio::subalgebra_from_json(read_json_input(flags.basis_path));
      const HullReport report =
          algebraic_hull(L, HullOptions{flags.samples, flags.bound, flags.seed, flags.max_rounds});
      emit(out, jsonio::to_json(report));
      return report.valid ? 0 : 1;
    }
    if (decompose_cmd->parsed()) {
      const LieSubalgebra L = jsonio::subalgebra_from_json(read_json_input(flags.basis_path));
      const NilpotentDecomposition d = nilpotent_decomposition(L);
      emit(out, jsonio::to_json(d));
      return d.valid ? 0 : 1;
    }
    if (catalog_cmd->parsed()) {
      flags.has_alpha = catalog_cmd->count("--alpha") > 0;
      flags.has_beta = catalog_cmd->count("--beta") > 0;
      flags.has_a = catalog_cmd->count("--a") > 0;
      flags.has_n = catalog_cmd->count("--n") > 0;
      return run_catalog(flags, out);
    }
    if (verify_cmd->parsed()) {
      const std::vector<ClaimResult> claims = run_catalog_claims(flags.seed);
      json claim_list = json::array();
      for (const ClaimResult& c : claims)
        claim_list.push_back(json{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
      const bool ok = all_passed(claims);
      emit(out, json{{"claims", std::move(claim_list)}, {"all_passed", ok}, {"seed", flags.seed}});
      return ok ? 0 : 1;
    }
  } catch (const ParamDomain& e) {
    return emit_domain_error(out, "ParamDomain", e.what());
  } catch (const NotClosed& e) {
    return emit_domain_error(out, "NotClosed", e.what());
  } catch (const NotNilpotentAlgebra& e) {
    return emit_domain_error(out, "NotNilpotentAlgebra", e.what());
  } catch (const NotNilpotent& e) {
    return emit_domain_error(out, "NotNilpotent", e.what());
  } catch (const NotSemisimple& e) {
    return emit_domain_error(out, "NotSemisimple", e.what());
  } catch (const SplitFailure& e) {
    return emit_domain_error(out, "SplitFailure", e.what());
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand selected\n";
  return 2;
}

}  // namespace lie
