#include "lie/jsonio.hpp"

#include "lie/errors.hpp"

namespace lie::jsonio {

json to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw Error("expected a rational encoded as a string");
  return rational_from_string(j.get<std::string>());
}

json to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

QMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw Error("matrix JSON needs \"dim\" and \"entries\"");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  if (dim == 0) throw Error("matrix dimension must be at least 1");
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != dim) throw Error("matrix entries have the wrong shape");
  QMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = entries.at(r);
    if (!row.is_array() || row.size() != dim) throw Error("matrix entries have the wrong shape");
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = rational_from_json(row.at(c));
  }
  return m;
}

namespace {

json basis_to_json(std::size_t ambient, const std::vector<QMatrix>& basis) {
  json arr = json::array();
  for (const QMatrix& b : basis) arr.push_back(to_json(b));
  return json{{"dim", ambient}, {"basis", std::move(arr)}};
}

std::pair<std::size_t, std::vector<QMatrix>> basis_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("basis"))
    throw Error("basis JSON needs \"dim\" and \"basis\"");
  const std::size_t ambient = j.at("dim").get<std::size_t>();
  std::vector<QMatrix> basis;
  for (const json& m : j.at("basis")) {
    basis.push_back(matrix_from_json(m));
    if (basis.back().dim() != ambient) throw Error("basis element of wrong dimension");
  }
  return {ambient, std::move(basis)};
}

}  // namespace

json to_json(const Subspace& s) { return basis_to_json(s.ambient_dim(), s.basis()); }

Subspace subspace_from_json(const json& j) {
  auto [ambient, basis] = basis_from_json(j);
  return Subspace::span(ambient, basis);
}

json to_json(const LieSubalgebra& L) { return basis_to_json(L.ambient_dim(), L.basis()); }

LieSubalgebra subalgebra_from_json(const json& j) {
  auto [ambient, basis] = basis_from_json(j);
  if (basis.empty()) basis.push_back(QMatrix(ambient));
  // keep the first maximal independent subsequence as the presentation basis
  Subspace seen(ambient);
  std::vector<QMatrix> kept;
  for (QMatrix& b : basis) {
    if (b.is_zero() || seen.contains(b)) continue;
    seen = sum(seen, Subspace::span(ambient, {b}));
    kept.push_back(std::move(b));
  }
  if (kept.empty()) kept.push_back(QMatrix(ambient));
  return LieSubalgebra::from_basis(std::move(kept));  // NotClosed surfaces here
}

json to_json(const StructureConstants& cc) {
  json outer = json::array();
  for (std::size_t i = 0; i < cc.size(); ++i) {
    json mid = json::array();
    for (std::size_t j = 0; j < cc.size(); ++j) {
      json inner = json::array();
      for (std::size_t k = 0; k < cc.size(); ++k) inner.push_back(to_json(cc.at(i, j, k)));
      mid.push_back(std::move(inner));
    }
    outer.push_back(std::move(mid));
  }
  return json{{"c", std::move(outer)}};
}

json to_json(const IntegerLattice& lattice) {
  json rows = json::array();
  for (const auto& basis_row : lattice.basis()) {
    json row = json::array();
    for (const Integer& x : basis_row) {
      if (!x.fits_slong_p()) throw Error("lattice entry exceeds the JSON integer range");
      row.push_back(static_cast<std::int64_t>(x.get_si()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const JordanPair& pair) {
  return json{{"semisimple", to_json(pair.semisimple)}, {"nilpotent", to_json(pair.nilpotent)}};
}

namespace {

json matrix_list(const std::vector<QMatrix>& mats) {
  json arr = json::array();
  for (const QMatrix& m : mats) arr.push_back(to_json(m));
  return arr;
}

}  // namespace

json to_json(const ReplicaResult& result) {
  return json{{"lattice", to_json(result.lattice)},
              {"semisimple_replica", matrix_list(result.semisimple_replica.basis())},
              {"nilpotent_replica", matrix_list(result.nilpotent_replica.basis())},
              {"total", matrix_list(result.total.basis())}};
}

json to_json(const Witness& witness) {
  return json{{"element", to_json(witness.element)},
              {"outside", to_json(witness.outside)},
              {"part", to_string(witness.part)}};
}

json to_json(const Verdict& verdict) {
  json j{{"kind", to_string(verdict.kind)},
         {"samples", verdict.samples_checked},
         {"seed", verdict.seed},
         {"split_failures", verdict.split_failures}};
  if (verdict.witness) j["witness"] = to_json(*verdict.witness);
  return j;
}

json to_json(const Adjunction& adjunction) {
  return json{{"source", to_json(adjunction.source)},
              {"adjoined", to_json(adjunction.adjoined)},
              {"reason", to_string(adjunction.reason)}};
}

json to_json(const HullReport& report) {
  json adjoined = json::array();
  for (const Adjunction& a : report.adjoined) adjoined.push_back(to_json(a));
  return json{{"hull", to_json(report.hull)},
              {"rounds", report.rounds},
              {"adjoined", std::move(adjoined)},
              {"valid", report.valid},
              {"verdict", to_json(report.verdict)}};
}

json to_json(const NilpotentDecomposition& decomposition) {
  json j{{"nil_part", to_json(decomposition.nil_part)},
         {"semisimple_part", to_json(decomposition.semisimple_part)},
         {"valid", decomposition.valid}};
  if (!decomposition.valid) j["reason"] = decomposition.reason;
  return j;
}

json to_json(const ComparisonReport& report) {
  json items = json::array();
  for (const ComparisonItem& item : report.items)
    items.push_back(json{{"what", item.what}, {"ok", item.ok}, {"detail", item.detail}});
  return json{{"items", std::move(items)},
              {"all_ok", report.all_ok},
              {"chain_length", report.chain_length},
              {"generated_dim", report.generated_dim}};
}

json to_json(const FiliformRep& rep) {
  return json{{"x1", to_json(rep.x1)},
              {"x2", to_json(rep.x2)},
              {"generated", to_json(rep.generated)},
              {"report", to_json(rep.report)}};
}

}  // namespace lie::jsonio
