#include "lie/catalog.hpp"

#include <sstream>
#include <utility>

#include "lie/errors.hpp"

namespace lie {

namespace {

void require_regular(const Rational& alpha, const Rational& beta) {
  if (alpha + beta == 0) throw ParamDomain("alpha + beta must be nonzero");
}

Rational half(const Rational& q) { return q / Rational(2); }

}  // namespace

LieSubalgebra heisenberg_h(const Rational& alpha, const Rational& beta) {
  require_regular(alpha, beta);
  QMatrix x1(4), x2(4), x3(4);

  x1.at(0, 0) = 1; x1.at(0, 1) = 1; x1.at(0, 3) = 1;
  x1.at(1, 0) = 1; x1.at(1, 1) = 1;
  x1.at(2, 0) = alpha; x1.at(2, 1) = beta;

  x2.at(0, 0) = 1; x2.at(0, 1) = 1;
  x2.at(1, 0) = 1; x2.at(1, 1) = 1; x2.at(1, 3) = 1;
  x2.at(2, 0) = beta - 1; x2.at(2, 1) = alpha + 1;

  x3.at(2, 3) = 1;

  if (bracket(x1, x2) != x3 || !bracket(x1, x3).is_zero() || !bracket(x2, x3).is_zero())
    throw Error("heisenberg_h: defining relations failed");
  return LieSubalgebra::from_basis({x1, x2, x3});
}

QMatrix x4(const Rational& alpha, const Rational& beta) {
  require_regular(alpha, beta);
  const Rational s = half(alpha + beta);
  QMatrix m(4);
  m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(0, 3) = Rational(1, 2);
  m.at(1, 0) = 1; m.at(1, 1) = 1; m.at(1, 3) = Rational(1, 2);
  m.at(2, 0) = s; m.at(2, 1) = s; m.at(2, 3) = half(s);
  return m;
}

LieSubalgebra hull_m(const Rational& alpha, const Rational& beta) {
  const LieSubalgebra h = heisenberg_h(alpha, beta);
  const QMatrix center_gen = x4(alpha, beta);
  for (const QMatrix& b : h.basis())
    if (!bracket(b, center_gen).is_zero()) throw Error("hull_m: adjoined generator is not central");
  std::vector<QMatrix> basis = h.basis();
  basis.push_back(center_gen);
  LieSubalgebra m = LieSubalgebra::from_basis(std::move(basis));
  if (m.dim() != 4) throw Error("hull_m: dimension is not 4");
  return m;
}

Subspace nilradical_n1(const Rational& alpha, const Rational& beta) {
  require_regular(alpha, beta);
  const Rational qtr = half(half(alpha + beta));
  // coefficient matrices of the three-parameter family
  QMatrix v1(4), v2(4), v3(4);

  v1.at(0, 3) = Rational(1, 2);
  v1.at(1, 3) = Rational(-1, 2);
  v1.at(2, 0) = half(alpha - beta);
  v1.at(2, 1) = half(beta - alpha);
  v1.at(2, 3) = -qtr;

  v2.at(0, 3) = Rational(-1, 2);
  v2.at(1, 3) = Rational(1, 2);
  v2.at(2, 0) = half(beta - alpha - 2);
  v2.at(2, 1) = half(alpha - beta + 2);
  v2.at(2, 3) = -qtr;

  v3.at(2, 3) = 1;

  return Subspace::span(4, {v1, v2, v3});
}

Subspace torus_a1(const Rational& alpha, const Rational& beta) {
  return Subspace::span(4, {x4(alpha, beta)});
}

StructureConstants model_filiform(unsigned n) {
  if (n < 3) throw ParamDomain("filiform model needs n >= 3");
  StructureConstants cc(n);
  for (unsigned i = 1; i + 1 < n; ++i) {
    cc.at(0, i, i + 1) = 1;
    cc.at(i, 0, i + 1) = -1;
  }
  return cc;
}

namespace {

QMatrix filiform_x1(unsigned n, const Rational& a, const Rational& alpha, const Rational& beta) {
  QMatrix m(n + 1);
  m.at(0, 0) = a; m.at(0, 1) = a;
  m.at(1, 0) = a; m.at(1, 1) = a;
  m.at(0, n) = 1;
  m.at(n - 1, 0) = alpha;
  m.at(n - 1, 1) = beta;
  for (unsigned k = 3; k < n; ++k)  // entry (k+1, k) = (k-2)/(k-1), 1-indexed
    m.at(k, k - 1) = make_rational(static_cast<long>(k) - 2, static_cast<long>(k) - 1);
  return m;
}

QMatrix filiform_x2(unsigned n, const Rational& a, const Rational& alpha, const Rational& beta) {
  QMatrix m(n + 1);
  m.at(0, 0) = a; m.at(0, 1) = a;
  m.at(1, 0) = a; m.at(1, 1) = a;
  m.at(1, n) = 1;
  m.at(2, 0) = -1; m.at(2, 1) = 1;
  m.at(n - 1, 0) = beta;
  m.at(n - 1, 1) = alpha;
  for (unsigned k = 3; k < n; ++k)  // entry (k+1, k) = 1/(k-1), 1-indexed
    m.at(k, k - 1) = make_rational(1, static_cast<long>(k) - 1);
  return m;
}

std::string ordinal(std::size_t k) {
  std::ostringstream out;
  out << "X" << k;
  return out.str();
}

}  // namespace

FiliformRep filiform_rep(unsigned n, const Rational& a, const Rational& alpha, const Rational& beta) {
  if (n == 3)
    throw ParamDomain("n = 3 is realized by the 4-dimensional Heisenberg construction (heisenberg4)");
  if (n < 4) throw ParamDomain("filiform family needs n >= 4");
  if (a == 0) throw ParamDomain("parameter a must be nonzero");

  QMatrix x1 = filiform_x1(n, a, alpha, beta);
  QMatrix x2 = filiform_x2(n, a, alpha, beta);
  LieSubalgebra closure = generate_lie({x1, x2});
  FiliformRep rep{std::move(x1), std::move(x2), std::move(closure), ComparisonReport{}};
  ComparisonReport& report = rep.report;

  // bracket chain X_i = [X1, X_{i-1}] until it vanishes
  std::vector<QMatrix> chain{rep.x1, rep.x2};
  const std::size_t cap = 2 * static_cast<std::size_t>(n) + 2;
  while (chain.size() < cap) {
    QMatrix next = bracket(rep.x1, chain.back());
    if (next.is_zero()) break;
    chain.push_back(std::move(next));
  }
  const bool terminated = chain.size() < cap;
  report.chain_length = chain.size();
  report.generated_dim = rep.generated.dim();

  {
    std::ostringstream detail;
    detail << "chain X3..X" << chain.size() << " nonzero; [X1, X" << chain.size() << "] "
           << (terminated ? "= 0" : "still nonzero at the iteration cap");
    report.items.push_back({"bracket chain terminates", terminated, detail.str()});
  }
  {
    // the declared recursion stops at X_{n-1}; record whether that range closes
    const bool closes_as_declared = chain.size() == static_cast<std::size_t>(n) - 1;
    std::ostringstream detail;
    if (closes_as_declared)
      detail << "[X1, X" << (n - 1) << "] = 0 at the end of the declared index range";
    else
      detail << "the declared recursion stops at X" << (n - 1) << " but [X1, X" << (n - 1)
             << "] != 0; the chain continues to X" << chain.size();
    report.items.push_back({"declared index range closes the chain", closes_as_declared, detail.str()});
  }
  {
    // pairwise commutation over the full chain
    bool ok = true;
    std::ostringstream detail;
    for (std::size_t i = 1; ok && i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j)
        if (!bracket(chain[i], chain[j]).is_zero()) {
          ok = false;
          detail << "first failing pair: [" << ordinal(i + 1) << ", " << ordinal(j + 1) << "] != 0";
          break;
        }
    if (ok) detail << "[Xi, Xj] = 0 for all 2 <= i < j <= " << chain.size();
    report.items.push_back({"tail elements commute", ok, detail.str()});
  }
  const Subspace chain_span = Subspace::span(n + 1, chain);
  const bool chain_independent = chain_span.dim() == chain.size();
  {
    std::ostringstream detail;
    detail << "chain spans dimension " << chain_span.dim() << " with " << chain.size()
           << " elements";
    report.items.push_back({"chain elements are linearly independent", chain_independent, detail.str()});
  }
  {
    const bool matches = chain_span == rep.generated.space();
    std::ostringstream detail;
    detail << "closure of {X1, X2} has dimension " << rep.generated.dim()
           << (matches ? ", equal to the chain span" : ", different from the chain span");
    report.items.push_back({"closure equals the chain span", matches, detail.str()});
  }
  {
    const bool dim_is_n = rep.generated.dim() == n;
    std::ostringstream detail;
    detail << "generated dimension " << rep.generated.dim() << " vs declared n = " << n;
    report.items.push_back({"generated algebra is n-dimensional", dim_is_n, detail.str()});
  }
  if (chain_independent && chain_span == rep.generated.space()) {
    // present the algebra in the chain basis and compare with the model
    rep.generated = LieSubalgebra::from_basis(chain);
    const bool match = rep.generated.constants() == model_filiform(static_cast<unsigned>(chain.size()));
    std::ostringstream detail;
    detail << "structure constants over the chain basis "
           << (match ? "equal" : "differ from") << " the " << chain.size()
           << "-dimensional filiform model";
    report.items.push_back({"chain basis realizes the filiform model", match, detail.str()});
  } else {
    report.items.push_back({"chain basis realizes the filiform model", false,
                            "chain does not present the closure; comparison skipped"});
  }

  report.all_ok = true;
  for (const ComparisonItem& item : report.items) report.all_ok = report.all_ok && item.ok;
  return rep;
}

}  // namespace lie
