#include "lie/lattice.hpp"

#include <algorithm>
#include <utility>

#include "lie/errors.hpp"

namespace lie {

namespace {

void sub_scaled(std::vector<Integer>& target, const Integer& q, const std::vector<Integer>& source) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

// Row echelon reduction by unimodular operations over the first
// `active_cols` columns; trailing columns ride along. Returns the row
// count of the echelon part (rows below it are zero on the active part).
std::size_t hnf_reduce(std::vector<std::vector<Integer>>& rows, std::size_t active_cols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < active_cols && r < rows.size(); ++col) {
    // euclid the column entries of rows r.. down to a single nonzero
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size()) {
          best = i;
          continue;
        }
        Integer a = abs(rows[i][col]), b = abs(rows[best][col]);
        if (a < b) best = i;
      }
      if (best == rows.size()) break;  // column empty, no pivot
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        others = true;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        sub_scaled(rows[i], q, rows[r]);
      }
      if (!others) {
        // row r is the unique pivot row for this column
        if (rows[r][col] < 0)
          for (Integer& x : rows[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
          sub_scaled(rows[i], q, rows[r]);
        }
        ++r;
        break;
      }
    }
  }
  return r;
}

bool row_zero(const std::vector<Integer>& row) {
  return std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), row_zero), rows.end());
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != cols) throw DimensionMismatch("ragged integer rows");
  const std::size_t rank = hnf_reduce(rows, cols);
  rows.resize(rank);
  return rows;
}

IntegerLattice::IntegerLattice(std::size_t length, std::vector<std::vector<Integer>> hnf_basis)
    : length_(length), basis_(std::move(hnf_basis)) {}

IntegerLattice IntegerLattice::from_generators(std::size_t length,
                                               std::vector<std::vector<Integer>> generators) {
  for (const auto& g : generators)
    if (g.size() != length) throw DimensionMismatch("lattice generator of wrong length");
  return IntegerLattice(length, hermite_normal_form(std::move(generators)));
}

IntegerLattice IntegerLattice::full(std::size_t length) {
  std::vector<std::vector<Integer>> rows(length, std::vector<Integer>(length, Integer(0)));
  for (std::size_t i = 0; i < length; ++i) rows[i][i] = 1;
  return IntegerLattice(length, std::move(rows));
}

IntegerLattice IntegerLattice::zero(std::size_t length) { return IntegerLattice(length, {}); }

IntegerLattice integer_kernel(const std::vector<std::vector<Rational>>& rows, std::size_t length) {
  // clear denominators row by row
  std::vector<std::vector<Integer>> int_rows;
  for (const auto& row : rows) {
    if (row.size() != length) throw DimensionMismatch("kernel row of wrong length");
    Integer den_lcm(1);
    for (const Rational& x : row) {
      Integer l;
      mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
      den_lcm = l;
    }
    std::vector<Integer> v(length);
    bool zero = true;
    for (std::size_t j = 0; j < length; ++j) {
      v[j] = row[j].get_num() * (den_lcm / row[j].get_den());
      if (v[j] != 0) zero = false;
    }
    if (!zero) int_rows.push_back(std::move(v));
  }
  if (int_rows.empty()) return IntegerLattice::full(length);

  // transpose and carry an identity block: unimodular row reduction of
  // [A^T | I]; rows whose A^T-part vanishes encode kernel vectors
  const std::size_t m = int_rows.size();
  std::vector<std::vector<Integer>> work(length, std::vector<Integer>(m + length, Integer(0)));
  for (std::size_t i = 0; i < length; ++i) {
    for (std::size_t j = 0; j < m; ++j) work[i][j] = int_rows[j][i];
    work[i][m + i] = 1;
  }
  hnf_reduce(work, m);
  std::vector<std::vector<Integer>> gens;
  for (const auto& row : work) {
    bool lead_zero = true;
    for (std::size_t j = 0; j < m; ++j)
      if (row[j] != 0) {
        lead_zero = false;
        break;
      }
    if (!lead_zero) continue;
    gens.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
  }
  return IntegerLattice::from_generators(length, std::move(gens));
}

}  // namespace lie
