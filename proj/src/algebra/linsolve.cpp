#include "infinireg/algebra/linsolve.hpp"

namespace infinireg {

std::optional<std::vector<Rational>> linear_solve_exact(const RationalMatrix& m,
                                                        const std::vector<Rational>& b) {
  const std::size_t rows = m.size();
  if (b.size() != rows) throw Error(ErrorCode::Precondition, "right-hand side length mismatch");
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& row : m) {
    if (row.size() != cols) throw Error(ErrorCode::Precondition, "ragged matrix");
  }

  // Integer augmented matrix: each row scaled by the lcm of its denominators.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (const auto& q : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
    }
    a[i][cols] = b[i].get_num() * (l / b[i].get_den());
  }

  std::vector<std::size_t> pivot_cols;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_cols.push_back(c);
    ++r;
  }

  for (std::size_t i = r; i < rows; ++i) {
    if (a[i][cols] != 0) return std::nullopt;
  }

  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t c = pivot_cols[k];
    Rational acc(a[k][cols]);
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (a[k][j] != 0) acc -= Rational(a[k][j]) * x[j];
    }
    x[c] = acc / Rational(a[k][c]);
  }
  return x;
}

}  // namespace infinireg
