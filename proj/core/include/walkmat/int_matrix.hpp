#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "walkmat/graph.hpp"

namespace walkmat {

/// Dense square matrix with arbitrary-precision integer entries.
/// Everything in this module is exact; no floating point anywhere.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int dim);

  int dim() const { return dim_; }
  mpz_class& at(int row, int col);
  const mpz_class& at(int row, int col) const;

  static IntMatrix identity(int dim);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  int dim_ = 0;
  std::vector<mpz_class> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Monic integer polynomial x^n + c_1 x^{n-1} + ... + c_n.
/// coefficient(0) is the leading 1, coefficient(i) is c_i.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  std::string to_string() const;  // e.g. "x^3 - 3x - 2"

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
  std::vector<mpz_class> coeffs_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. Intermediate values stay integral throughout.
mpz_class determinant(const IntMatrix& m);

/// Exact monic characteristic polynomial det(xI - m) by the
/// Faddeev-LeVerrier recurrence. Every division is checked to be exact.
IntPoly char_poly(const IntMatrix& m);

/// Rows and columns 0..k-1 of m. Throws std::out_of_range unless 1 <= k <= dim.
IntMatrix leading_principal_submatrix(const IntMatrix& m, int k);

IntMatrix adjacency_matrix(const Graph& g);

}  // namespace walkmat
