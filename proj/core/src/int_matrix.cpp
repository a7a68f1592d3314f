#include "walkmat/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace walkmat {

IntMatrix::IntMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw std::out_of_range("matrix dimension must be non-negative");
  entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), mpz_class(0));
}

mpz_class& IntMatrix::at(int row, int col) {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
    throw std::out_of_range("matrix index out of range");
  return entries_[static_cast<std::size_t>(row) * dim_ + col];
}

const mpz_class& IntMatrix::at(int row, int col) const {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
    throw std::out_of_range("matrix index out of range");
  return entries_[static_cast<std::size_t>(row) * dim_ + col];
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in matrix product");
  const int n = a.dim();
  IntMatrix out(n);
  mpz_class term;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        term = aik * b.at(k, j);
        out.at(i, j) += term;
      }
    }
  return out;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.front() != 1)
    throw std::invalid_argument("polynomial must be monic");
}

std::string IntPoly::to_string() const {
  const int n = degree();
  std::string out;
  for (int i = 0; i <= n; ++i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const int power = n - i;
    mpz_class abs_c = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    const bool show_coeff = (abs_c != 1) || power == 0;
    if (show_coeff) out += abs_c.get_str();
    if (power > 0) {
      out += "x";
      if (power > 1) out += "^" + std::to_string(power);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

mpz_class determinant(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 0) return 1;  // empty product convention

  IntMatrix work = m;
  mpz_class prev_pivot(1);
  int sign = 1;

  for (int k = 0; k + 1 < n; ++k) {
    if (work.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (work.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(work.at(k, j), work.at(swap_row, j));
      sign = -sign;
    }
    const mpz_class pivot = work.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class value = work.at(i, j) * pivot - work.at(i, k) * work.at(k, j);
        // Bareiss: the division by the previous pivot is always exact
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), prev_pivot.get_mpz_t());
        work.at(i, j) = std::move(value);
      }
      work.at(i, k) = 0;
    }
    prev_pivot = pivot;
  }
  return sign > 0 ? work.at(n - 1, n - 1) : mpz_class(-work.at(n - 1, n - 1));
}

IntPoly char_poly(const IntMatrix& m) {
  const int n = m.dim();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[0] = 1;
  if (n == 0) return IntPoly(std::move(coeffs));

  // Faddeev-LeVerrier: M_k = A (M_{k-1} + c_{k-1} I), c_k = -tr(M_k) / k
  IntMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    mpz_class trace(0);
    for (int i = 0; i < n; ++i) trace += mk.at(i, i);
    mpz_class ck;
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), static_cast<unsigned long>(k)))
      throw std::logic_error("characteristic polynomial recurrence lost exactness");
    mpz_divexact_ui(ck.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    ck = -ck;
    coeffs[static_cast<std::size_t>(k)] = ck;
    if (k == n) break;
    for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    mk = m * mk;
  }
  return IntPoly(std::move(coeffs));
}

IntMatrix leading_principal_submatrix(const IntMatrix& m, int k) {
  if (k < 1 || k > m.dim())
    throw std::out_of_range("leading principal submatrix order must be in [1, dim]");
  IntMatrix out(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

IntMatrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.adjacent(i, j)) a.at(i, j) = 1;
  return a;
}

}  // namespace walkmat
