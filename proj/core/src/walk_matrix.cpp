#include "walkmat/walk_matrix.hpp"

#include <bit>
#include <stdexcept>

#include "walkmat/factorize.hpp"

namespace walkmat {

IntMatrix walk_matrix(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::out_of_range("the walk matrix needs at least one vertex");

  IntMatrix w(n);
  std::vector<mpz_class> column(static_cast<std::size_t>(n), mpz_class(1));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) w.at(i, j) = column[static_cast<std::size_t>(i)];
    if (j + 1 == n) break;
    std::vector<mpz_class> next(static_cast<std::size_t>(n), mpz_class(0));
    for (int i = 0; i < n; ++i) {
      mpz_class& sum = next[static_cast<std::size_t>(i)];
      for (std::uint64_t nb = g.neighbour_mask(i); nb != 0; nb &= nb - 1)
        sum += column[static_cast<std::size_t>(std::countr_zero(nb))];
    }
    column = std::move(next);
  }
  return w;
}

mpz_class walk_det(const Graph& g) { return determinant(walk_matrix(g)); }

bool is_controllable(const Graph& g) { return walk_det(g) != 0; }

WalkReport analyze(const Graph& g) {
  WalkReport report;
  report.n = g.order();
  report.det_signed = walk_det(g);
  report.det_abs = abs(report.det_signed);
  report.criterion_applicable = report.n >= 6;
  report.controllable = report.det_signed != 0;

  if (report.det_abs != 0) {
    report.v2 = static_cast<long>(two_adic_valuation(report.det_abs));
    mpz_tdiv_q_2exp(report.odd_part.get_mpz_t(), report.det_abs.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(report.v2));
  }

  const auto half = static_cast<mp_bitcnt_t>(report.n / 2);
  if (mpz_divisible_2exp_p(report.det_abs.get_mpz_t(), half)) {
    mpz_class q;
    mpz_tdiv_q_2exp(q.get_mpz_t(), report.det_abs.get_mpz_t(), half);
    report.quotient = q;
    report.square_free_odd_quotient = q > 0 && is_odd_square_free(q);
  }
  report.condition_c = report.square_free_odd_quotient;
  return report;
}

ComplementDetCheck verify_complement_det(const Graph& g) {
  const int n = g.order();
  ComplementDetCheck check;
  check.lhs = walk_det(complement(g));
  check.rhs = walk_det(g);
  if ((n * (n - 1) / 2) % 2 != 0) check.rhs = -check.rhs;
  check.holds = check.lhs == check.rhs;
  return check;
}

std::vector<MinorCheck> verify_principal_minors(const Graph& g) {
  const int n = g.order();
  const IntMatrix w = walk_matrix(g);
  const IntMatrix wbar = walk_matrix(complement(g));

  std::vector<MinorCheck> checks;
  checks.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    MinorCheck check;
    check.k = k;
    check.lhs = determinant(leading_principal_submatrix(wbar, k));
    check.rhs = determinant(leading_principal_submatrix(w, k));
    if ((k * (k - 1) / 2) % 2 != 0) check.rhs = -check.rhs;
    check.holds = check.lhs == check.rhs;
    checks.push_back(std::move(check));
  }
  return checks;
}

UnionJoinCheck verify_union_join_det(const Graph& g) {
  const int n = g.order();
  UnionJoinCheck check;

  const mpz_class det_w = walk_det(g);
  const mpz_class det_a = determinant(adjacency_matrix(g));
  const mpz_class det_abar = determinant(adjacency_matrix(complement(g)));

  check.union_lhs = walk_det(union_with_vertex(g));
  check.union_rhs = det_a * det_w;
  check.union_holds = check.union_lhs == check.union_rhs;

  check.join_lhs = walk_det(join_with_vertex(g));
  check.join_abs_rhs = abs(det_abar) * abs(det_w);
  check.join_abs_holds = abs(check.join_lhs) == check.join_abs_rhs;

  check.join_signed_rhs = det_abar * det_w;
  if (n % 2 != 0) check.join_signed_rhs = -check.join_signed_rhs;
  check.join_signed_holds = check.join_lhs == check.join_signed_rhs;
  return check;
}

SingularExtensionCheck check_singular_extension(const Graph& g) {
  SingularExtensionCheck check;
  check.applicable = is_controllable(g);
  if (!check.applicable) return check;

  check.union_controllable = is_controllable(union_with_vertex(g));
  check.union_det_nonzero = determinant(adjacency_matrix(g)) != 0;
  check.union_holds = check.union_controllable == check.union_det_nonzero;

  check.join_controllable = is_controllable(join_with_vertex(g));
  check.join_det_nonzero = determinant(adjacency_matrix(complement(g))) != 0;
  check.join_holds = check.join_controllable == check.join_det_nonzero;
  return check;
}

}  // namespace walkmat
