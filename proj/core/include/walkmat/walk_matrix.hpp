#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "walkmat/graph.hpp"
#include "walkmat/int_matrix.hpp"

namespace walkmat {

/// Everything the arithmetic criterion needs to know about det(W).
///
/// The criterion itself: det(W) / 2^{floor(n/2)} is an odd square-free
/// integer. It is evaluated for every order but only meaningful as a
/// spectral-determination certificate from n = 6 on, which is what
/// criterion_applicable records.
struct WalkReport {
  int n = 0;
  mpz_class det_signed;
  mpz_class det_abs;
  long v2 = -1;                       // 2-adic valuation of det_abs; -1 encodes det == 0
  mpz_class odd_part;                 // det_abs >> v2, or 0 when det == 0
  std::optional<mpz_class> quotient;  // det_abs / 2^{floor(n/2)} when divisible
  bool square_free_odd_quotient = false;
  bool controllable = false;
  bool condition_c = false;
  bool criterion_applicable = false;
};

/// The n x n matrix [e, Ae, A^2 e, ..., A^{n-1} e]; column j+1 is built
/// from column j by one adjacency sweep, never by powering A.
/// Throws std::out_of_range for the order-zero graph.
IntMatrix walk_matrix(const Graph& g);

WalkReport analyze(const Graph& g);

/// det(W) != 0.
bool is_controllable(const Graph& g);

mpz_class walk_det(const Graph& g);

struct ComplementDetCheck {
  mpz_class lhs;  // det of the complement's walk matrix
  mpz_class rhs;  // (-1)^{n(n-1)/2} det(W)
  bool holds = false;
};
/// det(W-bar) == (-1)^{n(n-1)/2} det(W), same vertex ordering on both sides.
ComplementDetCheck verify_complement_det(const Graph& g);

struct MinorCheck {
  int k = 0;
  mpz_class lhs;
  mpz_class rhs;
  bool holds = false;
};
/// The leading-principal-minor refinement: for every k,
/// det(W-bar_k) == (-1)^{k(k-1)/2} det(W_k).
std::vector<MinorCheck> verify_principal_minors(const Graph& g);

struct UnionJoinCheck {
  mpz_class union_lhs;        // det W(G u w), w first
  mpz_class union_rhs;        // det(A) det(W)
  bool union_holds = false;   // signed equality
  mpz_class join_lhs;         // det W(G v w), w first
  mpz_class join_abs_rhs;     // |det(A-bar)| |det(W)|
  bool join_abs_holds = false;
  mpz_class join_signed_rhs;  // (-1)^n det(A-bar) det(W), the observed sign pattern
  bool join_signed_holds = false;
};
/// Determinant identities for one added vertex, isolated or dominating.
/// The signed union identity and the absolute join identity are the
/// normative checks; the signed join factor (-1)^n is recorded alongside.
UnionJoinCheck verify_union_join_det(const Graph& g);

struct SingularExtensionCheck {
  bool applicable = false;  // requires g controllable
  bool union_controllable = false;
  bool union_det_nonzero = false;  // det(A) != 0
  bool union_holds = false;
  bool join_controllable = false;
  bool join_det_nonzero = false;  // det(A-bar) != 0
  bool join_holds = false;
};
/// For controllable g: adding an isolated vertex preserves
/// controllability exactly when A is non-singular, and adding a
/// dominating vertex exactly when A-bar is non-singular.
SingularExtensionCheck check_singular_extension(const Graph& g);

}  // namespace walkmat
