#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "walkmat/graph.hpp"
#include "walkmat/walk_matrix.hpp"

namespace walkmat {

/// Invariants of a starter graph G_0 that drive the whole sequence:
///   a = |det A(G_0)|, b = |det W(G_0)|, p = |det A(complement(G_1))|
/// with G_1 = G_0 plus one isolated vertex.
struct FamilyParams {
  int n0 = 0;
  mpz_class a;
  mpz_class b;
  mpz_class p;
};

enum class StepOp { None, Union, Join };

struct FamilyStep {
  int index = 0;
  Graph graph;
  StepOp op_applied = StepOp::None;
  mpz_class predicted_abs_det;
  mpz_class actual_abs_det;
  WalkReport walk_report;
};

/// One construction step: an isolated vertex at odd indices, a dominating
/// vertex at even indices, always placed in front.
Graph next_graph(const Graph& g, int next_index);

FamilyParams family_params(const Graph& g0);

/// a^{ceil(i/2)} * b * p^{floor(i/2)}; index 0 returns b by convention.
/// Throws std::domain_error for negative indices.
mpz_class predicted_walk_det(const FamilyParams& params, int index);

/// Grows the sequence up to step k, comparing the predicted |det W|
/// against the exact value at every step. A mismatch means the
/// implementation is broken, not the arithmetic, and throws
/// std::logic_error. Orders are capped at 62 so every step stays
/// serializable as graph6.
std::vector<FamilyStep> build_family(const Graph& g0, int k);

struct StarterVerdict {
  bool ok = false;
  std::vector<std::string> reasons;  // one entry per failed clause
};

/// A usable starter needs {a, p} = {1, 2} and b / 2^{floor(n0/2)} to be
/// an odd square-free integer.
StarterVerdict is_dgs_starter(const Graph& g0);

struct StarterRecord {
  Graph graph;        // canonically labeled representative
  std::string cert;   // canonical graph6
  FamilyParams params;
  WalkReport report;
  bool starter = false;
  std::vector<std::string> reasons;
};

/// Classifies every isomorphism class of order n, sorted by
/// (|det W|, canonical graph6) for reproducible output.
std::vector<StarterRecord> scan_starters(int n, bool connected_only);

}  // namespace walkmat
