#include "walkmat/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "walkmat/canonical.hpp"
#include "walkmat/enumerate.hpp"
#include "walkmat/factorize.hpp"
#include "walkmat/graph6.hpp"
#include "walkmat/int_matrix.hpp"

namespace walkmat {

namespace {

// graph6 serialization caps the family at 62 vertices; determinants stay
// cheap well past that anyway
constexpr int family_order_bound = 62;

StarterVerdict verdict_from_params(const FamilyParams& params) {
  StarterVerdict verdict;
  verdict.ok = true;

  const bool ap_ok = (params.a == 1 && params.p == 2) || (params.a == 2 && params.p == 1);
  if (!ap_ok) {
    verdict.ok = false;
    verdict.reasons.push_back("{a,p} != {1,2} (a=" + params.a.get_str() +
                              ", p=" + params.p.get_str() + ")");
  }

  const auto half = static_cast<mp_bitcnt_t>(params.n0 / 2);
  if (!mpz_divisible_2exp_p(params.b.get_mpz_t(), half)) {
    verdict.ok = false;
    verdict.reasons.push_back("2^floor(n0/2) does not divide b (b=" + params.b.get_str() + ")");
  } else {
    mpz_class quotient;
    mpz_tdiv_q_2exp(quotient.get_mpz_t(), params.b.get_mpz_t(), half);
    if (quotient == 0 || !is_odd_square_free(quotient)) {
      verdict.ok = false;
      verdict.reasons.push_back("b / 2^floor(n0/2) is not odd and square-free (quotient=" +
                                quotient.get_str() + ")");
    }
  }
  return verdict;
}

}  // namespace

Graph next_graph(const Graph& g, int next_index) {
  if (next_index < 1) throw std::domain_error("family step index must be at least 1");
  return next_index % 2 == 1 ? union_with_vertex(g) : join_with_vertex(g);
}

FamilyParams family_params(const Graph& g0) {
  if (g0.order() < 1) throw std::out_of_range("family starters need at least one vertex");
  FamilyParams params;
  params.n0 = g0.order();
  params.a = abs(determinant(adjacency_matrix(g0)));
  params.b = abs(walk_det(g0));
  params.p = abs(determinant(adjacency_matrix(complement(union_with_vertex(g0)))));
  return params;
}

mpz_class predicted_walk_det(const FamilyParams& params, int index) {
  if (index < 0) throw std::domain_error("family step index must be non-negative");
  if (index == 0) return params.b;
  mpz_class a_power, p_power;
  mpz_pow_ui(a_power.get_mpz_t(), params.a.get_mpz_t(),
             static_cast<unsigned long>((index + 1) / 2));
  mpz_pow_ui(p_power.get_mpz_t(), params.p.get_mpz_t(), static_cast<unsigned long>(index / 2));
  return a_power * params.b * p_power;
}

std::vector<FamilyStep> build_family(const Graph& g0, int k) {
  if (k < 0) throw std::domain_error("family length must be non-negative");
  if (g0.order() + k > family_order_bound)
    throw std::out_of_range("family would exceed " + std::to_string(family_order_bound) +
                            " vertices");

  const FamilyParams params = family_params(g0);
  std::vector<FamilyStep> steps;
  steps.reserve(static_cast<std::size_t>(k) + 1);

  Graph current = g0;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) current = next_graph(current, i);
    FamilyStep step;
    step.index = i;
    step.graph = current;
    step.op_applied = i == 0 ? StepOp::None : (i % 2 == 1 ? StepOp::Union : StepOp::Join);
    step.predicted_abs_det = predicted_walk_det(params, i);
    step.walk_report = analyze(current);
    step.actual_abs_det = step.walk_report.det_abs;
    if (step.predicted_abs_det != step.actual_abs_det)
      throw std::logic_error("walk determinant prediction failed at step " + std::to_string(i) +
                             ": predicted " + step.predicted_abs_det.get_str() + ", got " +
                             step.actual_abs_det.get_str());
    steps.push_back(std::move(step));
  }
  return steps;
}

StarterVerdict is_dgs_starter(const Graph& g0) { return verdict_from_params(family_params(g0)); }

std::vector<StarterRecord> scan_starters(int n, bool connected_only) {
  std::vector<StarterRecord> records;
  for (const Graph& g : graph_classes(n, connected_only)) {
    StarterRecord record;
    record.graph = g;
    record.cert = graph6_encode(g);  // representatives are canonically labeled
    record.params = family_params(g);
    record.report = analyze(g);
    StarterVerdict verdict = verdict_from_params(record.params);
    record.starter = verdict.ok;
    record.reasons = std::move(verdict.reasons);
    records.push_back(std::move(record));
  }
  std::sort(records.begin(), records.end(), [](const StarterRecord& x, const StarterRecord& y) {
    if (x.report.det_abs != y.report.det_abs) return x.report.det_abs < y.report.det_abs;
    return x.cert < y.cert;
  });
  return records;
}

}  // namespace walkmat
