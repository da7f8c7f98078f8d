#include "ballprox/hilbert_ball_approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ballprox/errors.hpp"
#include "ballprox/jacobi_svd.hpp"

namespace ballprox {
namespace {

double shrink(double x, double by) {
  const double m = std::abs(x) - by;
  return m > 0.0 ? std::copysign(m, x) : 0.0;
}

HilbertOperator with_entries(const HilbertOperator& like, std::vector<double> entries) {
  if (like.shape() == HilbertShape::Diagonal)
    return HilbertOperator::diagonal(std::move(entries), TailRule::constant(0.0));
  return HilbertOperator::weighted_shift(std::move(entries), TailRule::constant(0.0));
}

void fill_residuals(const HilbertOperator& t, HilbertApprox& r) {
  auto& cert = r.certificate;
  cert.op_norm = op_norm(t);
  cert.ess_norm = ess_norm(t);
  cert.formula_distance = dist_ball_h(t);
  cert.residuals.clear();
  if (t.shape() == HilbertShape::FiniteMatrix) {
    const std::size_t n = std::max(t.block().rows(), r.approximant.block().rows());
    cert.residuals = jacobi_svd(t.block().resized(n, n) - r.approximant.block().resized(n, n)).singular_values;
    cert.tail_residual = 0.0;
  } else {
    for (std::size_t n = 0; n < t.explicit_entries().size(); ++n)
      cert.residuals.push_back(std::abs(t.entry(n) - r.approximant.entry(n)));
    cert.tail_residual = t.tail().sup_abs();
  }
  r.distance = residual_norm(t, r.approximant);
}

HilbertApprox compact_input(const HilbertOperator& t, double norm) {
  HilbertApprox r{0.0, t.scaled(1.0 / std::max(norm, 1.0)), Branch::CompactInput, {}};
  if (t.is_sequence_model()) r.approximant = with_entries(t, r.approximant.explicit_entries());
  return r;
}

}  // namespace

std::string to_string(Branch branch) {
  switch (branch) {
    case Branch::CompactInput: return "CompactInput";
    case Branch::NonAttaining: return "NonAttaining";
    case Branch::FiniteHead: return "FiniteHead";
    case Branch::InfiniteSeries: return "InfiniteSeries";
    case Branch::SmallNorm: return "SmallNorm";
    case Branch::L1Truncation: return "L1Truncation";
  }
  return "unknown";
}

double dist_ball_h(const HilbertOperator& t) {
  return std::max({op_norm(t) - 1.0, ess_norm(t), 0.0});
}

MaximizerEnumeration enumerate_maximizers(const HilbertOperator& t) {
  if (!t.is_sequence_model()) throw ValidationError("maximizer enumeration needs a diagonal or shift model");
  const auto& e = t.explicit_entries();
  const double tail_sup = t.tail().sup_abs();

  // Every remaining supremum is at least the tail supremum, so exactly the
  // explicit entries with |e| >= tail_sup are ever chosen, largest first.
  MaximizerEnumeration out;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (std::abs(e[i]) >= tail_sup) out.explicit_indices.push_back(i);
  std::stable_sort(out.explicit_indices.begin(), out.explicit_indices.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(e[a]) > std::abs(e[b]); });
  out.continues_into_tail = t.tail().attains_sup();
  return out;
}

HilbertApprox best_ball_approx_h(const HilbertOperator& t) {
  const double norm = op_norm(t);
  const double delta = ess_norm(t);

  HilbertApprox r;
  if (delta == 0.0) {
    r = compact_input(t, norm);
  } else if (norm > 1.0 && !attains_norm(t)) {
    r.branch = Branch::NonAttaining;
    r.approximant = with_entries(t, std::vector<double>(t.explicit_entries().size(), 0.0));
  } else if (norm > 1.0) {
    const auto& e = t.explicit_entries();
    const MaximizerEnumeration order = enumerate_maximizers(t);
    std::vector<double> k(e.size(), 0.0);
    if (!order.continues_into_tail) {
      r.branch = Branch::FiniteHead;
      for (std::size_t i : order.explicit_indices) k[i] = e[i] / norm;
      r.certificate.scaled_count = order.explicit_indices.size();
    } else {
      // Scale the first K maximizers, K minimal with |e_n| - delta <= 1 for
      // every later n. Tail entries equal delta, so K stays in the explicit
      // part.
      r.branch = Branch::InfiniteSeries;
      std::size_t scaled = 0;
      for (std::size_t pos = 0; pos < order.explicit_indices.size(); ++pos)
        if (std::abs(e[order.explicit_indices[pos]]) - delta > 1.0) scaled = pos + 1;
      for (std::size_t pos = 0; pos < order.explicit_indices.size(); ++pos) {
        const std::size_t i = order.explicit_indices[pos];
        k[i] = pos < scaled ? e[i] / norm : shrink(e[i], delta);
      }
      r.certificate.scaled_count = scaled;
    }
    r.certificate.enumeration = order.explicit_indices;
    r.approximant = with_entries(t, std::move(k));
  } else {
    r.branch = Branch::SmallNorm;
    std::vector<double> k = t.explicit_entries();
    for (double& x : k) x = shrink(x, delta);
    r.approximant = with_entries(t, std::move(k));
  }
  r.certificate.method = "case_analysis";
  fill_residuals(t, r);
  return r;
}

HilbertApprox soft_threshold_approx(const HilbertOperator& t) {
  const double d = dist_ball_h(t);
  HilbertApprox r;
  if (t.shape() == HilbertShape::FiniteMatrix) {
    const Svd svd = jacobi_svd(t.block());
    const std::size_t n = svd.singular_values.size();
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) s(i, i) = shrink(svd.singular_values[i], d);
    r.approximant = HilbertOperator::finite_matrix(svd.u * s * svd.v.transposed());
  } else {
    std::vector<double> k = t.explicit_entries();
    for (double& x : k) x = shrink(x, d);
    r.approximant = with_entries(t, std::move(k));
  }
  // Same branch label as the case analysis, so the two constructions can be
  // compared per branch.
  const double norm = op_norm(t);
  if (ess_norm(t) == 0.0)
    r.branch = Branch::CompactInput;
  else if (norm <= 1.0)
    r.branch = Branch::SmallNorm;
  else if (!attains_norm(t))
    r.branch = Branch::NonAttaining;
  else
    r.branch = enumerate_maximizers(t).continues_into_tail ? Branch::InfiniteSeries : Branch::FiniteHead;
  r.certificate.method = "soft_threshold";
  fill_residuals(t, r);
  return r;
}

bool isometry_distance_check(double a, const HilbertOperator& t) {
  constexpr double kTol = 1e-12;
  if (t.shape() != HilbertShape::WeightedShift || t.tail().kind() != TailKind::Const ||
      std::abs(t.tail().limit()) != 1.0)
    throw ValidationError("isometry check needs a weighted shift with unimodular const tail");
  for (double w : t.explicit_entries())
    if (std::abs(w) != 1.0) throw ValidationError("isometry check needs unimodular shift weights", "explicit");
  if (!std::isfinite(a)) throw ValidationError("scalar must be finite", "a");

  const HilbertOperator scaled = t.scaled(a);
  const double ball = dist_ball_h(scaled);
  const double compact = ess_norm(scaled);
  return std::abs(ball - compact) <= kTol && std::abs(compact - std::abs(a)) <= kTol;
}

HilbertApprox positive_ball_approx(const HilbertOperator& t) {
  if (t.shape() != HilbertShape::Diagonal)
    throw ValidationError("positive approximation needs a diagonal operator", "model");
  for (double x : t.explicit_entries())
    if (x < 0.0) throw ValidationError("positive approximation needs nonnegative entries", "explicit");
  if (t.tail().limit() < 0.0)
    throw ValidationError("positive approximation needs a nonnegative tail", "tail");

  HilbertApprox r = best_ball_approx_h(t);
  for (std::size_t i = 0; i < r.approximant.explicit_entries().size(); ++i) {
    const double k = r.approximant.explicit_entries()[i];
    if (k < 0.0 || k > t.explicit_entries()[i])
      throw NumericError("positive approximant left the order interval [0, T]");
  }
  r.certificate.method = "positive_case_analysis";
  return r;
}

}  // namespace ballprox
