#include "ballprox/l1_ball_approx.hpp"

#include <algorithm>
#include <cmath>

#include "ballprox/errors.hpp"

namespace ballprox {

double dist_ball_l1(const L1Operator& t) {
  return std::max({op_norm(t) - 1.0, ess_norm(t), 0.0});
}

std::vector<double> truncate_column(const std::vector<double>& column, double d) {
  if (!(d >= 0.0) || !std::isfinite(d)) throw ValidationError("truncation level must be finite and >= 0", "d");
  std::vector<double> k(column.size(), 0.0);
  if (column_mass(column) <= d) return k;

  // Row-tail masses from the bottom up; n is the largest row whose tail
  // mass strictly exceeds d.
  double below = 0.0;  // mass of rows > n
  std::size_t n = column.size();
  while (n-- > 0) {
    if (below + std::abs(column[n]) > d) break;
    below += std::abs(column[n]);
  }
  const double a = std::clamp((d - below) / std::abs(column[n]), 0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) k[i] = column[i];
  k[n] = (1.0 - a) * column[n];
  return k;
}

L1Approx best_ball_approx_l1(const L1Operator& t) {
  const double d = dist_ball_l1(t);

  std::vector<std::vector<double>> cols;
  cols.reserve(t.columns().size());
  for (const auto& c : t.columns()) cols.push_back(truncate_column(c, d));

  std::vector<double> weights;
  weights.reserve(t.tail_weights().size());
  for (double w : t.tail_weights()) weights.push_back(truncate_column({w}, d).front());

  // The truncated const tail is (|limit| - d)_+, which vanishes since d >= R.
  const double tail_after = truncate_column({t.tail().limit()}, d).front();
  if (tail_after != 0.0) throw NumericError("truncated l1 tail is not compact");

  L1Approx r{0.0, L1Operator(std::move(cols), std::move(weights), TailRule::constant(0.0)), Branch::L1Truncation, {}};
  auto& cert = r.certificate;
  cert.method = "column_truncation";
  cert.op_norm = op_norm(t);
  cert.ess_norm = ess_norm(t);
  cert.formula_distance = d;
  for (std::size_t j = 0; j < t.columns().size(); ++j) {
    double mass = 0.0;
    for (std::size_t i = 0; i < t.columns()[j].size(); ++i)
      mass += std::abs(t.columns()[j][i] - r.approximant.columns()[j][i]);
    cert.residuals.push_back(mass);
  }
  for (std::size_t i = 0; i < t.tail_weights().size(); ++i)
    cert.residuals.push_back(std::abs(t.tail_weights()[i] - r.approximant.tail_weights()[i]));
  cert.tail_residual = t.tail().sup_abs();
  r.distance = residual_norm(t, r.approximant);
  return r;
}

double finite_column_oracle(const L1Operator& t, std::size_t n) {
  if (n < t.explicit_column_count()) throw ValidationError("oracle must cover every explicit column", "N");
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double mass = j < t.explicit_column_count() ? column_mass(t.columns()[j])
                                                      : std::abs(t.tail_weight(j - t.explicit_column_count()));
    best = std::max(best, mass - 1.0);
  }
  return best;
}

}  // namespace ballprox
