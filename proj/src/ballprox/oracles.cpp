#include "ballprox/oracles.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ballprox/errors.hpp"
#include "ballprox/hilbert_ball_approx.hpp"
#include "ballprox/l1_ball_approx.hpp"

namespace ballprox {
namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

Matrix from_eigen(const Eigen::MatrixXd& e) {
  Matrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

double eigen_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0);
}

class Search {
 public:
  Search(double claimed, double tol) : claimed_(claimed), tol_(tol) {}

  void offer(double residual, const Operator& candidate) {
    ++evaluated_;
    if (!have_ || residual < best_) {
      best_ = residual;
      best_op_ = candidate;
      have_ = true;
    }
  }

  CompetitorReport report(std::size_t trials) const {
    CompetitorReport r;
    r.claimed = claimed_;
    r.tol = tol_;
    r.trials = trials;
    r.evaluated = evaluated_;
    r.best_found = best_;
    r.best_competitor = best_op_;
    r.attained = best_ <= claimed_ + tol_;
    r.pass = r.attained && best_ >= claimed_ - tol_;
    return r;
  }

 private:
  double claimed_;
  double tol_;
  double best_ = 0.0;
  bool have_ = false;
  std::size_t evaluated_ = 0;
  Operator best_op_ = HilbertOperator{};
};

double log_uniform_scale(std::mt19937_64& rng) {
  return std::pow(10.0, -8.0 * std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

// Sequence models (diagonal, shift): the residual against a zero-tail
// competitor is the sup of entry differences, with the untouched tail
// contributing its supremum |limit|.
double sequence_residual(const HilbertOperator& t, const std::vector<double>& k) {
  double r = t.tail().sup_abs();
  const std::size_t len = std::max(k.size(), t.explicit_entries().size());
  for (std::size_t n = 0; n < len; ++n) r = std::max(r, std::abs(t.entry(n) - (n < k.size() ? k[n] : 0.0)));
  return r;
}

HilbertOperator make_like(const HilbertOperator& t, std::vector<double> k) {
  if (t.shape() == HilbertShape::Diagonal) return HilbertOperator::diagonal(std::move(k), TailRule::constant(0.0));
  return HilbertOperator::weighted_shift(std::move(k), TailRule::constant(0.0));
}

void into_ball(std::vector<double>& k) {
  double m = 0.0;
  for (double x : k) m = std::max(m, std::abs(x));
  if (m > 1.0)
    for (double& x : k) x /= m;
}

CompetitorReport search_sequence(const HilbertOperator& t, double claimed, std::size_t trials, std::uint64_t seed,
                                 double tol) {
  Search search(claimed, tol);
  auto offer = [&](std::vector<double> k) {
    into_ball(k);
    search.offer(sequence_residual(t, k), make_like(t, k));
  };

  const auto& e = t.explicit_entries();
  const std::vector<double> construction = best_ball_approx_h(t).approximant.explicit_entries();
  offer(construction);
  offer(soft_threshold_approx(t).approximant.explicit_entries());
  offer(std::vector<double>(e.size(), 0.0));
  {
    double n = op_norm(t);
    std::vector<double> k = e;
    for (double& x : k) x /= std::max(n, 1.0);
    offer(k);
    k = e;
    for (double& x : k) x = std::clamp(x, -1.0, 1.0);
    offer(k);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<std::size_t> extra(0, 3);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t len = e.size() + extra(rng);
    std::vector<double> k(len);
    switch (trial % 3) {
      case 0:
        for (double& x : k) x = unit(rng);
        break;
      case 1: {
        const double s = log_uniform_scale(rng);
        for (std::size_t n = 0; n < len; ++n) k[n] = (n < construction.size() ? construction[n] : 0.0) + s * gauss(rng);
        break;
      }
      default:
        for (std::size_t n = 0; n < len; ++n) k[n] = frac(rng) * t.entry(n);
        break;
    }
    offer(std::move(k));
  }
  return search.report(trials);
}

CompetitorReport search_matrix(const HilbertOperator& t, double claimed, std::size_t trials, std::uint64_t seed,
                               double tol) {
  Search search(claimed, tol);
  const Eigen::MatrixXd target = to_eigen(t.block());
  const Eigen::Index n = target.rows();
  auto offer = [&](Eigen::MatrixXd k) {
    const double kn = eigen_norm(k);
    if (kn > 1.0) k /= kn;
    search.offer(eigen_norm(target - k), HilbertOperator::finite_matrix(from_eigen(k)));
  };

  const Eigen::MatrixXd construction = to_eigen(best_ball_approx_h(t).approximant.block());
  offer(construction);
  offer(to_eigen(soft_threshold_approx(t).approximant.block()));
  offer(to_eigen(svd_clip_oracle(t.block()).approximant));
  offer(Eigen::MatrixXd::Zero(n, n));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  std::normal_distribution<double> gauss;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Eigen::MatrixXd k(n, n);
    switch (trial % 3) {
      case 0:
        for (Eigen::Index i = 0; i < k.size(); ++i) k.data()[i] = unit(rng);
        break;
      case 1: {
        const double s = log_uniform_scale(rng);
        for (Eigen::Index i = 0; i < k.size(); ++i) k.data()[i] = construction.data()[i] + s * gauss(rng);
        break;
      }
      default: {
        const double lambda = frac(rng);
        const double s = log_uniform_scale(rng);
        for (Eigen::Index i = 0; i < k.size(); ++i) k.data()[i] = lambda * target.data()[i] + s * gauss(rng);
        break;
      }
    }
    offer(std::move(k));
  }
  return search.report(trials);
}

// l1: the norm is the sup of column masses, so a competitor is a list of
// columns (each of mass <= 1) plus finitely many tail-column weights.
struct L1Candidate {
  std::vector<std::vector<double>> columns;
  std::vector<double> weights;
};

double l1_residual(const L1Operator& t, const L1Candidate& k) {
  double r = t.tail().sup_abs();
  for (std::size_t j = 0; j < t.columns().size(); ++j) {
    const auto& a = t.columns()[j];
    const auto& b = k.columns[j];
    double mass = 0.0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
      mass += std::abs((i < a.size() ? a[i] : 0.0) - (i < b.size() ? b[i] : 0.0));
    r = std::max(r, mass);
  }
  const std::size_t len = std::max(k.weights.size(), t.tail_weights().size());
  for (std::size_t i = 0; i < len; ++i)
    r = std::max(r, std::abs(t.tail_weight(i) - (i < k.weights.size() ? k.weights[i] : 0.0)));
  return r;
}

void into_ball(L1Candidate& k) {
  for (auto& c : k.columns) {
    const double m = column_mass(c);
    if (m > 1.0)
      for (double& x : c) x /= m;
  }
  for (double& w : k.weights) w = std::clamp(w, -1.0, 1.0);
}

CompetitorReport search_l1(const L1Operator& t, double claimed, std::size_t trials, std::uint64_t seed, double tol) {
  Search search(claimed, tol);
  auto offer = [&](L1Candidate k) {
    into_ball(k);
    const double r = l1_residual(t, k);
    search.offer(r, L1Operator(std::move(k.columns), std::move(k.weights), TailRule::constant(0.0)));
  };

  const L1Operator built_op = best_ball_approx_l1(t).approximant;
  const L1Candidate construction{built_op.columns(), built_op.tail_weights()};
  offer(construction);
  // Per-column nearest point of the l1 ball: radial scaling.
  offer(L1Candidate{t.columns(), t.tail_weights()});
  {
    L1Candidate zero{t.columns(), {}};
    for (auto& c : zero.columns) std::fill(c.begin(), c.end(), 0.0);
    offer(zero);
    L1Candidate scaled{t.columns(), t.tail_weights()};
    const double n = std::max(op_norm(t), 1.0);
    for (auto& c : scaled.columns)
      for (double& x : c) x /= n;
    for (double& w : scaled.weights) w /= n;
    offer(scaled);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<std::size_t> extra_rows(0, 2);
  std::uniform_int_distribution<std::size_t> extra_weights(0, 6);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    L1Candidate k;
    const int mode = static_cast<int>(trial % 3);
    const double s = log_uniform_scale(rng);
    for (std::size_t j = 0; j < t.columns().size(); ++j) {
      const auto& c = t.columns()[j];
      std::vector<double> col(c.size() + extra_rows(rng));
      switch (mode) {
        case 0: {
          const double target_mass = frac(rng);
          for (double& x : col) x = unit(rng);
          const double m = column_mass(col);
          if (m > 0.0)
            for (double& x : col) x *= target_mass / m;
          break;
        }
        case 1:
          for (std::size_t i = 0; i < col.size(); ++i)
            col[i] = (i < construction.columns[j].size() ? construction.columns[j][i] : 0.0) + s * gauss(rng);
          break;
        default: {
          const double lambda = frac(rng);
          for (std::size_t i = 0; i < col.size(); ++i) col[i] = i < c.size() ? lambda * c[i] : 0.0;
          break;
        }
      }
      k.columns.push_back(std::move(col));
    }
    const std::size_t wlen = t.tail_weights().size() + extra_weights(rng);
    double decay = 1.0;
    for (std::size_t i = 0; i < wlen; ++i, decay *= 0.7) {
      switch (mode) {
        case 0: k.weights.push_back(decay * unit(rng)); break;
        case 1: k.weights.push_back((i < construction.weights.size() ? construction.weights[i] : 0.0) + s * gauss(rng)); break;
        default: k.weights.push_back(frac(rng) * t.tail_weight(i)); break;
      }
    }
    offer(std::move(k));
  }
  return search.report(trials);
}

}  // namespace

CompetitorReport competitor_search(const Operator& t, double d_claimed, std::size_t trials, std::uint64_t seed,
                                   double tol) {
  if (!(d_claimed >= 0.0) || !std::isfinite(d_claimed))
    throw ValidationError("claimed distance must be finite and >= 0", "d_claimed");
  if (const auto* h = std::get_if<HilbertOperator>(&t)) {
    if (h->shape() == HilbertShape::FiniteMatrix) return search_matrix(*h, d_claimed, trials, seed, tol);
    return search_sequence(*h, d_claimed, trials, seed, tol);
  }
  return search_l1(std::get<L1Operator>(t), d_claimed, trials, seed, tol);
}

SvdClipResult svd_clip_oracle(const Matrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("svd clip oracle needs a square matrix", "matrix");
  if (m.rows() > 64) throw ValidationError("svd clip oracle supports dimension <= 64", "matrix");
  SvdClipResult r;
  if (m.rows() == 0) {
    r.agrees = true;
    return r;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m), Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw NumericError("reference SVD failed");
  const Eigen::VectorXd clipped = svd.singularValues().cwiseMin(1.0);
  r.approximant = from_eigen(svd.matrixU() * clipped.asDiagonal() * svd.matrixV().transpose());
  r.distance = std::max(svd.singularValues()(0) - 1.0, 0.0);
  r.case_analysis_distance = best_ball_approx_h(HilbertOperator::finite_matrix(m)).distance;
  r.agrees = std::abs(r.distance - r.case_analysis_distance) <= 1e-10;
  return r;
}

double reference_spectral_norm(const Matrix& m) { return eigen_norm(to_eigen(m)); }

SectionBounds finite_section_bounds(const HilbertOperator& t, std::size_t n) {
  SectionBounds b;
  b.section_norm = reference_spectral_norm(finite_section(t, n));
  b.lower = std::max(b.section_norm - 1.0, 0.0);
  b.upper = dist_ball_h(t);
  if (b.lower > b.upper + 1e-12) throw NumericError("finite-section bound exceeds the distance formula");
  return b;
}

SectionBounds finite_section_bounds(const L1Operator& t, std::size_t n) {
  SectionBounds b;
  b.section_norm = max_column_sum(finite_section(t, n));
  b.lower = std::max(b.section_norm - 1.0, 0.0);
  b.upper = dist_ball_l1(t);
  if (b.lower > b.upper + 1e-12) throw NumericError("finite-section bound exceeds the distance formula");
  return b;
}

}  // namespace ballprox
