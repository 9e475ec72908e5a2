#include "qarrow/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qarrow::grover {

void oracle_reflect(StateVector& s, std::uint64_t y0) {
  if (y0 >= static_cast<std::uint64_t>(s.dim()))
    throw std::out_of_range("oracle_reflect: target out of range");
  s.amps()[static_cast<Eigen::Index>(y0)] *= -1.0;
}

void diffusion(StateVector& s) {
  const std::complex<double> twice_mean = 2.0 * s.amps().mean();
  s.amps() = Eigen::VectorXcd::Constant(s.dim(), twice_mean) - s.amps();
}

Trace run(const Config& cfg) {
  StateVector s = StateVector::uniform(cfg.n);
  if (cfg.initial) {
    if (cfg.initial->size() != s.dim())
      throw std::invalid_argument("grover::run: initial state has wrong dimension");
    s.amps() = *cfg.initial;
  }
  if (cfg.target >= static_cast<std::uint64_t>(s.dim()))
    throw std::out_of_range("grover::run: target out of range");
  if (cfg.max_iters < 1)
    throw std::invalid_argument("grover::run: max_iters must be >= 1");

  Trace t;
  t.algorithm = "grover";
  t.n_qubits = cfg.n;
  t.snapshots.push_back({"m0", s.probabilities()});
  for (int m = 1; m <= cfg.max_iters; ++m) {
    oracle_reflect(s, cfg.target);
    diffusion(s);
    t.snapshots.push_back({"m" + std::to_string(m), s.probabilities()});
  }
  return t;
}

ReducedModel ReducedModel::for_size(std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("ReducedModel: N must be >= 2");
  ReducedModel m;
  m.N = N;
  m.theta = 2.0 * std::asin(1.0 / std::sqrt(static_cast<double>(N)));
  return m;
}

double reduced_success_amplitude(const ReducedModel& model, int m) {
  if (m < 0) throw std::invalid_argument("reduced_success_amplitude: m must be >= 0");
  return std::sin((2.0 * m + 1.0) * model.theta / 2.0);
}

int optimal_iterations(std::uint64_t N) {
  const ReducedModel model = ReducedModel::for_size(N);
  const double est = (std::numbers::pi / 2.0 - model.theta / 2.0) / model.theta;
  const int limit = static_cast<int>(
      std::ceil(std::numbers::pi * std::sqrt(static_cast<double>(N))));

  auto p = [&](int m) {
    const double a = reduced_success_amplitude(model, m);
    return a * a;
  };

  int best_m = 0;
  double best = p(0);
  for (int m = 1; m <= limit; ++m) {
    const double v = p(m);
    if (v > best + kPrefixTol) {
      best = v;
      best_m = m;
    } else if (v < best - kPrefixTol) {
      break;  // descending: the first peak is behind us
    } else if (std::abs(m - est) <= std::abs(best_m - est)) {
      best_m = m;  // plateau: move toward (or past) the closed-form estimate
    }
  }
  return best_m;
}

Eigen::VectorXd symmetric_list(double p, std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("symmetric_list: N must be >= 2");
  Eigen::VectorXd v = Eigen::VectorXd::Constant(
      static_cast<Eigen::Index>(N), (1.0 - p) / static_cast<double>(N - 1));
  v[0] = p;
  return v;
}

bool check_symmetric_step(double p, double p_next, std::uint64_t N, double tol) {
  if (p < 0.0 || p > 1.0 || p_next < 0.0 || p_next > 1.0)
    throw std::invalid_argument("check_symmetric_step: probabilities outside [0,1]");
  if (p > p_next + tol) return false;
  const MajorizationVerdict v =
      compare(symmetric_list(p, N), symmetric_list(p_next, N), tol);
  return v.relation == Relation::FirstPrecedes || v.relation == Relation::Equal;
}

StateVector counterexample_start(int n, std::uint64_t target) {
  StateVector s = StateVector::uniform(n);
  const std::uint64_t boosted = target == 0 ? 1 : 0;
  s.amps()[static_cast<Eigen::Index>(boosted)] *= 2.0;
  s.amps() /= s.amps().norm();
  return s;
}

}  // namespace qarrow::grover
