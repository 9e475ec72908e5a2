#include "qarrow/adiabatic.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qarrow::adiabatic {

namespace {

Eigen::MatrixXd projector_h0(int n) {
  const double N = std::pow(2.0, n);
  Eigen::MatrixXd m(2, 2);
  m << 1.0 / N, std::sqrt(N - 1.0) / N,
       std::sqrt(N - 1.0) / N, (N - 1.0) / N;
  return -m;
}

Eigen::MatrixXd target_h1(Eigen::Index dim) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  m(0, 0) = -1.0;
  return m;
}

Eigen::VectorXcd projector_initial(int n) {
  const double N = std::pow(2.0, n);
  Eigen::VectorXcd psi(2);
  psi << 1.0 / std::sqrt(N), std::sqrt(1.0 - 1.0 / N);
  return psi;
}

Eigen::VectorXcd binomial_initial(int n) {
  Eigen::VectorXcd psi(n + 1);
  double c = 1.0;  // C(n, k), updated multiplicatively
  for (int k = 0; k <= n; ++k) {
    psi[k] = std::sqrt(c / std::pow(2.0, n));
    c = c * (n - k) / (k + 1.0);
  }
  return psi;
}

ProbVector expanded_symmetric_probs(const Eigen::VectorXcd& psi, Eigen::Index N) {
  const double mass = psi.squaredNorm();
  const double p = std::norm(psi[0]) / mass;
  Eigen::VectorXd full = Eigen::VectorXd::Constant(
      N, (1.0 - p) / static_cast<double>(N - 1));
  full[0] = p;
  return make_prob_vector(std::move(full));
}

ProbVector normalized_probs(const Eigen::VectorXcd& psi) {
  Eigen::VectorXd p = psi.cwiseAbs2();
  return make_prob_vector(p / p.sum());
}

// Eigenvalue gap of a symmetric 2x2 matrix.
double gap2x2(const Eigen::MatrixXd& m) {
  const double d = m(0, 0) - m(1, 1);
  return std::sqrt(d * d + 4.0 * m(0, 1) * m(0, 1));
}

}  // namespace

HamiltonianProvider projector_hamiltonian(int n) {
  if (n < 1) throw std::invalid_argument("projector_hamiltonian: n must be >= 1");
  const Eigen::MatrixXd h0 = projector_h0(n);
  const Eigen::MatrixXd h1 = target_h1(2);
  return {2, [h0, h1](double s) -> Eigen::MatrixXd {
            return (1.0 - s) * h0 + s * h1;
          }};
}

HamiltonianProvider farhi_hamiltonian(int n) {
  if (n < 1) throw std::invalid_argument("farhi_hamiltonian: n must be >= 1");
  Eigen::MatrixXd h0 = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) h0(k, k) = n / 2.0;
  for (int j = 1; j <= n; ++j) {
    const double c = std::sqrt(static_cast<double>(j)) *
                     std::sqrt(static_cast<double>(n - j + 1));
    h0(j - 1, j) = -c;
    h0(j, j - 1) = -c;
  }
  const Eigen::MatrixXd h1 = target_h1(n + 1);
  return {n + 1, [h0, h1](double s) -> Eigen::MatrixXd {
            return (1.0 - s) * h0 + s * h1;
          }};
}

double scan_norm_bound(const HamiltonianProvider& H) {
  double bound = 0.0;
  for (double s : {0.0, 0.5, 1.0}) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.eval(s),
                                                      Eigen::EigenvaluesOnly);
    bound = std::max(bound, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  return bound;
}

EvolutionConfig default_config(const HamiltonianProvider& H, double T) {
  if (T <= 0.0) throw std::invalid_argument("default_config: T must be positive");
  EvolutionConfig cfg;
  cfg.T = T;
  cfg.dt = std::min({0.01, 0.05 / scan_norm_bound(H), T});
  const long steps = static_cast<long>(std::ceil(T / cfg.dt));
  cfg.snapshot_stride = static_cast<int>(std::max(1L, steps / 500));
  return cfg;
}

Evolution rk4_evolve(
    const HamiltonianProvider& H, const Eigen::VectorXcd& psi0,
    const EvolutionConfig& cfg, const std::string& algorithm_name,
    const std::function<ProbVector(const Eigen::VectorXcd&)>& snapshot_probs,
    const std::function<void(double, const Eigen::VectorXcd&)>& observer) {
  if (psi0.size() != H.dim)
    throw std::invalid_argument("rk4_evolve: psi0 dimension mismatch");
  if (cfg.dt <= 0.0 || cfg.dt > cfg.T || cfg.snapshot_stride < 1)
    throw std::invalid_argument("rk4_evolve: bad EvolutionConfig");
  if (cfg.dt * scan_norm_bound(H) > 0.05 * (1.0 + 1e-12))
    throw std::invalid_argument("rk4_evolve: dt violates the stability policy");

  const long steps = static_cast<long>(std::ceil(cfg.T / cfg.dt));
  const double dt = cfg.T / static_cast<double>(steps);

  auto probs = snapshot_probs
                   ? snapshot_probs
                   : std::function<ProbVector(const Eigen::VectorXcd&)>(normalized_probs);

  Evolution out;
  out.trace.algorithm = algorithm_name;
  Eigen::VectorXcd psi = psi0;

  long snapshot_count = 0;
  auto record = [&](double t) {
    out.trace.snapshots.push_back({"k" + std::to_string(snapshot_count), probs(psi)});
    ++snapshot_count;
    out.norm_drift = std::max(out.norm_drift, std::abs(psi.norm() - 1.0));
    if (observer) observer(t, psi);
    if (out.norm_drift > 1e-3)
      throw std::runtime_error("rk4_evolve: norm drift " +
                               std::to_string(out.norm_drift) +
                               " exceeds 1e-3, integration unstable");
  };

  record(0.0);
  const std::complex<double> mi(0.0, -1.0);
  auto rhs = [&](double t, const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
    return mi * (H.eval(t / cfg.T) * y);
  };
  for (long step = 0; step < steps; ++step) {
    const double t = step * dt;
    const Eigen::VectorXcd k1 = rhs(t, psi);
    const Eigen::VectorXcd k2 = rhs(t + dt / 2.0, psi + (dt / 2.0) * k1);
    const Eigen::VectorXcd k3 = rhs(t + dt / 2.0, psi + (dt / 2.0) * k2);
    const Eigen::VectorXcd k4 = rhs(t + dt, psi + dt * k3);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((step + 1) % cfg.snapshot_stride == 0 || step + 1 == steps)
      record((step + 1) * dt);
  }

  out.final_state = std::move(psi);
  return out;
}

std::size_t first_peak(const std::vector<double>& series, double prominence) {
  if (series.empty()) throw std::invalid_argument("first_peak: empty series");
  double best = series[0];
  std::size_t best_i = 0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (series[i] > best) {
      best = series[i];
      best_i = i;
    } else if (best - series[i] > prominence) {
      return best_i;
    }
  }
  return best_i;
}

std::size_t peak_snapshot(const Trace& t, double prominence) {
  std::vector<double> success;
  success.reserve(t.snapshots.size());
  for (const auto& s : t.snapshots) success.push_back(s.probs[0]);
  return first_peak(success, prominence);
}

Trace run_projector_sweep(int n, double T) {
  const HamiltonianProvider H = projector_hamiltonian(n);
  return run_projector_sweep(n, default_config(H, T));
}

Trace run_projector_sweep(int n, const EvolutionConfig& cfg) {
  if (n > 12) throw std::invalid_argument("run_projector_sweep: n capped at 12");
  const HamiltonianProvider H = projector_hamiltonian(n);
  const Eigen::Index N = Eigen::Index{1} << n;
  Evolution ev = rk4_evolve(H, projector_initial(n), cfg, "adiabatic-projector",
                            [N](const Eigen::VectorXcd& psi) {
                              return expanded_symmetric_probs(psi, N);
                            });
  ev.trace.n_qubits = n;
  return std::move(ev.trace);
}

Trace run_farhi_sweep(int n, double T) {
  const HamiltonianProvider H = farhi_hamiltonian(n);
  return run_farhi_sweep(n, default_config(H, T));
}

Trace run_farhi_sweep(int n, const EvolutionConfig& cfg) {
  if (n > 10) throw std::invalid_argument("run_farhi_sweep: n capped at 10");
  const HamiltonianProvider H = farhi_hamiltonian(n);
  Evolution ev = rk4_evolve(H, binomial_initial(n), cfg, "adiabatic-farhi");
  ev.trace.n_qubits = n;
  return std::move(ev.trace);
}

double static_mixture_success(int n, double t) {
  if (n < 1) throw std::invalid_argument("static_mixture_success: n must be >= 1");
  if (t < 0.0) throw std::invalid_argument("static_mixture_success: t must be >= 0");
  const double N = std::pow(2.0, n);
  const double a = 1.0 / std::sqrt(N);
  const double b = std::sqrt(1.0 - 1.0 / N);
  // H = -|s><s| - |0><0| in the {|0>, orthogonal} basis, |s> = (a, b).
  Eigen::MatrixXd H(2, 2);
  H << -(a * a + 1.0), -a * b,
       -a * b, -(b * b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  const Eigen::VectorXd lam = es.eigenvalues();
  const Eigen::MatrixXd V = es.eigenvectors();
  Eigen::Vector2cd psi0(a, b);
  Eigen::Vector2cd coeff = V.transpose() * psi0;
  for (int k = 0; k < 2; ++k) coeff[k] *= std::polar(1.0, -lam[k] * t);
  const Eigen::Vector2cd psi = V * coeff;
  return std::norm(psi[0]);
}

Trace run_static_sweep(int n, double T) {
  const double N = std::pow(2.0, n);
  const double a = 1.0 / std::sqrt(N);
  const double b = std::sqrt(1.0 - 1.0 / N);
  Eigen::MatrixXd Hm(2, 2);
  Hm << -(a * a + 1.0), -a * b,
        -a * b, -(b * b);
  const HamiltonianProvider H{2, [Hm](double) { return Hm; }};
  const Eigen::Index Nfull = Eigen::Index{1} << n;
  Evolution ev = rk4_evolve(H, projector_initial(n), default_config(H, T),
                            "adiabatic-static",
                            [Nfull](const Eigen::VectorXcd& psi) {
                              return expanded_symmetric_probs(psi, Nfull);
                            });
  ev.trace.n_qubits = n;
  return std::move(ev.trace);
}

std::pair<double, double> min_gap_projector(int n) {
  const HamiltonianProvider H = projector_hamiltonian(n);
  double best_s = 0.0, best = gap2x2(H.eval(0.0));
  for (double s = 0.0; s <= 1.0 + 1e-15; s += 1e-4) {
    const double g = gap2x2(H.eval(std::min(s, 1.0)));
    if (g < best) {
      best = g;
      best_s = std::min(s, 1.0);
    }
  }
  // Ternary refinement around the scan minimum.
  double lo = std::max(0.0, best_s - 1e-4), hi = std::min(1.0, best_s + 1e-4);
  for (int iter = 0; iter < 60; ++iter) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (gap2x2(H.eval(m1)) < gap2x2(H.eval(m2))) hi = m2;
    else lo = m1;
  }
  const double s_min = 0.5 * (lo + hi);
  return {s_min, gap2x2(H.eval(s_min))};
}

}  // namespace qarrow::adiabatic
