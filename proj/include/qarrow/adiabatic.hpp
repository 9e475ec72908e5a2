#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qarrow/majorization.hpp"

namespace qarrow::adiabatic {

// Time-parameterized real-symmetric Hamiltonian H(s), s = t/T in [0,1], hbar = 1.
struct HamiltonianProvider {
  Eigen::Index dim = 0;
  std::function<Eigen::MatrixXd(double)> eval;
};

// Interpolation between -|s><s| and -|0><0| in the {target, orthogonal-rest}
// basis, N = 2^n.
HamiltonianProvider projector_hamiltonian(int n);

// Transverse-field model reduced to the n+1 dimensional symmetric subspace:
// eval(s) = (1-s) [(n/2) I - N] + s H1 with N tridiagonal,
// N[j-1][j] = sqrt(j) sqrt(n-j+1), and H1 = -diag(1, 0, ..., 0).
HamiltonianProvider farhi_hamiltonian(int n);

struct EvolutionConfig {
  double T = 1.0;
  double dt = 0.01;
  int snapshot_stride = 1;
};

// Spectral-norm bound max over s in {0, 1/2, 1} used by the dt policy.
double scan_norm_bound(const HamiltonianProvider& H);

// dt = min(0.01, 0.05 / scan_norm_bound), stride targeting ~500 snapshots.
EvolutionConfig default_config(const HamiltonianProvider& H, double T);

struct Evolution {
  Trace trace;
  Eigen::VectorXcd final_state;
  double norm_drift = 0.0;  // max |norm - 1| seen at snapshot times
};

// Classic fixed-step RK4 on psi' = -i H(t/T) psi. Snapshot probabilities are
// normalized by the current mass; the state itself is never renormalized.
// Throws std::invalid_argument if cfg violates dt * scan_norm_bound <= 0.05,
// std::runtime_error if the norm drifts by more than 1e-3.
Evolution rk4_evolve(
    const HamiltonianProvider& H, const Eigen::VectorXcd& psi0,
    const EvolutionConfig& cfg, const std::string& algorithm_name,
    const std::function<ProbVector(const Eigen::VectorXcd&)>& snapshot_probs = {},
    const std::function<void(double, const Eigen::VectorXcd&)>& observer = {});

// First local maximum with the given prominence: the first index whose value the
// running maximum later exceeds by more than `prominence`, else the global max.
std::size_t first_peak(const std::vector<double>& series, double prominence = 1e-6);

// Index of the first-peak snapshot of the success probability (entry 0).
std::size_t peak_snapshot(const Trace& t, double prominence = 1e-6);

// 2-level sweep from |s>; each snapshot expanded to the N-entry symmetric list
// [p, (1-p)/(N-1), ...]. Labels k0, k1, ...
Trace run_projector_sweep(int n, double T);
Trace run_projector_sweep(int n, const EvolutionConfig& cfg);

// Symmetric-subspace sweep from the binomial-weight state; snapshots are the n+1
// subspace probabilities.
Trace run_farhi_sweep(int n, double T);
Trace run_farhi_sweep(int n, const EvolutionConfig& cfg);

// Constant H = -|s><s| - |0><0|: exact success probability |<0|e^{-iHt}|s>|^2
// via 2x2 eigendecomposition.
double static_mixture_success(int n, double t);

// Static-mixture trace integrated with RK4 (same expansion as the projector sweep).
Trace run_static_sweep(int n, double T);

// Dense scan (step 1e-4) plus ternary refinement of the projector-model gap.
// Returns (s_min, gap).
std::pair<double, double> min_gap_projector(int n);

}  // namespace qarrow::adiabatic
