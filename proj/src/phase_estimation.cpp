#include "qarrow/phase_estimation.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qarrow::qpe {

namespace {
void check_config(const Config& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("qpe: n must be >= 1");
  if (cfg.phi < 0.0 || cfg.phi >= 1.0)
    throw std::invalid_argument("qpe: phi must lie in [0, 1)");
}
}  // namespace

StateVector prepare_kickback(const Config& cfg, Trace* record) {
  check_config(cfg);
  StateVector s = StateVector::uniform(cfg.n);
  if (record) record->snapshots.push_back({"t0", s.probabilities()});
  int stage = 1;
  for (int j = cfg.n - 1; j >= 0; --j) {
    // Controlled power of U on the eigenvector register reduces to the local
    // phase e^{-2 pi i 2^j phi} on the qubit of weight 2^j.
    const double frac =
        std::fmod(std::ldexp(cfg.phi, j), 1.0);  // 2^j phi mod 1, exact for dyadic phi
    s.apply(GateOp::phase(j, -2.0 * std::numbers::pi * frac));
    if (record)
      record->snapshots.push_back({"t" + std::to_string(stage), s.probabilities()});
    ++stage;
  }
  return s;
}

Trace run(const Config& cfg) {
  check_config(cfg);
  Trace t;
  t.algorithm = "qpe";
  t.n_qubits = cfg.n;
  StateVector s = prepare_kickback(cfg, &t);

  const std::vector<GateOp> ops = qft_gate_sequence(cfg.n);
  const std::size_t phased = cfg.n + cfg.n * (cfg.n - 1) / 2;  // gates before the swaps
  for (std::size_t g = 0; g < phased; ++g) {
    s.apply(ops[g]);
    if (g + 1 < phased) {
      t.snapshots.push_back(
          {"t" + std::to_string(cfg.n) + "|" + std::to_string(g + 1),
           s.probabilities()});
    } else {
      for (std::size_t r = phased; r < ops.size(); ++r) s.apply(ops[r]);
      t.snapshots.push_back(
          {"t" + std::to_string(cfg.n + 1), s.probabilities()});
    }
  }
  return t;
}

ProbVector final_distribution(const Config& cfg) {
  check_config(cfg);
  const Eigen::Index N = Eigen::Index{1} << cfg.n;
  Eigen::VectorXd p(N);
  for (Eigen::Index y = 0; y < N; ++y) {
    const double delta = cfg.phi - static_cast<double>(y) / static_cast<double>(N);
    const double dr = delta - std::round(delta);
    if (dr == 0.0) {
      p[y] = 1.0;
      continue;
    }
    const double num = std::sin(static_cast<double>(N) * std::numbers::pi * dr);
    const double den = std::sin(std::numbers::pi * dr);
    p[y] = num * num / (static_cast<double>(N * N) * den * den);
  }
  return make_prob_vector(std::move(p));
}

double interference_value(double alpha, char sign) {
  if (alpha < 0.0 || alpha >= 1.0)
    throw std::invalid_argument("interference_value: alpha must lie in [0, 1)");
  const double c = std::cos(2.0 * std::numbers::pi * alpha);
  if (sign == '+') return 1.0 + c;
  if (sign == '-') return 1.0 - c;
  throw std::invalid_argument("interference_value: sign must be '+' or '-'");
}

bool interference_inequality(double alpha, char sign) {
  return interference_value(alpha, sign) >= 1.0 - kPrefixTol;
}

double order_finding_phase(std::uint64_t a, std::uint64_t modulus, std::uint64_t s) {
  if (modulus < 2) throw std::invalid_argument("order_finding_phase: modulus < 2");
  if (std::gcd(a, modulus) != 1)
    throw std::invalid_argument("order_finding_phase: a and modulus must be coprime");
  std::uint64_t r = 1;
  std::uint64_t acc = a % modulus;
  while (acc != 1) {
    acc = (acc * (a % modulus)) % modulus;
    ++r;
    if (r > modulus)
      throw std::runtime_error("order_finding_phase: order search overran modulus");
  }
  if (s >= r) throw std::invalid_argument("order_finding_phase: s must satisfy s < r");
  return static_cast<double>(s) / static_cast<double>(r);
}

}  // namespace qarrow::qpe
