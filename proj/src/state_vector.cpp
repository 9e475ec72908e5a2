#include "qarrow/state_vector.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qarrow {

namespace {
void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw std::out_of_range("qubit index out of range");
}
}  // namespace

StateVector::StateVector(int n) : n_(n) {
  if (n < 1 || n > 30) throw std::invalid_argument("StateVector: bad qubit count");
  amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int n, std::uint64_t x) {
  StateVector s(n);
  if (x >= (std::uint64_t{1} << n))
    throw std::out_of_range("basis: state index out of range");
  s.amps_[0] = 0.0;
  s.amps_[static_cast<Eigen::Index>(x)] = 1.0;
  return s;
}

StateVector StateVector::uniform(int n) {
  StateVector s(n);
  const double a = std::pow(2.0, -0.5 * n);
  s.amps_.setConstant(a);
  return s;
}

void StateVector::apply(const GateOp& g) {
  const std::uint64_t dim = static_cast<std::uint64_t>(amps_.size());
  switch (g.kind) {
    case GateOp::Kind::Hadamard: {
      check_qubit(g.a, n_);
      const std::uint64_t bit = std::uint64_t{1} << g.a;
      const double inv = std::numbers::sqrt2 / 2.0;
      for (std::uint64_t x = 0; x < dim; ++x) {
        if (x & bit) continue;
        const auto lo = amps_[x], hi = amps_[x | bit];
        amps_[x] = (lo + hi) * inv;
        amps_[x | bit] = (lo - hi) * inv;
      }
      break;
    }
    case GateOp::Kind::Phase: {
      check_qubit(g.a, n_);
      const std::uint64_t bit = std::uint64_t{1} << g.a;
      const std::complex<double> ph = std::polar(1.0, g.angle);
      for (std::uint64_t x = 0; x < dim; ++x)
        if (x & bit) amps_[x] *= ph;
      break;
    }
    case GateOp::Kind::ControlledPhase: {
      check_qubit(g.a, n_);
      check_qubit(g.b, n_);
      if (g.a == g.b) throw std::invalid_argument("controlled phase: ctrl == tgt");
      const std::uint64_t mask = (std::uint64_t{1} << g.a) | (std::uint64_t{1} << g.b);
      const std::complex<double> ph = std::polar(1.0, g.angle);
      for (std::uint64_t x = 0; x < dim; ++x)
        if ((x & mask) == mask) amps_[x] *= ph;
      break;
    }
    case GateOp::Kind::Swap: {
      check_qubit(g.a, n_);
      check_qubit(g.b, n_);
      if (g.a == g.b) return;
      const std::uint64_t b1 = std::uint64_t{1} << g.a;
      const std::uint64_t b2 = std::uint64_t{1} << g.b;
      for (std::uint64_t x = 0; x < dim; ++x)
        if ((x & b1) && !(x & b2)) std::swap(amps_[x], amps_[x ^ b1 ^ b2]);
      break;
    }
  }
}

ProbVector StateVector::probabilities() const {
  return make_prob_vector(amps_.cwiseAbs2());
}

std::vector<GateOp> qft_gate_sequence(int n) {
  if (n < 1) throw std::invalid_argument("qft_gate_sequence: n must be >= 1");
  std::vector<GateOp> ops;
  ops.reserve(n + n * (n - 1) / 2 + n / 2);
  for (int i = n - 1; i >= 0; --i) {
    ops.push_back(GateOp::hadamard(i));
    for (int j = i - 1; j >= 0; --j)
      ops.push_back(GateOp::controlled_phase(
          j, i, std::numbers::pi / static_cast<double>(std::uint64_t{1} << (i - j))));
  }
  for (int i = 0; i < n / 2; ++i) ops.push_back(GateOp::swap(i, n - 1 - i));
  return ops;
}

}  // namespace qarrow
