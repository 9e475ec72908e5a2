#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "qarrow/majorization.hpp"

namespace qarrow {

struct GateOp {
  enum class Kind { Hadamard, Phase, ControlledPhase, Swap };
  Kind kind;
  int a = 0;            // target qubit (Hadamard, Phase, ControlledPhase) or first swap qubit
  int b = 0;            // control qubit (ControlledPhase) or second swap qubit
  double angle = 0.0;   // radians, Phase and ControlledPhase only

  static GateOp hadamard(int q) { return {Kind::Hadamard, q, 0, 0.0}; }
  static GateOp phase(int q, double theta) { return {Kind::Phase, q, 0, theta}; }
  static GateOp controlled_phase(int ctrl, int tgt, double theta) {
    return {Kind::ControlledPhase, tgt, ctrl, theta};
  }
  static GateOp swap(int q1, int q2) { return {Kind::Swap, q1, q2, 0.0}; }
};

// Dense statevector over n qubits; basis index x = sum_j x_j 2^j, so qubit j
// carries bit weight 2^j.
class StateVector {
 public:
  explicit StateVector(int n);                       // |0...0>
  static StateVector basis(int n, std::uint64_t x);
  static StateVector uniform(int n);

  int qubits() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  Eigen::VectorXcd& amps() { return amps_; }
  const Eigen::VectorXcd& amps() const { return amps_; }

  void apply(const GateOp& g);
  ProbVector probabilities() const;
  double norm() const { return amps_.norm(); }

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

// Fourier transform |x> -> 2^{-n/2} sum_y exp(+2 pi i x y / 2^n) |y>, decomposed
// into n Hadamards, n(n-1)/2 controlled phases and floor(n/2) terminal swaps.
std::vector<GateOp> qft_gate_sequence(int n);

}  // namespace qarrow
