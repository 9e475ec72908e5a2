#pragma once

#include <cstdint>

#include "qarrow/majorization.hpp"
#include "qarrow/state_vector.hpp"

namespace qarrow::qpe {

struct Config {
  int n = 1;         // estimation-register qubits
  double phi = 0.0;  // eigenphase in [0, 1)
};

// Uniform superposition with kickback phases applied: c_x = 2^{-n/2} e^{-2 pi i x phi}.
// If record is non-null, appends snapshots t0 (post-Hadamard) and t1..tn (after
// each kickback stage); all of them are the uniform distribution.
StateVector prepare_kickback(const Config& cfg, Trace* record = nullptr);

// Kickback stages followed by the Fourier-transform gates with a snapshot after
// every Hadamard and controlled phase: labels t{n}|1 .. t{n}|G-1, then t{n+1}
// after the last gate (terminal swaps included there; they only permute entries).
Trace run(const Config& cfg);

// Closed form p_y = 2^{-2n} sin^2(2^n pi d) / sin^2(pi d), d = phi - y/2^n
// reduced to [-1/2, 1/2]; p_y = 1 when d is an integer.
ProbVector final_distribution(const Config& cfg);

// |(1/sqrt 2)(1 +/- e^{2 pi i alpha})|^2 = 1 +/- cos(2 pi alpha).
double interference_value(double alpha, char sign);

// True iff the value is >= 1 - kPrefixTol; guaranteed for alpha in
// [0, 1/4] U [3/4, 1) with '+' and alpha in [1/4, 3/4] with '-'.
bool interference_inequality(double alpha, char sign);

// Multiplicative order r of a mod modulus by brute force; returns s/r.
double order_finding_phase(std::uint64_t a, std::uint64_t modulus, std::uint64_t s);

}  // namespace qarrow::qpe
