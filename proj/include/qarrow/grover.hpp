#pragma once

#include <cstdint>
#include <optional>

#include "qarrow/majorization.hpp"
#include "qarrow/state_vector.hpp"

namespace qarrow::grover {

struct Config {
  int n = 2;
  std::uint64_t target = 0;
  int max_iters = 1;
  // Empty = symmetric start (uniform superposition).
  std::optional<Eigen::VectorXcd> initial;
};

// Negates the amplitude of |y0>.
void oracle_reflect(StateVector& s, std::uint64_t y0);

// Inversion about the mean: c_x <- 2 mean(c) - c_x.
void diffusion(StateVector& s);

// Snapshot 0 is the initial distribution; snapshot m the distribution after m
// applications of diffusion(oracle(.)). Labels m0, m1, ...
Trace run(const Config& cfg);

// Two-level rotation picture in the {target, orthogonal-rest} basis.
struct ReducedModel {
  std::uint64_t N = 2;
  double theta = 0.0;  // cos(theta) = 1 - 2/N
  static ReducedModel for_size(std::uint64_t N);
};

// Target amplitude after m kernel applications: sin((2m+1) theta/2).
double reduced_success_amplitude(const ReducedModel& model, int m);

// First local maximum of the success probability, scanning m = 0..ceil(pi sqrt N);
// plateau ties resolve toward the closed-form estimate (pi/2 - theta/2)/theta,
// upward on exact ties.
int optimal_iterations(std::uint64_t N);

// The N-entry symmetric list [p, (1-p)/(N-1), ...].
Eigen::VectorXd symmetric_list(double p, std::uint64_t N);

// True iff p <= p_next + tol and the two symmetric lists compare as
// FirstPrecedes or Equal.
bool check_symmetric_step(double p, double p_next, std::uint64_t N,
                          double tol = kPrefixTol);

// Deterministic asymmetric start: smallest non-target amplitude doubled, then
// renormalized.
StateVector counterexample_start(int n, std::uint64_t target);

}  // namespace qarrow::grover
