#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qarrow {

// Probability vector: nonnegative entries summing to 1 within kMassTol.
using ProbVector = Eigen::VectorXd;

inline constexpr double kPrefixTol = 1e-12;  // prefix-sum comparison slack
inline constexpr double kEntryTol = 1e-12;   // largest clampable negative entry
inline constexpr double kMassTol = 1e-9;     // allowed deviation of the total mass

enum class Relation { Equal, FirstPrecedes, SecondPrecedes, Incomparable };

const char* to_string(Relation r);

struct MajorizationVerdict {
  Relation relation = Relation::Incomparable;
  // prefix_margins[k] = (k-th prefix sum of sorted y) - (same of sorted x);
  // all >= -tol means x precedes y.
  Eigen::VectorXd prefix_margins;
};

// Validates entries and total mass; entries in [-kEntryTol, 0) are clamped to 0.
// Throws std::invalid_argument on NaN, larger negatives, or mass off by > kMassTol.
ProbVector make_prob_vector(Eigen::VectorXd raw);

Eigen::VectorXd sort_desc(const Eigen::Ref<const Eigen::VectorXd>& v);
Eigen::VectorXd prefix_sums(const Eigen::Ref<const Eigen::VectorXd>& v);

MajorizationVerdict compare(const Eigen::Ref<const Eigen::VectorXd>& x,
                            const Eigen::Ref<const Eigen::VectorXd>& y,
                            double tol = kPrefixTol);

ProbVector least_element(Eigen::Index d);
ProbVector greatest_element(Eigen::Index d);

// Cumulative sorted-descending sums: points (k, sum of the k+1 largest entries).
std::vector<std::pair<Eigen::Index, double>> lorenz_points(
    const Eigen::Ref<const Eigen::VectorXd>& v);

// Shannon entropy in nats; 0 log 0 = 0.
double shannon_entropy(const Eigen::Ref<const Eigen::VectorXd>& v);

struct Snapshot {
  std::string label;
  ProbVector probs;
};

struct Trace {
  std::string algorithm;
  int n_qubits = 0;
  std::vector<Snapshot> snapshots;
};

struct TraceReport {
  std::vector<MajorizationVerdict> step_verdicts;
  std::optional<std::size_t> first_violation;
  std::size_t monotone_prefix_len = 0;
};

// Step m compares snapshot m against snapshot m+1; a violation is any step whose
// verdict is neither FirstPrecedes nor Equal.
TraceReport verify_trace(const Trace& t, double tol = kPrefixTol);

}  // namespace qarrow
