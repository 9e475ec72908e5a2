#include "qarrow/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qarrow {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "Equal";
    case Relation::FirstPrecedes: return "FirstPrecedes";
    case Relation::SecondPrecedes: return "SecondPrecedes";
    case Relation::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

ProbVector make_prob_vector(Eigen::VectorXd raw) {
  if (raw.size() == 0) throw std::invalid_argument("ProbVector: empty vector");
  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    double v = raw[i];
    if (std::isnan(v)) throw std::invalid_argument("ProbVector: NaN entry");
    if (v < -kEntryTol)
      throw std::invalid_argument("ProbVector: negative entry " + std::to_string(v));
    if (v < 0.0) raw[i] = 0.0;
  }
  double s = raw.sum();
  if (std::abs(s - 1.0) > kMassTol)
    throw std::invalid_argument("ProbVector: total mass " + std::to_string(s));
  return raw;
}

Eigen::VectorXd sort_desc(const Eigen::Ref<const Eigen::VectorXd>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::isnan(v[i])) throw std::invalid_argument("sort_desc: NaN entry");
  Eigen::VectorXd out = v;
  std::sort(out.data(), out.data() + out.size(), std::greater<double>());
  return out;
}

Eigen::VectorXd prefix_sums(const Eigen::Ref<const Eigen::VectorXd>& v) {
  Eigen::VectorXd out(v.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    acc += v[i];
    out[i] = acc;
  }
  return out;
}

MajorizationVerdict compare(const Eigen::Ref<const Eigen::VectorXd>& x,
                            const Eigen::Ref<const Eigen::VectorXd>& y,
                            double tol) {
  if (x.size() != y.size())
    throw std::invalid_argument("compare: dimension mismatch");
  if (std::abs(x.sum() - y.sum()) > kMassTol)
    throw std::invalid_argument("compare: total-mass mismatch");

  Eigen::VectorXd cx = prefix_sums(sort_desc(x));
  Eigen::VectorXd cy = prefix_sums(sort_desc(y));

  MajorizationVerdict v;
  v.prefix_margins = cy - cx;
  bool first = true, second = true;
  for (Eigen::Index k = 0; k < cx.size(); ++k) {
    if (cx[k] > cy[k] + tol) first = false;
    if (cy[k] > cx[k] + tol) second = false;
  }
  if (first && second) v.relation = Relation::Equal;
  else if (first) v.relation = Relation::FirstPrecedes;
  else if (second) v.relation = Relation::SecondPrecedes;
  else v.relation = Relation::Incomparable;
  return v;
}

ProbVector least_element(Eigen::Index d) {
  if (d < 1) throw std::invalid_argument("least_element: d must be >= 1");
  return Eigen::VectorXd::Constant(d, 1.0 / static_cast<double>(d));
}

ProbVector greatest_element(Eigen::Index d) {
  if (d < 1) throw std::invalid_argument("greatest_element: d must be >= 1");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
  v[0] = 1.0;
  return v;
}

std::vector<std::pair<Eigen::Index, double>> lorenz_points(
    const Eigen::Ref<const Eigen::VectorXd>& v) {
  Eigen::VectorXd cum = prefix_sums(sort_desc(v));
  std::vector<std::pair<Eigen::Index, double>> pts;
  pts.reserve(cum.size());
  for (Eigen::Index k = 0; k < cum.size(); ++k) pts.emplace_back(k, cum[k]);
  return pts;
}

double shannon_entropy(const Eigen::Ref<const Eigen::VectorXd>& v) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] > 0.0) h -= v[i] * std::log(v[i]);
  return h;
}

TraceReport verify_trace(const Trace& t, double tol) {
  if (t.snapshots.size() < 2)
    throw std::invalid_argument("verify_trace: need at least 2 snapshots");
  TraceReport rep;
  const std::size_t steps = t.snapshots.size() - 1;
  rep.step_verdicts.reserve(steps);
  for (std::size_t m = 0; m < steps; ++m) {
    const auto& a = t.snapshots[m].probs;
    const auto& b = t.snapshots[m + 1].probs;
    if (a.size() != b.size())
      throw std::invalid_argument("verify_trace: snapshot dimension mismatch");
    MajorizationVerdict v = compare(a, b, tol);
    bool ok = v.relation == Relation::FirstPrecedes || v.relation == Relation::Equal;
    if (!ok && !rep.first_violation) rep.first_violation = m;
    rep.step_verdicts.push_back(std::move(v));
  }
  rep.monotone_prefix_len = rep.first_violation.value_or(steps);
  return rep;
}

}  // namespace qarrow
