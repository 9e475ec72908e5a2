#include "qarrow/trace_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qarrow::io {

namespace {

nlohmann::json trace_to_json(const Trace& t) {
  nlohmann::json snaps = nlohmann::json::array();
  for (const auto& s : t.snapshots) {
    nlohmann::json probs = nlohmann::json::array();
    for (Eigen::Index i = 0; i < s.probs.size(); ++i) probs.push_back(s.probs[i]);
    snaps.push_back({{"label", s.label}, {"probs", std::move(probs)}});
  }
  return {{"algorithm", t.algorithm}, {"n", t.n_qubits}, {"snapshots", std::move(snaps)}};
}

Trace trace_from_json(const nlohmann::json& j) {
  Trace t;
  t.algorithm = j.at("algorithm").get<std::string>();
  t.n_qubits = j.at("n").get<int>();
  for (const auto& s : j.at("snapshots")) {
    const auto& probs = s.at("probs");
    Eigen::VectorXd v(probs.size());
    Eigen::Index i = 0;
    for (const auto& p : probs) v[i++] = p.get<double>();
    t.snapshots.push_back({s.at("label").get<std::string>(),
                           make_prob_vector(std::move(v))});
  }
  if (t.snapshots.empty()) throw std::invalid_argument("trace: no snapshots");
  return t;
}

void write_trace_csv(const Trace& t, std::ostream& os) {
  const Eigen::Index d = t.snapshots.front().probs.size();
  os << "label";
  for (Eigen::Index i = 0; i < d; ++i) os << ",p" << i;
  os << "\n";
  for (const auto& s : t.snapshots) {
    os << s.label;
    for (Eigen::Index i = 0; i < d; ++i) os << "," << format_double(s.probs[i]);
    os << "\n";
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

Trace read_trace_csv(std::istream& is) {
  Trace t;
  t.algorithm = "csv";
  std::string line;
  if (!std::getline(is, line) || line.rfind("label", 0) != 0)
    throw std::invalid_argument("trace csv: missing header");
  const std::size_t d = split_csv_line(line).size() - 1;
  if (d == 0) throw std::invalid_argument("trace csv: no probability columns");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != d + 1)
      throw std::invalid_argument("trace csv: ragged row");
    Eigen::VectorXd v(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) v[static_cast<Eigen::Index>(i)] = std::stod(fields[i + 1]);
    t.snapshots.push_back({fields[0], make_prob_vector(std::move(v))});
  }
  if (t.snapshots.empty()) throw std::invalid_argument("trace csv: no rows");
  return t;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trace(const Trace& t, std::ostream& os, Format fmt) {
  if (t.snapshots.empty()) throw std::invalid_argument("write_trace: empty trace");
  if (fmt == Format::Json) os << trace_to_json(t).dump(2) << "\n";
  else write_trace_csv(t, os);
}

void write_trace_file(const Trace& t, const std::string& path, Format fmt) {
  if (t.snapshots.empty()) throw std::invalid_argument("write_trace: empty trace");
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_trace(t, os, fmt);
  if (!os.good()) throw std::runtime_error("write failed: " + path);
}

Trace read_trace(std::istream& is, Format fmt) {
  if (fmt == Format::Csv) return read_trace_csv(is);
  nlohmann::json j;
  is >> j;
  return trace_from_json(j);
}

Trace read_trace_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  try {
    return read_trace(is, csv ? Format::Csv : Format::Json);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("trace parse error: ") + e.what());
  }
}

void write_report(const TraceReport& rep, std::ostream& os) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : rep.step_verdicts) verdicts.push_back(to_string(v.relation));
  nlohmann::json j = {{"verdicts", std::move(verdicts)},
                      {"first_violation", nullptr}};
  if (rep.first_violation) j["first_violation"] = *rep.first_violation;
  os << j.dump(2) << "\n";
}

void write_lorenz_csv(const Trace& t, std::ostream& os) {
  if (t.snapshots.empty()) throw std::invalid_argument("write_lorenz_csv: empty trace");
  os << "k";
  for (const auto& s : t.snapshots) os << "," << s.label;
  os << "\n";
  std::vector<Eigen::VectorXd> cums;
  cums.reserve(t.snapshots.size());
  for (const auto& s : t.snapshots) cums.push_back(prefix_sums(sort_desc(s.probs)));
  const Eigen::Index d = t.snapshots.front().probs.size();
  for (Eigen::Index k = 0; k < d; ++k) {
    os << k;
    for (const auto& c : cums) os << "," << format_double(c[k]);
    os << "\n";
  }
}

void write_lorenz_csv_file(const Trace& t, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_lorenz_csv(t, os);
  if (!os.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace qarrow::io
