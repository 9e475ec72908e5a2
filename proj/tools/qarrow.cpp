#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "qarrow/adiabatic.hpp"
#include "qarrow/grover.hpp"
#include "qarrow/majorization.hpp"
#include "qarrow/phase_estimation.hpp"
#include "qarrow/trace_io.hpp"

namespace {

struct CommonOpts {
  std::string out;
  std::string format = "json";
  double tol = 1e-12;
  bool assert_majorization = false;
  std::string assert_through;
  std::string lorenz;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--out", o.out, "write the trace to this path");
  cmd->add_option("--format", o.format, "trace format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--tol", o.tol, "majorization comparison tolerance");
  cmd->add_flag("--assert-majorization", o.assert_majorization,
                "exit 2 if the asserted window has a violation");
  cmd->add_option("--assert-through", o.assert_through,
                  "assert only through the snapshot with this label");
  cmd->add_option("--lorenz", o.lorenz, "write per-slice Lorenz columns to this CSV");
}

// Number of leading snapshots covered by the assertion window.
std::size_t window_size(const qarrow::Trace& t, const CommonOpts& o,
                        std::size_t default_size) {
  if (o.assert_through.empty()) return default_size;
  for (std::size_t i = 0; i < t.snapshots.size(); ++i)
    if (t.snapshots[i].label == o.assert_through) return i + 1;
  throw std::invalid_argument("--assert-through: no snapshot labeled '" +
                              o.assert_through + "'");
}

int finish(const qarrow::Trace& t, const CommonOpts& o, std::size_t default_window) {
  if (!o.out.empty())
    qarrow::io::write_trace_file(
        t, o.out, o.format == "csv" ? qarrow::io::Format::Csv : qarrow::io::Format::Json);
  if (!o.lorenz.empty()) qarrow::io::write_lorenz_csv_file(t, o.lorenz);

  if (!o.assert_majorization) return 0;
  const std::size_t w = window_size(t, o, default_window);
  if (w < 2) return 0;
  qarrow::Trace windowed{t.algorithm, t.n_qubits,
                         {t.snapshots.begin(), t.snapshots.begin() + w}};
  const qarrow::TraceReport rep = qarrow::verify_trace(windowed, o.tol);
  qarrow::io::write_report(rep, std::cout);
  if (rep.first_violation) {
    std::cerr << "majorization violation at step " << *rep.first_violation << " ("
              << t.snapshots[*rep.first_violation].label << " -> "
              << t.snapshots[*rep.first_violation + 1].label << ")\n";
    return 2;
  }
  return 0;
}

int run_grover(int n, std::int64_t target, int iters, const CommonOpts& o) {
  const std::uint64_t N = std::uint64_t{1} << n;
  const int mstar = qarrow::grover::optimal_iterations(N);
  qarrow::grover::Config cfg;
  cfg.n = n;
  cfg.target = static_cast<std::uint64_t>(target);
  cfg.max_iters = iters > 0 ? iters : std::max(1, 2 * mstar);
  const qarrow::Trace t = qarrow::grover::run(cfg);
  const std::size_t window =
      std::min<std::size_t>(t.snapshots.size(), static_cast<std::size_t>(mstar) + 1);
  return finish(t, o, window);
}

int run_adiabatic(const std::string& model, int n, double T, double dt,
                  const CommonOpts& o) {
  qarrow::Trace t;
  if (model == "projector" || model == "farhi") {
    const auto H = model == "projector" ? qarrow::adiabatic::projector_hamiltonian(n)
                                        : qarrow::adiabatic::farhi_hamiltonian(n);
    double total = T > 0 ? T : 4.0 * std::pow(2.0, n);
    qarrow::adiabatic::EvolutionConfig cfg =
        qarrow::adiabatic::default_config(H, total);
    if (dt > 0) cfg.dt = dt;
    t = model == "projector" ? qarrow::adiabatic::run_projector_sweep(n, cfg)
                             : qarrow::adiabatic::run_farhi_sweep(n, cfg);
  } else {
    double total = T > 0 ? T : (std::numbers::pi / 2.0) * std::pow(2.0, n / 2.0);
    t = qarrow::adiabatic::run_static_sweep(n, total);
  }
  const std::size_t window = qarrow::adiabatic::peak_snapshot(t) + 1;
  return finish(t, o, window);
}

int run_qpe(int n, double phi, const CommonOpts& o) {
  const qarrow::Trace t = qarrow::qpe::run({n, phi});
  return finish(t, o, t.snapshots.size());
}

int run_verify(const std::string& path, double tol) {
  const qarrow::Trace t = qarrow::io::read_trace_file(path);
  if (t.snapshots.size() < 2) {
    std::cerr << "trace has fewer than 2 snapshots\n";
    return 1;
  }
  const qarrow::TraceReport rep = qarrow::verify_trace(t, tol);
  for (std::size_t m = 0; m < rep.step_verdicts.size(); ++m)
    std::cout << t.snapshots[m].label << " -> " << t.snapshots[m + 1].label << ": "
              << qarrow::to_string(rep.step_verdicts[m].relation) << "\n";
  if (rep.first_violation) {
    std::cout << "first violation at step " << *rep.first_violation << "\n";
    return 2;
  }
  std::cout << "no violation\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stepwise majorization tracer for quantum search, adiabatic "
               "evolution and phase estimation"};
  app.require_subcommand(1);

  CommonOpts go, ao, qo;
  int g_n = 4;
  std::int64_t g_target = 0;
  int g_iters = 0;
  auto* grover = app.add_subcommand("grover", "iterate the search kernel");
  grover->add_option("--n", g_n, "qubits")->check(CLI::Range(1, 20));
  grover->add_option("--target", g_target, "searched basis state")
      ->check(CLI::NonNegativeNumber);
  grover->add_option("--iters", g_iters,
                     "iterations to record (default: twice the optimum)");
  add_common(grover, go);

  std::string a_model = "projector";
  int a_n = 6;
  double a_T = 0.0, a_dt = 0.0;
  auto* adiab = app.add_subcommand("adiabatic", "integrate an interpolating sweep");
  adiab->add_option("--model", a_model, "projector, farhi or static")
      ->check(CLI::IsMember({"projector", "farhi", "static"}));
  adiab->add_option("--n", a_n, "qubits")->check(CLI::Range(1, 20));
  adiab->add_option("--T", a_T, "total evolution time (default: model dependent)");
  adiab->add_option("--dt", a_dt, "integration step override");
  add_common(adiab, ao);

  int q_n = 3;
  double q_phi = 0.2;
  auto* qpe = app.add_subcommand("qpe", "phase-estimation slices");
  qpe->add_option("--n", q_n, "estimation qubits")->check(CLI::Range(1, 20));
  qpe->add_option("--phi", q_phi, "eigenphase in [0,1)");
  add_common(qpe, qo);

  std::string v_path;
  double v_tol = 1e-12;
  auto* verify = app.add_subcommand("verify", "verdict a stored trace");
  verify->add_option("path", v_path, "trace file (json, or csv by extension)")
      ->required();
  verify->add_option("--tol", v_tol, "comparison tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help exits 0, any parse failure is usage error 1
  }

  try {
    if (grover->parsed()) {
      if (g_target >= (std::int64_t{1} << g_n)) {
        std::cerr << "target out of range for n=" << g_n << "\n";
        return 1;
      }
      return run_grover(g_n, g_target, g_iters, go);
    }
    if (adiab->parsed()) return run_adiabatic(a_model, a_n, a_T, a_dt, ao);
    if (qpe->parsed()) return run_qpe(q_n, q_phi, qo);
    if (verify->parsed()) return run_verify(v_path, v_tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
