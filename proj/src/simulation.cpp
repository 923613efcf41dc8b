#include "oplax/simulation.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "oplax/error.hpp"
#include "oplax/oscillator.hpp"

namespace oplax {

void SimConfig::validate() const {
  if (!std::isfinite(omega) || !(omega > 0.0)) fail(ErrorCode::InvalidArgument, "--omega must be > 0");
  if (!std::isfinite(q0) || !std::isfinite(p0)) fail(ErrorCode::InvalidArgument, "--q0/--p0 must be finite");
  if (!std::isfinite(dt) || !(dt > 0.0)) fail(ErrorCode::InvalidArgument, "--dt must be > 0");
  if (steps < 1) fail(ErrorCode::InvalidArgument, "--steps must be >= 1");
  if (!std::isfinite(dt * static_cast<double>(steps))) fail(ErrorCode::InvalidArgument, "dt * steps overflows");
}

Trajectory run_simulation(const SimConfig& cfg) {
  cfg.validate();
  const oscillator::OscParams params{cfg.omega, cfg.q0, cfg.p0};
  const FlowState s0 = oscillator::initial_state(params);
  return integrate(s0, oscillator::lax_M(cfg.omega), cfg.omega, cfg.dt, cfg.steps,
                   oscillator::standard_probes(cfg.omega));
}

std::vector<double> record_row(const TrajectoryRecord& r) {
  std::vector<double> row{r.state.t, r.state.q, r.state.p};
  row.insert(row.end(), r.probes.begin(), r.probes.end());
  return row;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const Trajectory& traj) {
  const auto& cols = record_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
  os << '\n';
  for (const auto& r : traj.records) {
    const auto row = record_row(r);
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << format_number(row[k]);
    os << '\n';
  }
  // Trailing report line; '#' lets CSV readers treat it as a comment.
  os << "# report status=" << (traj.ok() ? "ok" : "blowup");
  for (const auto& [name, d] : traj.report())
    os << ' ' << name << ":initial=" << format_number(d.initial) << ",current=" << format_number(d.current)
       << ",drift=" << format_number(d.drift);
  os << '\n';
}

void write_json(std::ostream& os, const Trajectory& traj) {
  using nlohmann::json;
  const auto& cols = record_columns();
  json records = json::array();
  for (const auto& r : traj.records) {
    const auto row = record_row(r);
    json obj = json::object();
    for (std::size_t k = 0; k < cols.size(); ++k) obj[cols[k]] = row[k];
    records.push_back(std::move(obj));
  }
  json report = json::object();
  for (const auto& [name, d] : traj.report())
    report[name] = {{"initial", d.initial}, {"current", d.current}, {"drift", d.drift}};
  report["status"] = traj.ok() ? "ok" : "blowup";
  if (traj.error) report["error"] = *traj.error;
  os << json{{"records", std::move(records)}, {"report", std::move(report)}}.dump() << '\n';
}

void write_trajectory(std::ostream& os, const Trajectory& traj, OutputFormat format) {
  if (format == OutputFormat::Json)
    write_json(os, traj);
  else
    write_csv(os, traj);
}

}  // namespace oplax
