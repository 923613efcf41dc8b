#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "oplax/lax.hpp"

namespace oplax {

enum class OutputFormat { Csv, Json };

struct SimConfig {
  double omega = 1.0;
  double q0 = 1.0;
  double p0 = 0.0;
  double dt = 2.0 * 3.14159265358979323846 / 4000.0;
  std::uint64_t steps = 8000;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 0;

  /// Throws ErrorCode::InvalidArgument on an unusable configuration.
  void validate() const;
};

/// Column order of the simulation output.
inline const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> cols{"t", "q", "p", "H", "mu112", "mu212", "inv_rot", "inv_energy", "trL2"};
  return cols;
}

/// Runs the coupled oscillator flow from the closed-form initial operadic
/// variable. Blow-up is reported through Trajectory::error, not thrown.
Trajectory run_simulation(const SimConfig& cfg);

/// One output row in record_columns() order.
std::vector<double> record_row(const TrajectoryRecord& r);

/// Fixed 17-significant-digit form; round-trips every double exactly.
std::string format_number(double v);

void write_csv(std::ostream& os, const Trajectory& traj);
void write_json(std::ostream& os, const Trajectory& traj);
void write_trajectory(std::ostream& os, const Trajectory& traj, OutputFormat format);

}  // namespace oplax
