#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "spectral/pde_solvers.hpp"

namespace spectral::harness {

// Grid files are plain CSV:
//
//   # nx ny dx dy x0 y0 t
//   # 8 8 0.5 0.5 -2 -2 0
//   j,k,x,y,re,im
//   0,0,-2,-2,<re>,<im>
//   1,0,-1.5,-2,<re>,<im>
//   ...
//
// Rows run with j (x) fastest. Every real number is printed with 17
// significant digits at most (shortest round-trip form), so reading a file back
// reproduces the values bit for bit.

void write_grid_csv(const Grid2D& grid, double time, const std::filesystem::path& path);

/// Throws IoError if the file cannot be read, MalformedHeader if the three
/// header lines are missing or unparsable and DimensionMismatch if the rows do
/// not match nx * ny in the expected order.
Snapshot read_grid_csv(const std::filesystem::path& path);

/// One diagnostics row per frame: `t,mean_re,mean_im,max_abs`.
struct DiagnosticRow {
  double time = 0.0;
  Complex mean;
  double max_abs = 0.0;
};

DiagnosticRow diagnose(const Snapshot& frame);

void write_diagnostics_csv(std::span<const DiagnosticRow> rows, const std::filesystem::path& path);
std::vector<DiagnosticRow> read_diagnostics_csv(const std::filesystem::path& path);

/// Shortest round-trippable text for a double (17 significant digits max).
std::string format_double(double value);

/// Frame file name such as `wave_pulse_t0.5.csv`.
std::string frame_file_name(const std::string& prefix, double time);

}  // namespace spectral::harness
