#include "spectral/harness/grid_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "spectral/harness/errors.hpp"

namespace spectral::harness {
namespace {

constexpr const char* kMetaLine = "# nx ny dx dy x0 y0 t";
constexpr const char* kColumns = "j,k,x,y,re,im";

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool parse_double(const std::string& s, double& out) {
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && p == end;
}

bool parse_size(const std::string& s, std::size_t& out) {
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && p == end;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void close_out(std::ofstream& out, const std::filesystem::path& path) {
  out.close();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, p);
}

std::string frame_file_name(const std::string& prefix, double time) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, time, std::chars_format::fixed);
  return prefix + "_t" + std::string(buf, p) + ".csv";
}

void write_grid_csv(const Grid2D& grid, double time, const std::filesystem::path& path) {
  const GridMeta& m = grid.meta();
  auto out = open_out(path);
  out << kMetaLine << '\n'
      << "# " << m.nx << ' ' << m.ny << ' ' << format_double(m.dx) << ' ' << format_double(m.dy)
      << ' ' << format_double(m.x0) << ' ' << format_double(m.y0) << ' ' << format_double(time)
      << '\n'
      << kColumns << '\n';
  for (std::size_t k = 0; k < m.ny; ++k) {
    for (std::size_t j = 0; j < m.nx; ++j) {
      const Complex z = grid(j, k);
      out << j << ',' << k << ',' << format_double(m.x(j)) << ',' << format_double(m.y(k)) << ','
          << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
    }
  }
  close_out(out, path);
}

Snapshot read_grid_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  const std::string where = "'" + path.string() + "'";

  std::string line;
  if (!std::getline(in, line) || trim(line) != kMetaLine)
    throw MalformedHeader(where + ": expected first line '" + kMetaLine + "'");
  if (!std::getline(in, line) || trim(line).rfind("# ", 0) != 0)
    throw MalformedHeader(where + ": missing grid description line");

  std::istringstream fields(trim(line).substr(2));
  std::vector<std::string> tok;
  for (std::string t; fields >> t;) tok.push_back(t);
  GridMeta meta;
  double time = 0.0;
  if (tok.size() != 7 || !parse_size(tok[0], meta.nx) || !parse_size(tok[1], meta.ny) ||
      !parse_double(tok[2], meta.dx) || !parse_double(tok[3], meta.dy) ||
      !parse_double(tok[4], meta.x0) || !parse_double(tok[5], meta.y0) ||
      !parse_double(tok[6], time))
    throw MalformedHeader(where + ": bad grid description '" + line + "'");
  try {
    meta.validate();
  } catch (const InvalidArgument& e) {
    throw MalformedHeader(where + ": " + e.what());
  }
  if (!std::getline(in, line) || trim(line) != kColumns)
    throw MalformedHeader(where + ": expected column line '" + kColumns + "'");

  std::vector<Complex> values;
  values.reserve(meta.size());
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    if (row >= meta.size())
      throw DimensionMismatch(where + ": more than " + std::to_string(meta.size()) + " rows");
    auto cols = split(line, ',');
    std::size_t j = 0, k = 0;
    double x = 0, y = 0, re = 0, im = 0;
    if (cols.size() != 6 || !parse_size(cols[0], j) || !parse_size(cols[1], k) ||
        !parse_double(cols[2], x) || !parse_double(cols[3], y) || !parse_double(cols[4], re) ||
        !parse_double(cols[5], im))
      throw IoError(where + ": unparsable row " + std::to_string(row + 1));
    if (j != row % meta.nx || k != row / meta.nx)
      throw DimensionMismatch(where + ": row " + std::to_string(row + 1) +
                              " has unexpected indices");
    values.emplace_back(re, im);
    ++row;
  }
  if (row != meta.size())
    throw DimensionMismatch(where + ": header announces " + std::to_string(meta.nx) + "x" +
                            std::to_string(meta.ny) + " but " + std::to_string(row) +
                            " rows follow");
  return Snapshot{time, Grid2D(meta, std::move(values))};
}

DiagnosticRow diagnose(const Snapshot& frame) {
  DiagnosticRow row;
  row.time = frame.time;
  row.mean = grid_mean(frame.grid);
  for (const Complex& z : frame.grid.values()) row.max_abs = std::max(row.max_abs, std::abs(z));
  return row;
}

void write_diagnostics_csv(std::span<const DiagnosticRow> rows, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "t,mean_re,mean_im,max_abs\n";
  for (const auto& r : rows) {
    out << format_double(r.time) << ',' << format_double(r.mean.real()) << ','
        << format_double(r.mean.imag()) << ',' << format_double(r.max_abs) << '\n';
  }
  close_out(out, path);
}

std::vector<DiagnosticRow> read_diagnostics_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string line;
  if (!std::getline(in, line) || trim(line) != "t,mean_re,mean_im,max_abs")
    throw MalformedHeader("'" + path.string() + "': not a diagnostics file");
  std::vector<DiagnosticRow> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cols = split(line, ',');
    double t, re, im, mx;
    if (cols.size() != 4 || !parse_double(cols[0], t) || !parse_double(cols[1], re) ||
        !parse_double(cols[2], im) || !parse_double(cols[3], mx))
      throw IoError("'" + path.string() + "': unparsable row " + std::to_string(rows.size() + 1));
    rows.push_back({t, Complex(re, im), mx});
  }
  return rows;
}

}  // namespace spectral::harness
