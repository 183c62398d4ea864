#include "weylgrid/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace weylgrid::io {
namespace {

std::string header(char prefix, int first, int last, bool with_value) {
  std::string out;
  for (int i = first; i <= last; ++i) {
    if (i != first) out += ',';
    out += prefix;
    out += '_';
    out += std::to_string(i);
  }
  if (with_value) out += ",re,im";
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": " + what);
}

template <class T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end)
    malformed(line_no, "cannot parse '" + std::string(field) + "' as a number");
  return value;
}

// Rows after the expected header, each with exactly `width` numeric fields.
struct Table {
  std::vector<std::vector<std::string_view>> rows;
  std::vector<std::size_t> line_numbers;
  std::vector<std::string> storage;
};

Table read_table(std::istream& in, const std::string& expected_header) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  const std::size_t width = split(expected_header).size();
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (!have_header) {
      if (trim(line) != expected_header) malformed(line_no, "expected header '" + expected_header + "'");
      have_header = true;
      continue;
    }
    table.storage.push_back(line);
    table.line_numbers.push_back(line_no);
  }
  if (!have_header) throw Error(ErrorCode::MalformedInput, "missing header '" + expected_header + "'");
  for (std::size_t r = 0; r < table.storage.size(); ++r) {
    auto fields = split(table.storage[r]);
    if (fields.size() != width)
      malformed(table.line_numbers[r],
                "expected " + std::to_string(width) + " fields, got " + std::to_string(fields.size()));
    table.rows.push_back(std::move(fields));
  }
  return table;
}

template <class Point, class Make>
std::vector<std::pair<Point, Complex>> parse_keyed(const Table& table, int n, Make make) {
  std::vector<std::pair<Point, Complex>> entries;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& fields = table.rows[r];
    const std::size_t line_no = table.line_numbers[r];
    std::vector<int> coords;
    for (int i = 0; i <= n; ++i) coords.push_back(parse_number<int>(fields[static_cast<std::size_t>(i)], line_no));
    const double re = parse_number<double>(fields[static_cast<std::size_t>(n + 1)], line_no);
    const double im = parse_number<double>(fields[static_cast<std::size_t>(n + 2)], line_no);
    try {
      entries.emplace_back(make(std::move(coords)), Complex(re, im));
    } catch (const Error& e) {
      throw Error(ErrorCode::MismatchedGrid, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return entries;
}

void write_row(std::ostream& out, const std::vector<int>& coords, const Complex& value) {
  for (int v : coords) out << v << ',';
  out << format_double(value.real()) << ',' << format_double(value.imag()) << '\n';
}

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const bool integral = std::isfinite(value) && value == std::trunc(value) && std::abs(value) < 1e18;
  const auto result = integral ? std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed)
                               : std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

void write_samples(std::ostream& out, const AlgebraData& data, const SampleSet& samples) {
  out << header('s', 0, data.n, true) << '\n';
  for (std::size_t i = 0; i < samples.points.size(); ++i) write_row(out, samples.points[i].s, samples.values[i]);
}

SampleSet read_samples(std::istream& in, const AlgebraData& data, int M, GridKind kind) {
  const Table table = read_table(in, header('s', 0, data.n, true));
  auto entries = parse_keyed<GridPoint>(table, data.n,
                                        [&](std::vector<int> s) { return make_grid_point(data, M, std::move(s)); });
  return make_sample_set(data, M, kind, std::move(entries));
}

void write_coefficients(std::ostream& out, const AlgebraData& data, const CoefficientSet& coeffs) {
  out << header('t', 0, data.n, true) << '\n';
  for (std::size_t i = 0; i < coeffs.weights.size(); ++i) write_row(out, coeffs.weights[i].t, coeffs.coeffs[i]);
}

CoefficientSet read_coefficients(std::istream& in, const AlgebraData& data, int M, GridKind kind) {
  const Table table = read_table(in, header('t', 0, data.n, true));
  auto entries = parse_keyed<WeightPoint>(
      table, data.n, [&](std::vector<int> t) { return make_weight_point(data, M, std::move(t)); });
  return make_coefficient_set(data, M, kind, std::move(entries));
}

std::vector<RealPoint> read_points(std::istream& in, const AlgebraData& data) {
  const Table table = read_table(in, header('y', 1, data.n, false));
  std::vector<RealPoint> points;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    RealPoint p;
    for (const auto& field : table.rows[r]) p.y.push_back(parse_number<double>(field, table.line_numbers[r]));
    points.push_back(std::move(p));
  }
  return points;
}

void write_point_values(std::ostream& out, const AlgebraData& data, const std::vector<RealPoint>& points,
                        const std::vector<Complex>& values) {
  if (points.size() != values.size()) throw Error(ErrorCode::Internal, "point and value counts differ");
  out << header('y', 1, data.n, true) << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (double v : points[i].y) out << format_double(v) << ',';
    out << format_double(values[i].real()) << ',' << format_double(values[i].imag()) << '\n';
  }
}

}  // namespace weylgrid::io
