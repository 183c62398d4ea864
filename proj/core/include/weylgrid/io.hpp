#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weylgrid/transform.hpp"

namespace weylgrid::io {

/// Shortest decimal that round-trips the double; integers print without exponent.
std::string format_double(double value);

/// CSV with header `s_0,...,s_n,re,im`, one row per grid point.
void write_samples(std::ostream& out, const AlgebraData& data, const SampleSet& samples);
/// Reads and validates against the exact grid enumeration; rows may come in any order.
SampleSet read_samples(std::istream& in, const AlgebraData& data, int M, GridKind kind);

/// CSV with header `t_0,...,t_n,re,im`.
void write_coefficients(std::ostream& out, const AlgebraData& data, const CoefficientSet& coeffs);
CoefficientSet read_coefficients(std::istream& in, const AlgebraData& data, int M, GridKind kind);

/// CSV with header `y_1,...,y_n`.
std::vector<RealPoint> read_points(std::istream& in, const AlgebraData& data);
void write_point_values(std::ostream& out, const AlgebraData& data, const std::vector<RealPoint>& points,
                        const std::vector<Complex>& values);

}  // namespace weylgrid::io
