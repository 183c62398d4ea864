#pragma once

#include <compare>
#include <string>
#include <vector>

#include "weylgrid/algebra.hpp"

namespace weylgrid {

/// Point of F_M in barycentric integers [s_0, ..., s_n]: s_0 + sum m_i s_i = M.
/// The torus element is x = sum_{i>=1} (s_i / M) omega^v_i mod Q^v.
struct GridPoint {
  int M = 0;
  std::vector<int> s;

  /// The omega^v numerators (s_1, ..., s_n).
  std::span<const int> coweight() const { return std::span<const int>(s).subspan(1); }
  bool is_interior() const;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Dominant weight of Lambda_M in barycentric integers [t_0, ..., t_n]:
/// t_0 + sum m^v_i t_i = M, lambda = sum_{i>=1} t_i omega_i mod M Q.
struct WeightPoint {
  int M = 0;
  std::vector<int> t;

  std::span<const int> weight() const { return std::span<const int>(t).subspan(1); }
  bool is_interior() const;

  friend auto operator<=>(const WeightPoint&, const WeightPoint&) = default;
  friend bool operator==(const WeightPoint&, const WeightPoint&) = default;
};

/// Throws Error{InvalidArgument} unless the point satisfies the F_M constraint.
void validate(const AlgebraData& data, const GridPoint& p);
/// Throws Error{InvalidArgument} unless the point satisfies the Lambda_M constraint.
void validate(const AlgebraData& data, const WeightPoint& w);

GridPoint make_grid_point(const AlgebraData& data, int M, std::vector<int> s);
WeightPoint make_weight_point(const AlgebraData& data, int M, std::vector<int> t);

/// "[s_0,s_1,...]"
std::string to_string(const GridPoint& p);
std::string to_string(const WeightPoint& w);

}  // namespace weylgrid
