#pragma once

#include <span>
#include <string>
#include <vector>

#include "weylgrid/common.hpp"

namespace weylgrid {

enum class Series { A, B, C, D, E, F, G };

/// Series letter and rank of a compact simple Lie group.
///
/// Allowed ranks: A_n (n >= 1), B_n (n >= 3), C_n (n >= 2), D_n (n >= 4),
/// E_6/E_7/E_8, F_4, G_2. B_2 is not offered; use C_2.
struct LieType {
  Series series;
  int rank;

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Throws Error{InvalidRank} when the rank lies outside the series' range.
LieType make_lie_type(Series series, int rank);

/// Parses "A".."G" (case-insensitive).
Series parse_series(std::string_view letter);
char series_letter(Series series) noexcept;
std::string to_string(const LieType& type);

enum class RootLength { Long, Short };

/// Extended Coxeter-Dynkin diagram on nodes {0, ..., n}; node 0 is the extension.
///
/// `bonds(i, j)` is the number of lines joining i and j (0 when orthogonal,
/// 4 only for the extended A_1 where the highest root equals alpha_1).
struct DynkinDiagram {
  IntMatrix bonds;
  std::vector<RootLength> lengths;

  std::size_t node_count() const noexcept { return lengths.size(); }
  std::vector<int> neighbours(int node) const;
};

/// Immutable structural record of one simple Lie algebra. Simple roots are
/// indexed 0..n-1 here; node i+1 of the diagrams is simple root i.
struct AlgebraData {
  LieType lie_type;
  int n = 0;
  /// C_ij = 2<alpha_i, alpha_j> / <alpha_j, alpha_j>.
  IntMatrix cartan;
  /// det C, the order of the centre.
  std::int64_t cartan_det = 0;
  std::vector<int> marks;
  std::vector<int> dual_marks;
  /// 1 + sum of marks.
  int coxeter = 0;
  BigInt weyl_order;
  /// <alpha_i, alpha_i> with long roots normalised to 2.
  std::vector<Rational> root_norms;
  /// c * C^-1, an integer matrix; <omega_i, omega^v_j> = pairing_num(i, j) / c.
  IntMatrix pairing_num;
  DynkinDiagram ext_dd;
  DynkinDiagram ext_dd_dual;
  /// lcm of the marks.
  int L = 0;
  /// (n+1)L - coxeter = L*N + N' with 0 <= N' < L.
  int N = 0;
};

/// Builds the full record; deterministic and pure.
AlgebraData build(LieType type);
inline AlgebraData build(Series series, int rank) { return build(make_lie_type(series, rank)); }

/// <lambda, M x> for lambda = sum t_i omega_i and M x = sum s_j omega^v_j.
Rational pairing(const AlgebraData& data, std::span<const int> t, std::span<const int> s);

/// Euclidean volume of the fundamental region F.
double volume_of_F(const AlgebraData& data);

/// Coordinates of the highest root xi in the omega^v basis. xi is long, so
/// 2 xi / <xi, xi> = xi and these are integers.
std::vector<int> highest_root_coweight_coords(const AlgebraData& data);

/// Coordinates of 2 eta / <eta, eta> in the omega basis, eta the highest dual root.
std::vector<int> highest_dual_root_weight_coords(const AlgebraData& data);

}  // namespace weylgrid
