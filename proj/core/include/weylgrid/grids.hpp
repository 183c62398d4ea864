#pragma once

#include <map>
#include <vector>

#include "weylgrid/algebra.hpp"
#include "weylgrid/points.hpp"

namespace weylgrid {

/// Residue-class coefficients d_{li}, l in [0, L), i in [0, N]:
/// |F_{Lk+l}| = sum_i d_{li} binom(n - i + k, n).
struct RMatrix {
  Matrix<BigInt> rows;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;
};

/// All points of F_M (or of its interior), lexicographically descending.
std::vector<GridPoint> enumerate_F(const AlgebraData& data, int M, bool interior_only = false);

/// All points of Lambda_M (or of its interior), lexicographically descending.
std::vector<WeightPoint> enumerate_Lambda(const AlgebraData& data, int M, bool interior_only = false);

/// |F_M| in closed form: binomial formulas for A-D, R-matrix formula for E, F, G.
BigInt count_F(const AlgebraData& data, int M);

/// |F~_M|: 0 below the Coxeter number, 1 at it, |F_{M-m}| above.
BigInt count_F_interior(const AlgebraData& data, int M);

/// |Lambda_M| by a coin-change count over the dual marks.
BigInt count_Lambda(const AlgebraData& data, int M);
BigInt count_Lambda_interior(const AlgebraData& data, int M);

/// Number of non-negative solutions of a_0 + sum w_i a_i = total.
BigInt count_weighted_compositions(std::span<const int> weights, int total);

/// d_{li} by convolving the bounded box generating functions coordinate by coordinate.
RMatrix generate_R(const AlgebraData& data);

/// The tabulated matrix for the algebra's family.
RMatrix appendix_R(const AlgebraData& data);

/// |F_{M,K}| for every divisor K of M (gcd(s_0..s_n) = K).
std::map<int, BigInt> stratify_gcd(const AlgebraData& data, int M);

/// |F_{M,1}|, the number of Ad-order-M classes.
BigInt count_primitive(const AlgebraData& data, int M);

/// nu(M, G), the number of conjugacy classes whose full order divides M.
/// Available for G_2, F_4, E_8 (full order equals Ad-order) and for C_n
/// (closed form); other types throw Error{Unsupported}.
BigInt nu(const AlgebraData& data, int M);

std::vector<int> divisors(int M);

}  // namespace weylgrid
