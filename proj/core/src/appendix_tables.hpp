#pragma once

#include "weylgrid/algebra.hpp"

namespace weylgrid::detail {

Matrix<BigInt> stored_r_matrix(const LieType& type);

}  // namespace weylgrid::detail
