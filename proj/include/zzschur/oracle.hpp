#pragma once

#include "zzschur/divpow.hpp"

namespace zzschur {

/// Reference path for divided-power structure constants: expand both factors
/// in the ambient tensor power over Q, multiply with Koszul signs, collect,
/// and re-express in the y basis. Kept independent of the orbit-sum formula.

Tensor tensor_multiply(const std::vector<CalBasisElement>& ubasis,
                       const Tensor& u,
                       const std::vector<CalBasisElement>& wbasis,
                       const Tensor& w,
                       const std::function<const Expansion&(int, int)>& mul);

Expansion oracle_mult(const DividedPowerAlgebra& g, int a, int b);
Expansion oracle_action(const DividedPowerModule& m, int a, int v);

}  // namespace zzschur
