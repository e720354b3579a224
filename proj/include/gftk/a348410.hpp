#pragma once

#include "gftk/guess.hpp"
#include "gftk/poly.hpp"

namespace gftk {

// Built-in instance A348410: a_n = [x^n] (1−x)^{−n}(1−x²)^{−n}, realized as
// the diagonal of F(x,y) = (1+x)(1−x)² / (1−x−x²+x³−y).
const RationalBivariate& a348410_f();

// (256z²+107z−32)g⁴ + (−256z²−107z+32)g³ + 12z(8z+3)g² − 4z(4z+1)g + z² = 0.
const AlgebraicEquation& a348410_quartic();

// 2680(4m+1)(2m+1)(4m+3)·a_m + (2909610+5084335m+2915850m²+552965m³)·a_{m+1}
// + (−2005464−927852m+180504m²+90732m³)·a_{m+2}
// − 64(m+3)(1759m²+8778m+12080)·a_{m+3} + 7168(m+4)(m+3)(2m+7)·a_{m+4} = 0.
const Recurrence& a348410_recurrence();

} // namespace gftk
