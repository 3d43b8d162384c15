// Shared constants for the saturated exp kernel (Cephes-style rational
// approximation, ~1 ulp on the non-saturated range). Both the scalar and
// the SIMD translation units include this header so the coefficients and
// the evaluation order stay in lockstep.
#pragma once

namespace adnlf::kernels::detail {

inline constexpr double kLog2E  = 1.4426950408889634073599;
inline constexpr double kLn2Hi  = 6.93145751953125e-1;
inline constexpr double kLn2Lo  = 1.42860682030941723212e-6;

inline constexpr double kExpP0 = 1.26177193074810590878e-4;
inline constexpr double kExpP1 = 3.02994407707441961300e-2;
inline constexpr double kExpP2 = 9.99999999999999999910e-1;

inline constexpr double kExpQ0 = 3.00198505138664455042e-6;
inline constexpr double kExpQ1 = 2.52448340349684104192e-3;
inline constexpr double kExpQ2 = 2.27265548208155028766e-1;
inline constexpr double kExpQ3 = 2.00000000000000000005e0;

// |x| above this saturates: keeps |n| <= 1022 so the 2^n bit trick stays
// inside the normal exponent range.
inline constexpr double kExpSatHi = 708.396418532264078749;
inline constexpr double kExpSatLo = -708.396418532264078749;

}  // namespace adnlf::kernels::detail
