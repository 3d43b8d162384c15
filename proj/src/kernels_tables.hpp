#pragma once

#include "adnlf/kernels.hpp"

namespace adnlf::kernels::detail {

extern const KernelTable scalar_table;
#ifdef ADNLF_HAVE_AVX2_TU
extern const KernelTable avx2_table;
#endif

}  // namespace adnlf::kernels::detail
