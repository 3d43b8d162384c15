// AVX2 kernel variants. Lane arithmetic mirrors the scalar reference step
// for step (same reduction of exp, no FMA, same dot accumulator layout), so
// every output is bit-identical to the scalar backend. Tails reuse the
// scalar elementwise functions.
#include "adnlf/kernels.hpp"

#ifdef ADNLF_HAVE_AVX2_TU

#include <immintrin.h>

#include <cstdint>
#include <limits>

#include "exp_constants.hpp"
#include "kernels_tables.hpp"

namespace adnlf::kernels {

using namespace detail;

namespace {

inline __m256d exp_pd(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(kLog2E);
    const __m256d ln2_hi = _mm256_set1_pd(kLn2Hi);
    const __m256d ln2_lo = _mm256_set1_pd(kLn2Lo);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);

    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(n, ln2_hi));
    r = _mm256_sub_pd(r, _mm256_mul_pd(n, ln2_lo));

    __m256d rr = _mm256_mul_pd(r, r);
    __m256d p = _mm256_set1_pd(kExpP0);
    p = _mm256_add_pd(_mm256_mul_pd(p, rr), _mm256_set1_pd(kExpP1));
    p = _mm256_add_pd(_mm256_mul_pd(p, rr), _mm256_set1_pd(kExpP2));
    p = _mm256_mul_pd(p, r);

    __m256d q = _mm256_set1_pd(kExpQ0);
    q = _mm256_add_pd(_mm256_mul_pd(q, rr), _mm256_set1_pd(kExpQ1));
    q = _mm256_add_pd(_mm256_mul_pd(q, rr), _mm256_set1_pd(kExpQ2));
    q = _mm256_add_pd(_mm256_mul_pd(q, rr), _mm256_set1_pd(kExpQ3));

    __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    e = _mm256_add_pd(one, _mm256_mul_pd(two, e));

    // 2^n through the exponent field; saturated lanes are patched below.
    __m128i n32 = _mm256_cvtpd_epi32(n);
    __m256i n64 = _mm256_cvtepi32_epi64(n32);
    __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    e = _mm256_mul_pd(e, _mm256_castsi256_pd(bits));

    const __m256d hi = _mm256_set1_pd(kExpSatHi);
    const __m256d lo = _mm256_set1_pd(kExpSatLo);
    const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    e = _mm256_blendv_pd(e, inf, _mm256_cmp_pd(x, hi, _CMP_GT_OQ));
    e = _mm256_blendv_pd(e, _mm256_setzero_pd(), _mm256_cmp_pd(x, lo, _CMP_LT_OQ));
    e = _mm256_blendv_pd(e, x, _mm256_cmp_pd(x, x, _CMP_UNORD_Q));
    return e;
}

inline __m256d sigmoid_pd(__m256d z) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d t = exp_pd(_mm256_xor_pd(z, sign));
    return _mm256_div_pd(one, _mm256_add_pd(one, t));
}

void bridge_row_avx2(const double* z, double* out, std::size_t n, double iota) {
    const __m256d viota = _mm256_set1_pd(iota);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d phi = sigmoid_pd(_mm256_loadu_pd(z + k));
        __m256d mask = _mm256_cmp_pd(phi, viota, _CMP_GE_OQ);
        _mm256_storeu_pd(out + k, _mm256_and_pd(phi, mask));
    }
    for (; k < n; ++k) {
        double phi = sigmoid(z[k]);
        out[k] = (phi >= iota) ? phi : 0.0;
    }
}

void bridge_grad_row_avx2(const double* z, double* p, double* gp,
                          std::size_t n, double iota) {
    const __m256d viota = _mm256_set1_pd(iota);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d phi = sigmoid_pd(_mm256_loadu_pd(z + k));
        __m256d mask = _mm256_cmp_pd(phi, viota, _CMP_GE_OQ);
        __m256d g = _mm256_mul_pd(phi, _mm256_sub_pd(one, phi));
        _mm256_storeu_pd(p + k, _mm256_and_pd(phi, mask));
        _mm256_storeu_pd(gp + k, _mm256_and_pd(g, mask));
    }
    for (; k < n; ++k) {
        double phi = sigmoid(z[k]);
        if (phi >= iota) {
            p[k] = phi;
            gp[k] = phi * (1.0 - phi);
        } else {
            p[k] = 0.0;
            gp[k] = 0.0;
        }
    }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d vacc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        vacc = _mm256_add_pd(vacc, _mm256_mul_pd(va, vb));
    }
    // (acc0+acc2) + (acc1+acc3), matching the scalar reduction order.
    __m128d lo = _mm256_castpd256_pd128(vacc);
    __m128d hi = _mm256_extractf128_pd(vacc, 1);
    __m128d pair = _mm_add_pd(lo, hi);
    double sum = _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void update_row_avx2(double* x, const double* attract, const double* decay,
                     const double* grad, std::size_t n,
                     double eta, double delta, double lambda) {
    const __m256d veta = _mm256_set1_pd(eta);
    const __m256d vdelta = _mm256_set1_pd(delta);
    const __m256d vlambda = _mm256_set1_pd(lambda);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d va = _mm256_loadu_pd(attract + k);
        __m256d vd = _mm256_loadu_pd(decay + k);
        __m256d vg = _mm256_loadu_pd(grad + k);
        __m256d inner = _mm256_sub_pd(_mm256_mul_pd(vdelta, va), _mm256_mul_pd(vlambda, vd));
        __m256d step = _mm256_mul_pd(_mm256_mul_pd(veta, inner), vg);
        _mm256_storeu_pd(x + k, _mm256_add_pd(_mm256_loadu_pd(x + k), step));
    }
    for (; k < n; ++k) {
        double step = eta * (delta * attract[k] - lambda * decay[k]) * grad[k];
        x[k] = x[k] + step;
    }
}

}  // namespace

namespace detail {
const KernelTable avx2_table = {
    &bridge_row_avx2,
    &bridge_grad_row_avx2,
    &dot_avx2,
    &update_row_avx2,
};
}  // namespace detail

}  // namespace adnlf::kernels

#endif  // ADNLF_HAVE_AVX2_TU
