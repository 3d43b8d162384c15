// Scalar reference kernels. These define the canonical arithmetic: the SIMD
// variants mirror this operation order exactly and are tested for bit
// equality against it. Compiled with -ffp-contract=off (see CMakeLists).
#include "adnlf/kernels.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "exp_constants.hpp"
#include "kernels_tables.hpp"

namespace adnlf::kernels {

using namespace detail;

double exp_saturated(double x) noexcept {
    if (std::isnan(x)) return x;
    if (x > kExpSatHi) return std::numeric_limits<double>::infinity();
    if (x < kExpSatLo) return 0.0;

    // n = nearest integer to x/ln2 (round-half-even, matching the SIMD
    // rounding instruction), then two-step Cody-Waite reduction.
    double n = std::nearbyint(x * kLog2E);
    double r = x - n * kLn2Hi;
    r = r - n * kLn2Lo;

    double rr = r * r;
    double p = kExpP0;
    p = p * rr + kExpP1;
    p = p * rr + kExpP2;
    p = p * r;

    double q = kExpQ0;
    q = q * rr + kExpQ1;
    q = q * rr + kExpQ2;
    q = q * rr + kExpQ3;

    double e = p / (q - p);
    e = 1.0 + 2.0 * e;

    // scale by 2^n via the exponent field; |n| <= 1022 here.
    auto ni = static_cast<std::int64_t>(n);
    double scale = std::bit_cast<double>(static_cast<std::uint64_t>(ni + 1023) << 52);
    return e * scale;
}

double sigmoid(double z) noexcept {
    double t = exp_saturated(-z);
    return 1.0 / (1.0 + t);
}

namespace {

void bridge_row_scalar(const double* z, double* out, std::size_t n, double iota) {
    for (std::size_t k = 0; k < n; ++k) {
        double phi = sigmoid(z[k]);
        out[k] = (phi >= iota) ? phi : 0.0;
    }
}

void bridge_grad_row_scalar(const double* z, double* p, double* gp,
                            std::size_t n, double iota) {
    for (std::size_t k = 0; k < n; ++k) {
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

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 += a[i] * b[i];
        acc1 += a[i + 1] * b[i + 1];
        acc2 += a[i + 2] * b[i + 2];
        acc3 += a[i + 3] * b[i + 3];
    }
    double sum = (acc0 + acc2) + (acc1 + acc3);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void update_row_scalar(double* x, const double* attract, const double* decay,
                       const double* grad, std::size_t n,
                       double eta, double delta, double lambda) {
    for (std::size_t k = 0; k < n; ++k) {
        double step = eta * (delta * attract[k] - lambda * decay[k]) * grad[k];
        x[k] = x[k] + step;
    }
}

}  // namespace

namespace detail {
const KernelTable scalar_table = {
    &bridge_row_scalar,
    &bridge_grad_row_scalar,
    &dot_scalar,
    &update_row_scalar,
};
}  // namespace detail

}  // namespace adnlf::kernels
