// Row-level arithmetic kernels with runtime-dispatched SIMD variants.
//
// Every backend implements the same operation order as the scalar reference
// (same polynomial exp, same 4-way strided reduction, no fused multiply-add),
// so results are bit-identical across backends. The equivalence tests assert
// exact equality, and a model trained with one backend reproduces bit-for-bit
// under another.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace adnlf::kernels {

enum class Backend { scalar, avx2 };

// Function table for the f-length row primitives used by the trainer and
// the evaluator. `n` is the latent dimension.
struct KernelTable {
    // out[k] = g(z[k]): logistic thresholded at iota, exactly 0 below it.
    void (*bridge_row)(const double* z, double* out, std::size_t n, double iota);

    // p[k] = g(z[k]) and gp[k] = g'(z[k]) = phi(1-phi), both snapped to 0
    // below the threshold by the same mask.
    void (*bridge_grad_row)(const double* z, double* p, double* gp,
                            std::size_t n, double iota);

    // Dot product in the canonical 4-accumulator strided order:
    //   acc[j] += a[4i+j]*b[4i+j],  result = (acc0+acc2)+(acc1+acc3) + tail.
    double (*dot)(const double* a, const double* b, std::size_t n);

    // x[k] += eta * (delta*attract[k] - lambda*decay[k]) * grad[k]
    void (*update_row)(double* x, const double* attract, const double* decay,
                       const double* grad, std::size_t n,
                       double eta, double delta, double lambda);
};

bool cpu_has_avx2() noexcept;
bool backend_available(Backend b) noexcept;
const KernelTable& table(Backend b) noexcept;

// Best supported backend, overridable with ADNLF_KERNEL=scalar|avx2.
// The choice is made once per process, so a run is reproducible.
Backend active_backend() noexcept;
const KernelTable& active() noexcept;
std::string_view backend_name(Backend b) noexcept;

// Scalar canonical elementwise pieces (shared by the single-value bridge
// functions so they agree bit-exactly with the row kernels).
//
// exp_saturated is exp(x) accurate to ~1 ulp on [-708.39, 708.39] and
// saturating to 0 / +inf outside; that window keeps the 2^n scaling step
// in the normal exponent range and loses nothing visible through the
// logistic.
double exp_saturated(double x) noexcept;
double sigmoid(double z) noexcept;   // 1/(1+exp(-z))

}  // namespace adnlf::kernels
