#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace latt::kernels {

// Double-precision inner loops shared by the enumeration cores, the float
// Gram-Schmidt views and the Monte-Carlo sampler. The scalar reference
// implementation is always available; wider variants (AVX2 on x86-64, NEON
// on aarch64) are picked at runtime. The environment variable LATT_KERNELS
// (scalar|avx2|neon|auto) overrides the automatic choice.

enum class Impl { Auto, Scalar, Avx2, Neon };

struct Ops {
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum of e[i]^2 * w[i]
  double (*weighted_sumsq)(const double* e, const double* w, std::size_t n);
  // y[i] -= a * x[i]
  void (*sub_scaled)(double* y, const double* x, double a, std::size_t n);
  const char* name;
};

// Currently selected implementation (initialized on first use).
const Ops& active();

// Force a particular implementation. Returns false (and leaves the current
// selection untouched) when the variant was not compiled in or the CPU does
// not support it. Impl::Auto re-runs the automatic selection.
bool select(Impl impl);

std::string_view active_name();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

inline double weighted_sumsq(std::span<const double> e,
                             std::span<const double> w) {
  return active().weighted_sumsq(e.data(), w.data(), e.size());
}

inline void sub_scaled(std::span<double> y, std::span<const double> x,
                       double a) {
  active().sub_scaled(y.data(), x.data(), a, y.size());
}

namespace detail {

double dot_scalar(const double*, const double*, std::size_t);
double weighted_sumsq_scalar(const double*, const double*, std::size_t);
void sub_scaled_scalar(double*, const double*, double, std::size_t);

#if defined(LATT_KERNELS_AVX2)
double dot_avx2(const double*, const double*, std::size_t);
double weighted_sumsq_avx2(const double*, const double*, std::size_t);
void sub_scaled_avx2(double*, const double*, double, std::size_t);
#endif

#if defined(LATT_KERNELS_NEON)
double dot_neon(const double*, const double*, std::size_t);
double weighted_sumsq_neon(const double*, const double*, std::size_t);
void sub_scaled_neon(double*, const double*, double, std::size_t);
#endif

}  // namespace detail

}  // namespace latt::kernels
