#include "latt/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace latt::kernels {

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double weighted_sumsq_scalar(const double* e, const double* w, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += e[i] * e[i] * w[i];
  return s;
}

void sub_scaled_scalar(double* y, const double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] -= a * x[i];
}

}  // namespace detail

namespace {

constexpr Ops kScalarOps{detail::dot_scalar, detail::weighted_sumsq_scalar,
                         detail::sub_scaled_scalar, "scalar"};

#if defined(LATT_KERNELS_AVX2)
constexpr Ops kAvx2Ops{detail::dot_avx2, detail::weighted_sumsq_avx2,
                       detail::sub_scaled_avx2, "avx2"};
#endif

#if defined(LATT_KERNELS_NEON)
constexpr Ops kNeonOps{detail::dot_neon, detail::weighted_sumsq_neon,
                       detail::sub_scaled_neon, "neon"};
#endif

bool avx2_usable() {
#if defined(LATT_KERNELS_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool neon_usable() {
#if defined(LATT_KERNELS_NEON)
  return true;  // mandatory on aarch64
#else
  return false;
#endif
}

const Ops* pick_auto() {
#if defined(LATT_KERNELS_AVX2)
  if (avx2_usable()) return &kAvx2Ops;
#endif
#if defined(LATT_KERNELS_NEON)
  if (neon_usable()) return &kNeonOps;
#endif
  return &kScalarOps;
}

const Ops* initial_pick() {
  if (const char* env = std::getenv("LATT_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return &kScalarOps;
#if defined(LATT_KERNELS_AVX2)
    if (std::strcmp(env, "avx2") == 0 && avx2_usable()) return &kAvx2Ops;
#endif
#if defined(LATT_KERNELS_NEON)
    if (std::strcmp(env, "neon") == 0 && neon_usable()) return &kNeonOps;
#endif
  }
  return pick_auto();
}

const Ops*& current_slot() {
  static const Ops* current = initial_pick();
  return current;
}

}  // namespace

const Ops& active() { return *current_slot(); }

std::string_view active_name() { return active().name; }

bool select(Impl impl) {
  switch (impl) {
    case Impl::Auto:
      current_slot() = pick_auto();
      return true;
    case Impl::Scalar:
      current_slot() = &kScalarOps;
      return true;
    case Impl::Avx2:
#if defined(LATT_KERNELS_AVX2)
      if (avx2_usable()) {
        current_slot() = &kAvx2Ops;
        return true;
      }
#endif
      return false;
    case Impl::Neon:
#if defined(LATT_KERNELS_NEON)
      if (neon_usable()) {
        current_slot() = &kNeonOps;
        return true;
      }
#endif
      return false;
  }
  return false;
}

}  // namespace latt::kernels
