// NEON variants of the double-precision kernels (aarch64 only).

#if defined(LATT_KERNELS_NEON)

#include <arm_neon.h>

#include <cstddef>

namespace latt::kernels::detail {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  if (i + 2 <= n) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    i += 2;
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double weighted_sumsq_neon(const double* e, const double* w, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t ev = vld1q_f64(e + i);
    acc = vfmaq_f64(acc, vmulq_f64(ev, ev), vld1q_f64(w + i));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += e[i] * e[i] * w[i];
  return s;
}

void sub_scaled_neon(double* y, const double* x, double a, std::size_t n) {
  float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t yv = vld1q_f64(y + i);
    yv = vfmsq_f64(yv, av, vld1q_f64(x + i));
    vst1q_f64(y + i, yv);
  }
  for (; i < n; ++i) y[i] -= a * x[i];
}

}  // namespace latt::kernels::detail

#endif  // LATT_KERNELS_NEON
