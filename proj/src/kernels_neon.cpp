// NEON kernel variants for aarch64. Same contracts as the scalar reference.
#include <arm_neon.h>

#include <cmath>
#include <limits>

#include "radchem/kernels.hpp"

namespace radchem::kernels::neon {

double dot(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double dot3(const double* w, const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t p = vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i));
    acc = vfmaq_f64(acc, vld1q_f64(w + i), p);
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += w[i] * x[i] * y[i];
  return s;
}

double max_val(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vld1q_f64(x + i));
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

double min_val(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vminq_f64(acc, vld1q_f64(x + i));
  double m = vminvq_f64(acc);
  for (; i < n; ++i) m = std::min(m, x[i]);
  return m;
}

double max_abs(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vy = vld1q_f64(y + i);
    vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

}  // namespace radchem::kernels::neon
