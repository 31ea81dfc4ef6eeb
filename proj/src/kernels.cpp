#include "radchem/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace radchem::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double dot3(const double* w, const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * x[i] * y[i];
  return s;
}

double max_val(const double* x, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

double min_val(const double* x, std::size_t n) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::min(m, x[i]);
  return m;
}

double max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

}  // namespace scalar

namespace {

KernelTable make_scalar_table() {
  return KernelTable{scalar::dot, scalar::dot3, scalar::max_val,
                     scalar::min_val, scalar::max_abs, scalar::axpy, "scalar"};
}

KernelTable select_table() {
  const char* force = std::getenv("RADCHEM_FORCE_SCALAR");
  if (force != nullptr && force[0] == '1') return make_scalar_table();
#if defined(RADCHEM_BUILD_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return KernelTable{avx2::dot, avx2::dot3, avx2::max_val,
                       avx2::min_val, avx2::max_abs, avx2::axpy, "avx2"};
  }
#endif
#if defined(RADCHEM_BUILD_NEON)
  return KernelTable{neon::dot, neon::dot3, neon::max_val,
                     neon::min_val, neon::max_abs, neon::axpy, "neon"};
#endif
  return make_scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable table = select_table();
  return table;
}

}  // namespace radchem::kernels
