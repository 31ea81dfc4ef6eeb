#pragma once
// Data-parallel inner-loop kernels. Scalar reference implementations plus
// SIMD variants (AVX2 on x86-64, NEON on aarch64) selected at runtime.
// The scalar versions are the semantic reference; SIMD variants must agree
// with them to reduction roundoff (equivalence-tested).

#include <cstddef>

namespace radchem::kernels {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*dot3)(const double*, const double*, const double*, std::size_t);
  double (*max_val)(const double*, std::size_t);
  double (*min_val)(const double*, std::size_t);
  double (*max_abs)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  const char* name;
};

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
double dot3(const double* w, const double* x, const double* y, std::size_t n);
double max_val(const double* x, std::size_t n);
double min_val(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
}  // namespace scalar

#if defined(RADCHEM_BUILD_AVX2)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
double dot3(const double* w, const double* x, const double* y, std::size_t n);
double max_val(const double* x, std::size_t n);
double min_val(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
}  // namespace avx2
#endif

#if defined(RADCHEM_BUILD_NEON)
namespace neon {
double dot(const double* x, const double* y, std::size_t n);
double dot3(const double* w, const double* x, const double* y, std::size_t n);
double max_val(const double* x, std::size_t n);
double min_val(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
}  // namespace neon
#endif

// Active table; initialized on first use. RADCHEM_FORCE_SCALAR=1 in the
// environment pins the scalar path.
const KernelTable& active();

inline double dot(const double* x, const double* y, std::size_t n) {
  return active().dot(x, y, n);
}
inline double dot3(const double* w, const double* x, const double* y, std::size_t n) {
  return active().dot3(w, x, y, n);
}
inline double max_val(const double* x, std::size_t n) { return active().max_val(x, n); }
inline double min_val(const double* x, std::size_t n) { return active().min_val(x, n); }
inline double max_abs(const double* x, std::size_t n) { return active().max_abs(x, n); }
inline void axpy(double a, const double* x, double* y, std::size_t n) {
  active().axpy(a, x, y, n);
}

}  // namespace radchem::kernels
