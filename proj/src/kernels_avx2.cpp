#include "kernels_detail.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace dephasim::kernels::detail {

namespace {

// fdlibm-style argument reduction constants: pi/2 = PIO2_1 + PIO2_1T to
// ~1e-26, with PIO2_1 carrying 33 significant bits so n*PIO2_1 is exact for
// |n| < 2^20.  This bounds the valid range to |x| < ~1.6e6; larger lanes
// take the libm fallback below.
constexpr double kInvPio2 = 6.36619772367581382433e-01;
constexpr double kPio2_1 = 1.57079632673412561417e+00;
constexpr double kPio2_1t = 6.07710050650619224932e-11;
constexpr double kMaxFastArg = 1.0e6;

constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

inline __m256d poly_sin(__m256d r, __m256d z) {
  __m256d p = _mm256_set1_pd(kS6);
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kS5));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kS4));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kS3));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kS2));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kS1));
  // r + r*z*p
  return _mm256_fmadd_pd(_mm256_mul_pd(r, z), p, r);
}

inline __m256d poly_cos(__m256d z) {
  __m256d p = _mm256_set1_pd(kC6);
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kC5));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kC4));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kC3));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kC2));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kC1));
  // 1 - z/2 + z*z*p
  __m256d c = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, _mm256_set1_pd(1.0));
  return _mm256_fmadd_pd(_mm256_mul_pd(z, z), p, c);
}

// 4-lane double sincos; |x| beyond the reduction range falls back to libm
inline void sincos4(__m256d x, __m256d& sv, __m256d& cv) {
  const __m256d fn_d = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kInvPio2)),
                                       _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m128i n = _mm256_cvtpd_epi32(fn_d);

  __m256d r = _mm256_fnmadd_pd(fn_d, _mm256_set1_pd(kPio2_1), x);
  r = _mm256_fnmadd_pd(fn_d, _mm256_set1_pd(kPio2_1t), r);

  const __m256d z = _mm256_mul_pd(r, r);
  const __m256d ps = poly_sin(r, z);
  const __m256d pc = poly_cos(z);

  // quadrant: k = n mod 4; odd k swaps sin/cos, k in {2,3} negates sin,
  // k in {1,2} negates cos
  const __m256i n64 = _mm256_cvtepi32_epi64(n);
  const __m256d bit0 = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
      _mm256_and_si256(n64, _mm256_set1_epi64x(1)), _mm256_set1_epi64x(1)));
  const __m256d bit1 = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
      _mm256_and_si256(n64, _mm256_set1_epi64x(2)), _mm256_set1_epi64x(2)));
  const __m256i np1 = _mm256_add_epi64(n64, _mm256_set1_epi64x(1));
  const __m256d bit1p = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
      _mm256_and_si256(np1, _mm256_set1_epi64x(2)), _mm256_set1_epi64x(2)));

  const __m256d signbit = _mm256_set1_pd(-0.0);
  __m256d s = _mm256_blendv_pd(ps, pc, bit0);
  __m256d c = _mm256_blendv_pd(pc, ps, bit0);
  s = _mm256_xor_pd(s, _mm256_and_pd(bit1, signbit));
  c = _mm256_xor_pd(c, _mm256_and_pd(bit1p, signbit));

  // lanes outside the fast reduction range
  const __m256d absx = _mm256_andnot_pd(signbit, x);
  const int big = _mm256_movemask_pd(_mm256_cmp_pd(absx, _mm256_set1_pd(kMaxFastArg), _CMP_GT_OQ));
  if (big) [[unlikely]] {
    alignas(32) double xs[4], ss[4], cs[4];
    _mm256_store_pd(xs, x);
    _mm256_store_pd(ss, s);
    _mm256_store_pd(cs, c);
    for (int i = 0; i < 4; ++i) {
      if (big & (1 << i)) {
        ss[i] = std::sin(xs[i]);
        cs[i] = std::cos(xs[i]);
      }
    }
    s = _mm256_load_pd(ss);
    c = _mm256_load_pd(cs);
  }
  sv = s;
  cv = c;
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d sum2 = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(sum2, _mm_unpackhi_pd(sum2, sum2)));
}

enum class Trig { sin, cos, sin_sq };

template <Trig kind>
double comb_impl(std::span<const double> w, std::span<const double> phi, double theta) {
  const std::size_t n = w.size();
  const __m256d theta_v = _mm256_set1_pd(theta);
  __m256d jv = _mm256_set_pd(4.0, 3.0, 2.0, 1.0);
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d acc = _mm256_setzero_pd();

  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d angle = _mm256_mul_pd(jv, theta_v);
    if (!phi.empty()) angle = _mm256_add_pd(angle, _mm256_loadu_pd(phi.data() + j));
    __m256d s, c;
    sincos4(angle, s, c);
    const __m256d wv = _mm256_loadu_pd(w.data() + j);
    if constexpr (kind == Trig::sin) {
      acc = _mm256_fmadd_pd(wv, s, acc);
    } else if constexpr (kind == Trig::cos) {
      acc = _mm256_fmadd_pd(wv, c, acc);
    } else {
      acc = _mm256_fmadd_pd(wv, _mm256_mul_pd(s, s), acc);
    }
    jv = _mm256_add_pd(jv, four);
  }
  double tail = 0.0;
  for (; j < n; ++j) {
    const double angle = static_cast<double>(j + 1) * theta + (phi.empty() ? 0.0 : phi[j]);
    if constexpr (kind == Trig::sin) {
      tail += w[j] * std::sin(angle);
    } else if constexpr (kind == Trig::cos) {
      tail += w[j] * std::cos(angle);
    } else {
      const double s = std::sin(angle);
      tail += w[j] * s * s;
    }
  }
  return hsum(acc) + tail;
}

}  // namespace

double comb_cos_avx2(std::span<const double> w, std::span<const double> phi, double theta) {
  return comb_impl<Trig::cos>(w, phi, theta);
}

double comb_sin_avx2(std::span<const double> w, std::span<const double> phi, double theta) {
  return comb_impl<Trig::sin>(w, phi, theta);
}

double comb_sin_sq_avx2(std::span<const double> w, double theta) {
  return comb_impl<Trig::sin_sq>(w, {}, theta);
}

void comb_sin_trace_avx2(std::span<const double> w, std::span<const double> phi,
                         double theta0, double dtheta, std::span<double> out) {
  const std::size_t n = w.size();
  const std::size_t n4 = (n + 3) & ~std::size_t(3);
  // padded oscillator state; pad lanes carry zero weight and identity step
  std::vector<double> ws(n4, 0.0), s(n4, 0.0), c(n4, 0.0), sd(n4, 0.0), cd(n4, 1.0);
  for (std::size_t j = 0; j < n; ++j) ws[j] = w[j];

  __m256d jv = _mm256_set_pd(4.0, 3.0, 2.0, 1.0);
  const __m256d four = _mm256_set1_pd(4.0);
  for (std::size_t j = 0; j < n; j += 4) {
    __m256d a0 = _mm256_mul_pd(jv, _mm256_set1_pd(theta0));
    if (!phi.empty()) {
      alignas(32) double ph[4] = {0, 0, 0, 0};
      for (std::size_t k = 0; k < 4 && j + k < n; ++k) ph[k] = phi[j + k];
      a0 = _mm256_add_pd(a0, _mm256_load_pd(ph));
    }
    const __m256d st = _mm256_mul_pd(jv, _mm256_set1_pd(dtheta));
    __m256d s0, c0, s1, c1;
    sincos4(a0, s0, c0);
    sincos4(st, s1, c1);
    _mm256_storeu_pd(s.data() + j, s0);
    _mm256_storeu_pd(c.data() + j, c0);
    _mm256_storeu_pd(sd.data() + j, s1);
    _mm256_storeu_pd(cd.data() + j, c1);
    jv = _mm256_add_pd(jv, four);
  }
  // zero the pad lanes the init loop may have written
  for (std::size_t j = n; j < n4; ++j) {
    s[j] = 0.0;
    c[j] = 0.0;
    sd[j] = 0.0;
    cd[j] = 1.0;
  }

  for (std::size_t k = 0; k < out.size(); ++k) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n4; j += 4) {
      const __m256d sj = _mm256_loadu_pd(s.data() + j);
      const __m256d cj = _mm256_loadu_pd(c.data() + j);
      const __m256d sdj = _mm256_loadu_pd(sd.data() + j);
      const __m256d cdj = _mm256_loadu_pd(cd.data() + j);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(ws.data() + j), sj, acc);
      const __m256d sn = _mm256_fmadd_pd(cj, sdj, _mm256_mul_pd(sj, cdj));
      const __m256d cn = _mm256_fnmadd_pd(sj, sdj, _mm256_mul_pd(cj, cdj));
      _mm256_storeu_pd(s.data() + j, sn);
      _mm256_storeu_pd(c.data() + j, cn);
    }
    out[k] = hsum(acc);
  }
}

}  // namespace dephasim::kernels::detail

#else  // no AVX2 at compile time: route to the scalar reference

namespace dephasim::kernels::detail {

double comb_cos_avx2(std::span<const double> w, std::span<const double> phi, double theta) {
  return comb_cos_scalar(w, phi, theta);
}
double comb_sin_avx2(std::span<const double> w, std::span<const double> phi, double theta) {
  return comb_sin_scalar(w, phi, theta);
}
double comb_sin_sq_avx2(std::span<const double> w, double theta) {
  return comb_sin_sq_scalar(w, theta);
}
void comb_sin_trace_avx2(std::span<const double> w, std::span<const double> phi,
                         double theta0, double dtheta, std::span<double> out) {
  comb_sin_trace_scalar(w, phi, theta0, dtheta, out);
}

}  // namespace dephasim::kernels::detail

#endif
