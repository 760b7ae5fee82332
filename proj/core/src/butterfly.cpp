#include "fmafft/butterfly.hpp"

#include <stdexcept>

namespace fmafft {

namespace {

// Cosine-form 6-FMA core: outer multiplier w = omega_r, ratio t = omega_i/w.
ButterflyResult cosine_core(const ComplexSample& a, const ComplexSample& b,
                            double t, double w, ArithmeticContext& ctx) {
  const double s1 = ctx.fma(-t, b.im, b.re);  // b_r - t*b_i
  const double s2 = ctx.fma(t, b.re, b.im);   // t*b_r + b_i
  ButterflyResult r;
  r.sum.re = ctx.fma(s1, w, a.re);
  r.sum.im = ctx.fma(s2, w, a.im);
  r.diff.re = ctx.fma(-s1, w, a.re);
  r.diff.im = ctx.fma(-s2, w, a.im);
  return r;
}

// Sine-form 6-FMA core: outer multiplier w = omega_i, ratio t = omega_r/w.
ButterflyResult sine_core(const ComplexSample& a, const ComplexSample& b,
                          double t, double w, ArithmeticContext& ctx) {
  const double s1 = ctx.fma(-t, b.re, b.im);  // b_i - t*b_r
  const double s2 = ctx.fma(t, b.im, b.re);   // b_r + t*b_i
  ButterflyResult r;
  r.sum.re = ctx.fma(-s1, w, a.re);
  r.sum.im = ctx.fma(s2, w, a.im);
  r.diff.re = ctx.fma(s1, w, a.re);
  r.diff.im = ctx.fma(-s2, w, a.im);
  return r;
}

}  // namespace

ButterflyResult butterfly_standard(const ComplexSample& a,
                                   const ComplexSample& b,
                                   const TwiddleEntry& entry,
                                   ArithmeticContext& ctx) {
  const double rr = ctx.mul(entry.omega_r, b.re);
  const double ii = ctx.mul(entry.omega_i, b.im);
  const double ir = ctx.mul(entry.omega_i, b.re);
  const double ri = ctx.mul(entry.omega_r, b.im);
  const double tr = ctx.sub(rr, ii);  // Re(W*b)
  const double ti = ctx.add(ir, ri);  // Im(W*b)
  ButterflyResult r;
  r.sum.re = ctx.add(a.re, tr);
  r.sum.im = ctx.add(a.im, ti);
  r.diff.re = ctx.sub(a.re, tr);
  r.diff.im = ctx.sub(a.im, ti);
  return r;
}

ButterflyResult butterfly_linzer_feig(const ComplexSample& a,
                                      const ComplexSample& b,
                                      const TwiddleEntry& entry,
                                      ArithmeticContext& ctx) {
  if (entry.clamped) {
    // Only k = 0 clamps, where omega_r == 1 exactly, so omega_i/omega_r is
    // just omega_i (== -0.0) and the cosine form reproduces W = 1 exactly.
    return cosine_core(a, b, entry.omega_i, entry.omega_r, ctx);
  }
  return sine_core(a, b, entry.ratio, entry.multiplier, ctx);
}

ButterflyResult butterfly_cosine(const ComplexSample& a,
                                 const ComplexSample& b,
                                 const TwiddleEntry& entry,
                                 ArithmeticContext& ctx) {
  return cosine_core(a, b, entry.ratio, entry.multiplier, ctx);
}

ButterflyResult butterfly_dual(const ComplexSample& a, const ComplexSample& b,
                               const TwiddleEntry& entry,
                               ArithmeticContext& ctx) {
  if (entry.path == TwiddlePath::cos)
    return cosine_core(a, b, entry.ratio, entry.multiplier, ctx);
  return sine_core(a, b, entry.ratio, entry.multiplier, ctx);
}

ButterflyKernel kernel_for(Strategy s) {
  switch (s) {
    case Strategy::standard: return &butterfly_standard;
    case Strategy::linzer_feig: return &butterfly_linzer_feig;
    case Strategy::cosine: return &butterfly_cosine;
    case Strategy::dual_select: return &butterfly_dual;
  }
  throw std::invalid_argument("unknown strategy");
}

}  // namespace fmafft
