#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "btz/ads.hpp"
#include "btz/causal.hpp"
#include "btz/lie.hpp"

// Closed-form horizon predicates, the AdS_3 horizon parametrization, the
// lateral action of exp(alpha X_{0+-}) with its inversion, and generation of
// the AdS_4 horizon as lateral classes of the included AdS_3 horizon.
namespace btz {

struct HorizonResidual {
  int l = 0;
  double value = 0.0;
  bool conjectural = false; // true for l = 5: no proof beyond l = 4
};

// u^2 - x^2 (l=3), u^2 - x^2 - z^2 (l=4), u^2 - x^2 - z1^2 - z2^2 (l=5,
// conjecture-flagged).
inline HorizonResidual horizon_residual(const AdSPoint& p) {
  const int l = p.dim();
  double r = p.v(0) * p.v(0) - p.v(2) * p.v(2);
  for (int i = 4; i <= l; ++i) r -= p.v(i) * p.v(i);
  return {l, r, l == 5};
}

// The two-parameter families +-(alpha, cosh a, +-alpha, sinh a). With
// alpha >= 0 they cover the future horizon, the half of u^2 - x^2 = 0 with
// u t >= 0; negative alpha lands on the other half (past-horizon points,
// which are free for future-directed rays).
inline AdSPoint h3_parametrize(int x_sign, int overall, double a, double alpha) {
  if (x_sign * x_sign != 1 || overall * overall != 1)
    throw std::invalid_argument("h3_parametrize: signs must be +-1");
  Vec v(4);
  v << alpha, std::cosh(a), x_sign * alpha, std::sinh(a);
  return AdSPoint::checked(overall * v);
}

enum class OrbitMode { product, single_exp };

// Orbit of exp(aX) exp(bY) (or exp(aX + bY)) through a base point. With
// (X, Y) = (J1, X_{++}) and base b this sweeps the displayed horizon family
// (alpha, cosh a, alpha, sinh a).
inline AdSPoint orbit_two_param(const AlgebraElement& x, const AlgebraElement& y,
                                double a, double b, const AdSPoint& base,
                                OrbitMode mode = OrbitMode::product) {
  Mat g;
  if (mode == OrbitMode::product) {
    g = mat_exp(AlgebraElement{a * x.m}).m * mat_exp(AlgebraElement{b * y.m}).m;
  } else {
    g = mat_exp(AlgebraElement{a * x.m + b * y.m}).m;
  }
  return AdSPoint::checked(g * base.v);
}

enum class LateralBranch { plus, minus };

struct LateralParams {
  LateralBranch branch = LateralBranch::plus;
  double alpha = 0.0;
  AdSPoint base; // AdS_3
};

// Closed form of exp(alpha X_{0+-}) acting on iota(base); t and y are
// untouched, so the escape set is carried along unchanged.
inline AdSPoint lateral_action(const LateralParams& params) {
  if (params.base.dim() != 3)
    throw std::invalid_argument("lateral_action: base must be AdS_3");
  const double u = params.base.v(0), t = params.base.v(1);
  const double x = params.base.v(2), y = params.base.v(3);
  const double al = params.alpha;
  Vec v(5);
  if (params.branch == LateralBranch::plus) {
    const double shift = 0.5 * al * al * (u - x);
    v << u + shift, t, x + shift, y, al * (u - x);
  } else {
    const double shift = 0.5 * al * al * (u + x);
    v << u + shift, t, x - shift, y, al * (u + x);
  }
  return AdSPoint::checked(std::move(v));
}

struct LateralInverse {
  double alpha = 0.0;
  AdSPoint base; // AdS_3
};

// Inversion of the lateral action: branch plus needs u' - x' != 0, branch
// minus u' + x' != 0. The x formula is the sign-corrected forward inverse
// (round trip is the identity).
inline LateralInverse lateral_inverse(const AdSPoint& p, LateralBranch branch) {
  if (p.dim() != 4)
    throw std::invalid_argument("lateral_inverse: expects AdS_4");
  const double u = p.v(0), t = p.v(1), x = p.v(2), y = p.v(3), z = p.v(4);
  Vec base(4);
  if (branch == LateralBranch::plus) {
    const double den = u - x;
    if (std::abs(den) < tol::inv)
      throw std::domain_error("lateral_inverse: u'-x' ~ 0; use other branch");
    const double shift = 0.5 * z * z / den;
    base << u - shift, t, x - shift, y;
    return {z / den, AdSPoint::checked(std::move(base))};
  }
  const double den = u + x;
  if (std::abs(den) < tol::inv)
    throw std::domain_error("lateral_inverse: u'+x' ~ 0; use other branch");
  const double shift = 0.5 * z * z / den;
  base << u - shift, t, x + shift, y;
  return {z / den, AdSPoint::checked(std::move(base))};
}

struct H4Sample {
  AdSPoint point;         // AdS_4 horizon point
  LateralParams params;   // generating data
  int x_sign = 1, overall = 1;
  double a = 0.0, alpha_base = 0.0;
};

// The AdS_4 horizon as the union of lateral classes
// G_{X0+} . iota(H_3) u G_{X0-} . iota(H_3), sampled with seeded parameters.
// The base parameter alpha_base is kept >= 0 so the base point lies on the
// future horizon (see h3_parametrize).
inline std::vector<H4Sample> h4_generate(int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("h4_generate: count >= 1");
  std::vector<H4Sample> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, i));
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    std::uniform_int_distribution<int> coin(0, 1);
    H4Sample s;
    s.x_sign = coin(rng) ? 1 : -1;
    s.overall = coin(rng) ? 1 : -1;
    s.a = unif(rng);
    s.alpha_base = std::abs(unif(rng));
    s.params.branch = coin(rng) ? LateralBranch::plus : LateralBranch::minus;
    s.params.alpha = unif(rng);
    s.params.base = h3_parametrize(s.x_sign, s.overall, s.a, s.alpha_base);
    s.point = lateral_action(s.params);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace btz
