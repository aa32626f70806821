#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "btz/ads.hpp"

// The causal classifier. Null rays through [g] hit the singularity where
// T(s) +- Y(s) = 0; both combinations are affine in the direction w, so the
// escaping directions form an intersection of two closed spherical caps on
// S^{l-2}, and black hole / horizon / free is decided in closed form from the
// cap geometry. A brute-force sampling classifier is kept as an independent
// oracle.
namespace btz {

// Per-point data of the two singularity branches. For the t row
// (t, a, b, c, ...) and y row (y, a', b', c', ...) of the representative,
// T(s) +- Y(s) = offset +- s * (n . w - d).
struct BranchData {
  int l = 0;
  double offset_plus = 0.0;  // t + y
  double offset_minus = 0.0; // t - y
  int sigma_plus = 1;        // sign of t + y
  int sigma_minus = 1;       // sign of t - y
  Vec n_plus, n_minus;       // affine normals on R^{l-1}
  double d_plus = 0.0, d_minus = 0.0;

  double aff_plus(const Vec& w) const { return n_plus.dot(w) - d_plus; }
  double aff_minus(const Vec& w) const { return n_minus.dot(w) - d_minus; }
};

inline BranchData branch_data(const Representative& rep) {
  if (is_singular(rep.point))
    throw std::domain_error("branch_data: singular point");
  const int l = rep.point.dim();
  BranchData bd;
  bd.l = l;
  const auto trow = rep.g.m.row(1);
  const auto yrow = rep.g.m.row(3);
  bd.offset_plus = trow(0) + yrow(0);
  bd.offset_minus = trow(0) - yrow(0);
  bd.sigma_plus = bd.offset_plus >= 0 ? 1 : -1;
  bd.sigma_minus = bd.offset_minus >= 0 ? 1 : -1;
  bd.n_plus = Vec(l - 1);
  bd.n_minus = Vec(l - 1);
  for (int i = 0; i < l - 1; ++i) {
    bd.n_plus(i) = trow(2 + i) + yrow(2 + i);
    bd.n_minus(i) = trow(2 + i) - yrow(2 + i);
  }
  bd.d_plus = trow(1) + yrow(1);
  bd.d_minus = trow(1) - yrow(1);
  return bd;
}

// Roots of T +- Y = 0 along the ray in direction w; absent when the affine
// form vanishes. A future hit is a root with s > 0 (s = 0 cannot occur off
// the singularity since the offsets are nonzero).
struct BranchRoots {
  std::optional<double> plus;
  std::optional<double> minus;
};

inline BranchRoots branch_roots(const BranchData& bd, const Vec& w) {
  BranchRoots r;
  const double ap = bd.aff_plus(w);
  const double am = bd.aff_minus(w);
  if (std::abs(ap) > tol::den) r.plus = -bd.offset_plus / ap;
  if (std::abs(am) > tol::den) r.minus = -bd.offset_minus / am;
  return r;
}

// Closed cap {w in S^{l-2} : n . w >= c}.
struct SphericalCap {
  Vec n;
  double c = 0.0;
};

enum class CapState { empty, point, proper, full };

inline CapState cap_state(const SphericalCap& cap, double& theta) {
  const double nn = cap.n.norm();
  theta = 0.0;
  if (nn <= tol::den) return cap.c > 0.0 ? CapState::empty : CapState::full;
  const double r = cap.c / nn;
  if (r > 1.0 + 1e-12) return CapState::empty;
  if (std::abs(r - 1.0) <= 1e-12) return CapState::point;
  if (r <= -1.0) {
    theta = M_PI;
    return CapState::full;
  }
  // atan2 form: well conditioned near r = +-1, where acos loses ~sqrt(eps)
  theta = std::atan2(std::sqrt(std::max(0.0, (1.0 - r) * (1.0 + r))), r);
  return CapState::proper;
}

enum class IntersectionClass { Empty, MeasureZero, HasInterior };

struct EscapeSet {
  SphericalCap cap_plus, cap_minus;
  IntersectionClass intersection_class = IntersectionClass::Empty;
  double theta_plus = 0.0, theta_minus = 0.0;
  double separation = 0.0;                    // angle between cap centers
  double gap = std::numeric_limits<double>::quiet_NaN(); // sep - (th+ + th-)
};

// A direction escapes the singularity in the future iff sigma+- A+-(w) >= 0
// on both branches, i.e. iff it lies in both caps. Emptiness / tangency /
// interior of the intersection is decided from the cap angles.
inline EscapeSet escape_caps(const BranchData& bd) {
  EscapeSet es;
  es.cap_plus = {bd.sigma_plus * bd.n_plus, bd.sigma_plus * bd.d_plus};
  es.cap_minus = {bd.sigma_minus * bd.n_minus, bd.sigma_minus * bd.d_minus};

  const CapState sp = cap_state(es.cap_plus, es.theta_plus);
  const CapState sm = cap_state(es.cap_minus, es.theta_minus);

  auto angle_between = [](const Vec& a, const Vec& b) {
    const double na = a.norm(), nb = b.norm();
    if (na <= tol::den || nb <= tol::den) return 0.0;
    // 2 atan2(|a^ - b^|, |a^ + b^|): exact at 0 and pi, unlike acos, whose
    // sqrt(eps) error near antipodal centers would swamp the tangency band
    const Vec ua = a / na, ub = b / nb;
    return 2.0 * std::atan2((ua - ub).norm(), (ua + ub).norm());
  };
  es.separation = angle_between(es.cap_plus.n, es.cap_minus.n);

  using IC = IntersectionClass;
  if (sp == CapState::empty || sm == CapState::empty) {
    es.intersection_class = IC::Empty;
    return es;
  }
  if (sp == CapState::full && sm == CapState::full) {
    es.intersection_class = IC::HasInterior;
    return es;
  }
  if (sp == CapState::full || sm == CapState::full) {
    const CapState other = (sp == CapState::full) ? sm : sp;
    es.intersection_class =
        (other == CapState::point) ? IC::MeasureZero : IC::HasInterior;
    return es;
  }
  if (sp == CapState::point || sm == CapState::point) {
    // the point cap's single direction is its center
    const double reach = (sp == CapState::point && sm == CapState::point)
                             ? 0.0
                             : std::max(es.theta_plus, es.theta_minus);
    es.intersection_class = (es.separation <= reach + tol::angle)
                                ? IC::MeasureZero
                                : IC::Empty;
    return es;
  }
  // both proper
  es.gap = es.separation - (es.theta_plus + es.theta_minus);
  if (es.gap > tol::angle)
    es.intersection_class = IC::Empty;
  else if (es.gap >= -tol::angle)
    es.intersection_class = IC::MeasureZero;
  else
    es.intersection_class = IC::HasInterior;
  return es;
}

// Lower bound on the angular inradius of the escape set: the largest disc
// guaranteed inside the cap intersection. Zero unless the intersection has
// interior. The lens of two proper caps contains a disc of radius
// min(th+, th-, -gap/2); a full cap contributes th = pi. The sampling oracle
// resolves the escape set only when this radius exceeds its grid spacing,
// so equivalence checks use it to skip under-resolved points.
inline double escape_inradius(const EscapeSet& es) {
  if (es.intersection_class != IntersectionClass::HasInterior) return 0.0;
  double r = std::min(es.theta_plus, es.theta_minus);
  if (!std::isnan(es.gap)) r = std::min(r, -es.gap / 2.0);
  return std::max(r, 0.0);
}

enum class CausalTag { Singular, BlackHole, Horizon, FreeInterior };

inline const char* to_string(CausalTag t) {
  switch (t) {
    case CausalTag::Singular: return "Singular";
    case CausalTag::BlackHole: return "BlackHole";
    case CausalTag::Horizon: return "Horizon";
    case CausalTag::FreeInterior: return "FreeInterior";
  }
  return "?";
}

struct CausalClass {
  CausalTag tag = CausalTag::Singular;
  double sing_residual = 0.0;
  double cap_gap = std::numeric_limits<double>::quiet_NaN();
  double escape_fraction = std::numeric_limits<double>::quiet_NaN();
};

// Exact classifier. Points inside the singular band are reported Singular
// before any causal analysis; the result does not depend on the seed.
inline CausalClass classify(const AdSPoint& p, std::uint64_t seed = 0) {
  CausalClass out;
  out.sing_residual = sing_residual(p);
  if (is_singular(p)) {
    out.tag = CausalTag::Singular;
    return out;
  }
  const Representative rep = seeded_representative(p, seed);
  const EscapeSet es = escape_caps(branch_data(rep));
  out.cap_gap = es.gap;
  switch (es.intersection_class) {
    case IntersectionClass::Empty: out.tag = CausalTag::BlackHole; break;
    case IntersectionClass::MeasureZero: out.tag = CausalTag::Horizon; break;
    case IntersectionClass::HasInterior: out.tag = CausalTag::FreeInterior; break;
  }
  return out;
}

inline EscapeSet escape_set(const AdSPoint& p, std::uint64_t seed = 0) {
  const Representative rep = seeded_representative(p, seed);
  return escape_caps(branch_data(rep));
}

// Quasi-uniform directions on S^{l-2}: rotated uniform grid on the circle,
// Fibonacci lattice on S^2, seeded Gaussian samples on S^3.
inline std::vector<Vec> sample_directions(int l, int n, std::uint64_t seed) {
  std::vector<Vec> dirs;
  dirs.reserve(n);
  std::mt19937_64 rng(mix_seed(seed, 0xd1f5));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  if (l == 3) {
    const double off = unif(rng);
    for (int i = 0; i < n; ++i) {
      const double phi = 2.0 * M_PI * (i + off) / n;
      Vec w(2);
      w << std::cos(phi), std::sin(phi);
      dirs.push_back(w);
    }
  } else if (l == 4) {
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    const double off = unif(rng);
    for (int i = 0; i < n; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / n;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * i + 2.0 * M_PI * off;
      Vec w(3);
      w << r * std::cos(phi), r * std::sin(phi), z;
      dirs.push_back(w);
    }
  } else {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(dirs.size()) < n) {
      Vec w(l - 1);
      for (int i = 0; i < l - 1; ++i) w(i) = gauss(rng);
      const double nn = w.norm();
      if (nn < 1e-6) continue;
      dirs.push_back(w / nn);
    }
  }
  return dirs;
}

// Sampling oracle: exhaustively tests directions for future singularity
// hits. Horizon is reported when the escaping fraction is positive but below
// f_min; used only as a cross-check against the exact classifier.
inline CausalClass classify_sampled(const AdSPoint& p, int n_dirs,
                                    std::uint64_t seed = 0) {
  if (n_dirs < 16) throw std::invalid_argument("classify_sampled: n_dirs >= 16");
  CausalClass out;
  out.sing_residual = sing_residual(p);
  if (is_singular(p)) {
    out.tag = CausalTag::Singular;
    return out;
  }
  const Representative rep = seeded_representative(p, seed);
  const BranchData bd = branch_data(rep);
  int escapes = 0;
  for (const Vec& w : sample_directions(p.dim(), n_dirs, seed)) {
    const BranchRoots r = branch_roots(bd, w);
    const bool hit = (r.plus && *r.plus > 0.0) || (r.minus && *r.minus > 0.0);
    if (!hit) ++escapes;
  }
  out.escape_fraction = static_cast<double>(escapes) / n_dirs;
  constexpr double f_min = 1e-3;
  if (escapes == 0)
    out.tag = CausalTag::BlackHole;
  else if (out.escape_fraction >= f_min)
    out.tag = CausalTag::FreeInterior;
  else
    out.tag = CausalTag::Horizon;
  return out;
}

} // namespace btz
