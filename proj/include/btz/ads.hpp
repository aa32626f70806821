#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "btz/ambient.hpp"
#include "btz/lie.hpp"
#include "btz/rng.hpp"

// Points of AdS_l in the quadric model, representatives, the inclusion iota,
// the SL(2,R) chart psi, the singularity predicate and light-like geodesics.
namespace btz {

struct AdSPoint {
  Vec v;
  int dim() const { return static_cast<int>(v.size()) - 1; }

  static AdSPoint checked(Vec v) {
    const int l = static_cast<int>(v.size()) - 1;
    check_dim(l);
    if (std::abs(q_norm(v) - 1.0) > tol::quadric)
      throw std::invalid_argument("AdSPoint: not on quadric");
    return {std::move(v)};
  }
};

struct Representative {
  GroupElement g;
  AdSPoint point;
};

inline AdSPoint base_point(int l) {
  Vec v = Vec::Zero(l + 1);
  v(0) = 1.0;
  return {v};
}

// [g] = g e_u
inline AdSPoint project(const GroupElement& g) {
  return AdSPoint::checked(g.m.col(0));
}

inline AdSPoint random_point(int l, std::uint64_t seed, double sigma) {
  return AdSPoint::checked(random_on_quadric(l, seed, sigma));
}

inline double sing_residual(const AdSPoint& p) {
  return p.v(1) * p.v(1) - p.v(3) * p.v(3);
}

inline bool is_singular(const AdSPoint& p) {
  return std::abs(sing_residual(p)) <= tol::sing;
}

namespace detail {

// Random element of the identity component of the stabilizer SO(1,l-1):
// exp of a seeded element of the algebra annihilating e_u. Orthochronous,
// so the future orientation of null rays is preserved.
inline GroupElement random_stabilizer(int l, std::uint64_t seed) {
  const int n = l + 1;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Mat z = Mat::Zero(n, n);
  for (int k = 2; k < n; ++k) {
    const double c = unif(rng); // boost t <-> spatial
    z(1, k) = c;
    z(k, 1) = c;
  }
  for (int j = 2; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const double c = unif(rng); // spatial rotation
      z(j, k) = c;
      z(k, j) = -c;
    }
  return mat_exp(AlgebraElement{z});
}

} // namespace detail

enum class RepConstraint { none, b_neq_pm_bprime };

// A representative g with g e_u = p. With the b_neq_pm_bprime constraint the
// w1-column entries of the t and y rows are pushed apart by seeded stabilizer
// rotations, as the escape-set lemma requires.
inline Representative representative(const AdSPoint& p, RepConstraint c,
                                     std::uint64_t seed = 0) {
  GroupElement g = eta_complete(p.v);
  if (c == RepConstraint::b_neq_pm_bprime) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const double b = g.m(1, 2), bp = g.m(3, 2);
      if (std::abs(b - bp) >= 1e-6 && std::abs(b + bp) >= 1e-6)
        return {g, p};
      GroupElement h =
          detail::random_stabilizer(p.dim(), mix_seed(seed, attempt + 1));
      g.m = eta_complete(p.v).m * h.m;
    }
    throw std::runtime_error("representative: constraint not reached");
  }
  return {g, p};
}

// Representative randomized by a seeded stabilizer rotation (different seeds
// give genuinely different representatives), with the b != +-b' constraint.
inline Representative seeded_representative(const AdSPoint& p,
                                            std::uint64_t seed) {
  const Mat base = eta_complete(p.v).m;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const GroupElement h =
        detail::random_stabilizer(p.dim(), mix_seed(seed, attempt));
    Mat g = base * h.m;
    const double b = g(1, 2), bp = g(3, 2);
    if (std::abs(b - bp) >= 1e-6 && std::abs(b + bp) >= 1e-6)
      return {GroupElement{std::move(g)}, p};
  }
  throw std::runtime_error("seeded_representative: constraint not reached");
}

// Representative with a = a' = 0 (mode a_zero, needs |u| < |x|) or
// c = c' = 0 (mode c_zero, needs |u| > |x|) in the t and y rows, AdS_3 only.
// Built from the column (alpha, 0, beta, 0) with beta = (u/x) alpha and
// alpha^2 - beta^2 = +-1.
enum class SpecialMode { a_zero, c_zero };

inline Representative special_representative(const AdSPoint& p, SpecialMode mode) {
  if (p.dim() != 3)
    throw std::invalid_argument("special_representative: AdS_3 only");
  const double u = p.v(0), x = p.v(2);
  if (std::abs(std::abs(u) - std::abs(x)) <= 1e-12)
    throw std::domain_error(
        "horizon case; special representative not defined");
  if (mode == SpecialMode::a_zero && !(std::abs(u) < std::abs(x)))
    throw std::domain_error("a_zero mode requires |u| < |x|");
  if (mode == SpecialMode::c_zero && !(std::abs(u) > std::abs(x)))
    throw std::domain_error("c_zero mode requires |u| > |x|");
  // u alpha - x beta = 0 with alpha^2 - beta^2 = +1 (a_zero) or -1 (c_zero).
  const double root = std::sqrt(std::abs(x * x - u * u));
  const double alpha = x / root;
  const double beta = u / root;
  Vec col = Vec::Zero(4);
  col(0) = alpha;
  col(2) = beta;
  const int slot = (mode == SpecialMode::a_zero) ? 1 : 2;
  Mat g = detail::complete_columns(3, {{0, p.v}, {slot, col}});
  return {GroupElement{g}, p};
}

// Inclusion AdS_3 -> AdS_4: append a zero coordinate.
inline AdSPoint iota(const AdSPoint& p) {
  if (p.dim() != 3) throw std::invalid_argument("iota: expects AdS_3");
  Vec v = Vec::Zero(5);
  v.head(4) = p.v;
  return {v};
}

// Matrix-level inclusion: pad with a zero row/column and a diagonal 1.
inline GroupElement iota(const GroupElement& g) {
  if (g.dim() != 3) throw std::invalid_argument("iota: expects SO(2,2)");
  Mat m = Mat::Identity(5, 5);
  m.topLeftCorner(4, 4) = g.m;
  return {m};
}

struct SL2Matrix {
  double m11, m12, m21, m22;
  double det() const { return m11 * m22 - m12 * m21; }
};

// psi: [[u+x, y+t],[y-t, u-x]] |-> (u,t,x,y)
inline AdSPoint psi(const SL2Matrix& m) {
  if (std::abs(m.det() - 1.0) > 1e-9)
    throw std::invalid_argument("psi: determinant must be 1");
  Vec v(4);
  v(0) = 0.5 * (m.m11 + m.m22);
  v(1) = 0.5 * (m.m12 - m.m21);
  v(2) = 0.5 * (m.m11 - m.m22);
  v(3) = 0.5 * (m.m12 + m.m21);
  return AdSPoint::checked(std::move(v));
}

inline SL2Matrix psi_inv(const AdSPoint& p) {
  if (p.dim() != 3) throw std::invalid_argument("psi_inv: expects AdS_3");
  if (std::abs(q_norm(p.v) - 1.0) > tol::quadric)
    throw std::invalid_argument("psi_inv: point off quadric");
  return {p.v(0) + p.v(2), p.v(3) + p.v(1), p.v(3) - p.v(1), p.v(0) - p.v(2)};
}

// Null ray g (1, -s, s w)^T; s > 0 is the future.
inline AdSPoint geodesic_point(const Representative& rep, const Vec& w,
                               double s) {
  const int l = rep.point.dim();
  if (w.size() != l - 1)
    throw std::invalid_argument("geodesic_point: direction size");
  if (std::abs(w.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("geodesic_point: direction must be unit");
  Vec c = Vec::Zero(l + 1);
  c(0) = 1.0;
  c(1) = -s;
  c.tail(l - 1) = s * w;
  return AdSPoint::checked(rep.g.m * c);
}

enum class TangentClass { time, space, light };

inline TangentClass tangent_class(const AdSPoint& p, const Vec& x) {
  if (std::abs(q_form(p.v, x)) > 1e-9)
    throw std::invalid_argument("tangent_class: vector not tangent at p");
  const double q = q_norm(x);
  if (q > 1e-9) return TangentClass::time;
  if (q < -1e-9) return TangentClass::space;
  return TangentClass::light;
}

} // namespace btz
