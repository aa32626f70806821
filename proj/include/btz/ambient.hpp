#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "btz/tolerances.hpp"

// Pseudo-Euclidean linear algebra for R^{2,l-1}.
//
// Ambient coordinates are ordered (u, t, x, y, z1, ..., z_{l-3}) and the
// bilinear form is diag(+1, +1, -1, ..., -1). A point of AdS_l is an ambient
// vector with Q(p,p) = 1.
namespace btz {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr int kMinDim = 3;
inline constexpr int kMaxDim = 5;

inline void check_dim(int l) {
  if (l < kMinDim || l > kMaxDim)
    throw std::invalid_argument("dimension l must be in {3,4,5}");
}

// Diagonal signs of the form, length l+1.
inline Vec eta_signs(int l) {
  check_dim(l);
  Vec s = Vec::Constant(l + 1, -1.0);
  s(0) = 1.0;
  s(1) = 1.0;
  return s;
}

inline Mat eta_matrix(int l) { return eta_signs(l).asDiagonal(); }

// Q(v,w) = u_v u_w + t_v t_w - x_v x_w - ...
inline double q_form(const Vec& v, const Vec& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("q_form: dimension mismatch");
  double q = v(0) * w(0) + v(1) * w(1);
  for (int i = 2; i < v.size(); ++i) q -= v(i) * w(i);
  return q;
}

inline double q_norm(const Vec& v) { return q_form(v, v); }

struct GroupElement {
  Mat m;
  int dim() const { return static_cast<int>(m.rows()) - 1; }
};

struct AlgebraElement {
  Mat m;
  int dim() const { return static_cast<int>(m.rows()) - 1; }
};

struct ValidationReport {
  bool ok = false;
  double max_residual = 0.0;
};

enum class ElementKind { group, algebra };

// Max-residual check of the defining invariant: g^T eta g = eta (and det +1)
// for the group, X^T eta + eta X = 0 for the algebra.
inline ValidationReport validate_element(const Mat& m, ElementKind kind) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  const int l = static_cast<int>(m.rows()) - 1;
  const Mat eta = eta_matrix(l);
  ValidationReport rep;
  if (kind == ElementKind::group) {
    const Mat r = m.transpose() * eta * m - eta;
    rep.max_residual = r.cwiseAbs().maxCoeff();
    const double ddet = std::abs(m.determinant() - 1.0);
    rep.ok = rep.max_residual <= tol::group && ddet <= tol::group;
    rep.max_residual = std::max(rep.max_residual, ddet);
  } else {
    const Mat r = m.transpose() * eta + eta * m;
    rep.max_residual = r.cwiseAbs().maxCoeff();
    rep.ok = rep.max_residual <= tol::algebra;
  }
  return rep;
}

namespace detail {

// exp of the restriction to a single 2-plane. The generator has entries only
// at (i,j) and (j,i); equal entries give a boost block, opposite a rotation.
inline bool try_two_plane_exp(const Mat& x, Mat& out) {
  const int n = static_cast<int>(x.rows());
  int pi = -1, pj = -1, count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x(i, j) != 0.0) {
        ++count;
        if (i < j) { pi = i; pj = j; }
      }
  if (count != 2 || pi < 0 || x(pj, pi) == 0.0) return false;
  const double m = x(pi, pj);
  out = Mat::Identity(n, n);
  if (x(pj, pi) == m) {
    out(pi, pi) = std::cosh(m);
    out(pj, pj) = std::cosh(m);
    out(pi, pj) = std::sinh(m);
    out(pj, pi) = std::sinh(m);
    return true;
  }
  if (x(pj, pi) == -m) {
    out(pi, pi) = std::cos(m);
    out(pj, pj) = std::cos(m);
    out(pi, pj) = std::sin(m);
    out(pj, pi) = -std::sin(m);
    return true;
  }
  return false;
}

// Truncated series for nilpotent X with X^k ~ 0, k <= n.
inline bool try_nilpotent_exp(const Mat& x, Mat& out) {
  const int n = static_cast<int>(x.rows());
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  Mat p = x;
  double powscale = scale;
  for (int k = 1; k <= n; ++k) {
    if (p.cwiseAbs().maxCoeff() <= 1e-12 * powscale) {
      out = Mat::Identity(n, n);
      Mat term = Mat::Identity(n, n);
      for (int j = 1; j < k; ++j) {
        term = term * x / static_cast<double>(j);
        out += term;
      }
      return true;
    }
    p = p * x;
    powscale *= scale;
  }
  return false;
}

// Scaling and squaring with a Taylor series on the scaled matrix.
inline Mat series_exp(const Mat& x) {
  const int n = static_cast<int>(x.rows());
  const double nrm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const Mat b = x / std::pow(2.0, squarings);
  Mat sum = Mat::Identity(n, n);
  Mat term = Mat::Identity(n, n);
  for (int j = 1; j <= 40; ++j) {
    term = term * b / static_cast<double>(j);
    sum += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-13 * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

} // namespace detail

inline GroupElement mat_exp(const AlgebraElement& x) {
  Mat out;
  if (detail::try_nilpotent_exp(x.m, out)) return {out};
  if (detail::try_two_plane_exp(x.m, out)) return {out};
  return {detail::series_exp(x.m)};
}

namespace detail {

// Pivoted eta-Gram-Schmidt completion. `fixed` holds already eta-orthonormal
// columns keyed by slot; free slots are filled from the standard basis, at
// each step taking the candidate whose orthogonalized Q has the largest
// magnitude (ties broken by lowest index). Accepted vectors of positive sign
// go to the remaining +slots in order, negative to the -slots. Afterwards the
// representative is pushed into the identity component: column 1 is flipped if
// the (u,t) block has negative determinant, and the last column if det g < 0.
inline Mat complete_columns(int l, const std::vector<std::pair<int, Vec>>& fixed) {
  const int n = l + 1;
  const Vec signs = eta_signs(l);

  std::vector<Vec> acc;
  std::vector<int> acc_slot;
  for (const auto& [slot, col] : fixed) {
    acc.push_back(col);
    acc_slot.push_back(slot);
  }

  std::vector<Vec> free_vecs;
  std::vector<int> free_sign;
  std::vector<bool> used(n, false);

  while (static_cast<int>(acc.size() + free_vecs.size()) < n) {
    int best = -1;
    double best_q = 0.0;
    Vec best_v;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      Vec u = Vec::Zero(n);
      u(i) = 1.0;
      auto ortho = [&](const Vec& c) {
        const double qc = q_form(c, c);
        u -= (q_form(u, c) / qc) * c;
      };
      for (const auto& c : acc) ortho(c);
      for (const auto& c : free_vecs) ortho(c);
      const double q = q_form(u, u);
      if (std::abs(q) > std::abs(best_q) + 1e-14) {
        best = i;
        best_q = q;
        best_v = u;
      }
    }
    if (best < 0 || std::abs(best_q) < 1e-12)
      throw std::runtime_error("eta-completion: degenerate pivot");
    used[best] = true;
    free_vecs.push_back(best_v / std::sqrt(std::abs(best_q)));
    free_sign.push_back(best_q > 0 ? 1 : -1);
  }

  // Slot assignment by sign.
  std::vector<bool> taken(n, false);
  for (int s : acc_slot) taken[s] = true;
  Mat g = Mat::Zero(n, n);
  for (size_t k = 0; k < acc.size(); ++k) g.col(acc_slot[k]) = acc[k];
  for (size_t k = 0; k < free_vecs.size(); ++k) {
    const int want = free_sign[k];
    for (int s = 0; s < n; ++s) {
      if (taken[s]) continue;
      if ((signs(s) > 0 ? 1 : -1) == want) {
        g.col(s) = free_vecs[k];
        taken[s] = true;
        break;
      }
    }
  }

  // Identity component: the projection of the (u,t) plane must preserve
  // orientation, otherwise the future of null rays would flip.
  if (g.topLeftCorner(2, 2).determinant() < 0) g.col(1) = -g.col(1);
  if (g.determinant() < 0) g.col(n - 1) = -g.col(n - 1);
  return g;
}

} // namespace detail

// Completes a quadric point to a group element whose first column is the
// point, exactly.
inline GroupElement eta_complete(const Vec& v) {
  const int l = static_cast<int>(v.size()) - 1;
  check_dim(l);
  const double q = q_norm(v);
  if (q <= 0.0 || std::abs(q - 1.0) > tol::quadric)
    throw std::invalid_argument("eta_complete: not on quadric");
  return {detail::complete_columns(l, {{0, v}})};
}

// Seeded raw sampler on the quadric: spatial components i.i.d. N(0, sigma),
// the (u,t) pair on the circle of the radius forced by Q(p,p)=1.
inline Vec random_on_quadric(int l, std::uint64_t seed, double sigma) {
  check_dim(l);
  if (sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");
  std::mt19937_64 rng(seed);
  Vec p = Vec::Zero(l + 1);
  double s2 = 0.0;
  if (sigma > 0.0) {
    std::normal_distribution<double> gauss(0.0, sigma);
    for (int i = 2; i <= l; ++i) {
      p(i) = gauss(rng);
      s2 += p(i) * p(i);
    }
  }
  const double r = std::sqrt(1.0 + s2);
  std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
  const double phi = unif(rng);
  p(0) = r * std::cos(phi);
  p(1) = r * std::sin(phi);
  return p;
}

} // namespace btz
