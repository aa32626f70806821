#pragma once

#include <stdexcept>
#include <vector>

#include "btz/ambient.hpp"

// Concrete generators and decompositions of so(2, l-1): the abelian pair
// J1, J2, the restricted-root vectors X_{alpha beta}, the cone generators
// E(w), the involutions sigma and theta, and the Iwasawa bases A, N, Nbar.
namespace btz {

enum class GeneratorName { J1, J2 };

// J1 boosts the (t,y) plane and annihilates the base point e_u; J2 boosts
// (u,x) and moves it. Together they span the maximal abelian A.
inline AlgebraElement generator(GeneratorName name, int l) {
  check_dim(l);
  Mat m = Mat::Zero(l + 1, l + 1);
  if (name == GeneratorName::J1) {
    m(1, 3) = 1.0;
    m(3, 1) = 1.0;
  } else {
    m(0, 2) = 1.0;
    m(2, 0) = 1.0;
  }
  return {m};
}

struct RootLabel {
  int alpha = 0; // ad(J1) eigenvalue
  int beta = 0;  // ad(J2) eigenvalue
};

inline bool label_valid(const RootLabel& lab, int l) {
  if (lab.alpha < -1 || lab.alpha > 1 || lab.beta < -1 || lab.beta > 1)
    return false;
  if (lab.alpha == 0 && lab.beta == 0) return false;
  if (l == 3 && (lab.alpha == 0 || lab.beta == 0)) return false;
  return true;
}

// Rank-2 bivector v (eta w)^T - w (eta v)^T on the ad-eigendirections
//   v_beta = e_u + beta e_x   (e_{z1+zoff} when beta = 0)
//   w_alpha = e_t + alpha e_y (e_{z1+zoff} when alpha = 0)
// normalized so that exp(alpha X_{0+}) reproduces the closed-form lateral
// action on (u,t,x,y,0) exactly. zoff selects the multiplicity direction of
// the zero-weight spaces for l = 5.
inline AlgebraElement root_vector(const RootLabel& lab, int l, int zoff = 0) {
  check_dim(l);
  if (!label_valid(lab, l))
    throw std::invalid_argument("root_vector: invalid label for dimension");
  const int zmax = (lab.alpha == 0 || lab.beta == 0) ? l - 4 : 0;
  if (zoff < 0 || zoff > zmax)
    throw std::invalid_argument("root_vector: zoff out of range");
  const int n = l + 1;
  Vec v = Vec::Zero(n), w = Vec::Zero(n);
  if (lab.beta != 0) {
    v(0) = 1.0;
    v(2) = static_cast<double>(lab.beta);
  } else {
    v(4 + zoff) = 1.0;
  }
  if (lab.alpha != 0) {
    w(1) = 1.0;
    w(3) = static_cast<double>(lab.alpha);
  } else {
    w(4 + zoff) = 1.0;
  }
  const Vec ev = eta_signs(l).cwiseProduct(v);
  const Vec ew = eta_signs(l).cwiseProduct(w);
  return {w * ev.transpose() - v * ew.transpose()};
}

// E(w): the nilpotent cone at the base point; first row (0, 1, w), first
// column (0, -1, w)^T, E(w)^3 = 0.
inline AlgebraElement cone_generator(const Vec& w) {
  const int l = static_cast<int>(w.size()) + 1;
  check_dim(l);
  if (std::abs(w.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("cone_generator: direction must be unit");
  Mat m = Mat::Zero(l + 1, l + 1);
  m(0, 1) = 1.0;
  m(1, 0) = -1.0;
  for (int i = 0; i < w.size(); ++i) {
    m(0, 2 + i) = w(i);
    m(2 + i, 0) = w(i);
  }
  return {m};
}

// k_theta = diag(-1,-1,1,...,1); its conjugation is the Cartan involution.
inline GroupElement k_theta(int l) {
  check_dim(l);
  Vec d = Vec::Ones(l + 1);
  d(0) = -1.0;
  d(1) = -1.0;
  return {Mat(d.asDiagonal())};
}

enum class InvolutionKind { sigma, theta };

// sigma(X) = S X S with S = diag(-1,1,...,1) fixes the stabilizer algebra
// so(1,l-1); theta(X) = k_theta X k_theta is the Cartan involution.
inline AlgebraElement involution(InvolutionKind kind, const AlgebraElement& x) {
  const int l = x.dim();
  Vec d = Vec::Ones(l + 1);
  if (kind == InvolutionKind::sigma) {
    d(0) = -1.0;
  } else {
    d(0) = -1.0;
    d(1) = -1.0;
  }
  const Mat s = d.asDiagonal();
  return {s * x.m * s};
}

struct IwasawaBasis {
  int l = 0;
  std::vector<AlgebraElement> A;    // {J1, J2}
  std::vector<AlgebraElement> N;    // positive restricted-root vectors
  std::vector<AlgebraElement> Nbar; // theta(N)
};

// Positivity is lexicographic in (alpha, beta): alpha > 0, or alpha = 0 and
// beta > 0. This is the ordering under which N preserves the branch t = y of
// the singularity (and Nbar the branch t = -y), and it keeps X_{0+} in N as
// the lateral-class theorem requires.
inline IwasawaBasis iwasawa_basis(int l) {
  check_dim(l);
  IwasawaBasis b;
  b.l = l;
  b.A = {generator(GeneratorName::J1, l), generator(GeneratorName::J2, l)};
  std::vector<std::pair<RootLabel, int>> pos;
  pos.push_back({{+1, +1}, 0});
  pos.push_back({{+1, -1}, 0});
  if (l >= 4) {
    for (int z = 0; z <= l - 4; ++z) {
      pos.push_back({{0, +1}, z});
      pos.push_back({{+1, 0}, z});
    }
  }
  for (const auto& [lab, z] : pos) {
    b.N.push_back(root_vector(lab, l, z));
    b.Nbar.push_back(root_vector({-lab.alpha, -lab.beta}, l, z));
  }
  return b;
}

} // namespace btz
