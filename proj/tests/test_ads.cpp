#include <catch2/catch_amalgamated.hpp>

#include "btz/ads.hpp"
#include "btz/lie.hpp"
#include "btz/rng.hpp"

using namespace btz;

namespace {
Vec make_vec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}
} // namespace

TEST_CASE("project examples", "[ads]") {
  CHECK((project(GroupElement{Mat::Identity(4, 4)}).v - base_point(3).v)
            .cwiseAbs()
            .maxCoeff() == 0.0);

  const double eta = 0.4;
  const AdSPoint boosted =
      project(mat_exp(AlgebraElement{eta * generator(GeneratorName::J2, 4).m}));
  CHECK(boosted.v(0) == Catch::Approx(std::cosh(eta)).margin(1e-14));
  CHECK(boosted.v(2) == Catch::Approx(std::sinh(eta)).margin(1e-14));
  CHECK(boosted.v(1) == 0.0);

  const AdSPoint flipped = project(k_theta(3));
  CHECK(flipped.v(0) == -1.0);
}

TEST_CASE("representative contract", "[ads]") {
  for (int l = 3; l <= 5; ++l)
    for (int i = 0; i < 50; ++i) {
      const AdSPoint p = random_point(l, mix_seed(31, l * 100 + i), 1.0);
      const Representative plain = representative(p, RepConstraint::none);
      CHECK((plain.g.m.col(0) - p.v).cwiseAbs().maxCoeff() <= 1e-9);
      CHECK(validate_element(plain.g.m, ElementKind::group).ok);

      const Representative con =
          representative(p, RepConstraint::b_neq_pm_bprime, 17);
      const double b = con.g.m(1, 2), bp = con.g.m(3, 2);
      CHECK(std::abs(b - bp) >= 1e-6);
      CHECK(std::abs(b + bp) >= 1e-6);
      CHECK((con.g.m.col(0) - p.v).cwiseAbs().maxCoeff() <= 1e-9);
    }
  // e_u with no constraint is the identity
  const Representative id = representative(base_point(3), RepConstraint::none);
  CHECK((id.g.m - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("seeded representatives vary with the seed but fix the point",
          "[ads]") {
  const AdSPoint p = random_point(4, 77, 1.0);
  const Representative r1 = seeded_representative(p, 1);
  const Representative r2 = seeded_representative(p, 2);
  CHECK((r1.g.m.col(0) - p.v).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK((r2.g.m.col(0) - p.v).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK((r1.g.m - r2.g.m).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("special representatives zero the requested row entries", "[ads]") {
  // |u| < |x| case
  const AdSPoint pa = AdSPoint::checked(make_vec({0.0, std::sqrt(2.0), 1.0, 0.0}));
  const Representative ra = special_representative(pa, SpecialMode::a_zero);
  CHECK(std::abs(ra.g.m(1, 1)) <= 1e-12);
  CHECK(std::abs(ra.g.m(3, 1)) <= 1e-12);
  CHECK(validate_element(ra.g.m, ElementKind::group).ok);
  CHECK((ra.g.m.col(0) - pa.v).cwiseAbs().maxCoeff() <= 1e-12);

  // |u| > |x| case
  const AdSPoint pc = AdSPoint::checked(make_vec({1.0, 1.0, 0.0, -1.0}));
  const Representative rc = special_representative(pc, SpecialMode::c_zero);
  CHECK(std::abs(rc.g.m(1, 2)) <= 1e-12);
  CHECK(std::abs(rc.g.m(3, 2)) <= 1e-12);
  CHECK(validate_element(rc.g.m, ElementKind::group).ok);

  // horizon case u = +-x is rejected
  const AdSPoint ph = AdSPoint::checked(make_vec({1.0, 1.0, 1.0, 0.0}));
  CHECK_THROWS_AS(special_representative(ph, SpecialMode::a_zero),
                  std::domain_error);
  // wrong mode for the region
  CHECK_THROWS_AS(special_representative(pa, SpecialMode::c_zero),
                  std::domain_error);
}

TEST_CASE("iota on points and matrices", "[ads]") {
  const AdSPoint p = AdSPoint::checked(make_vec({1.0, 0.0, 0.0, 0.0}));
  const AdSPoint ip = iota(p);
  REQUIRE(ip.dim() == 4);
  CHECK(ip.v(4) == 0.0);
  CHECK(q_norm(ip.v) == Catch::Approx(q_norm(p.v)).margin(1e-15));

  for (int i = 0; i < 50; ++i) {
    const AdSPoint q = random_point(3, mix_seed(41, i), 1.0);
    const GroupElement g = eta_complete(q.v);
    // iota(g) e_u = iota(g e_u)
    const Vec lhs = project(iota(g)).v;
    const Vec rhs = iota(project(g)).v;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
    // singularity invariance under iota
    CHECK(is_singular(iota(q)) == is_singular(q));
  }
}

TEST_CASE("psi chart", "[ads]") {
  const AdSPoint id = psi({1.0, 0.0, 0.0, 1.0});
  CHECK((id.v - base_point(3).v).cwiseAbs().maxCoeff() <= 1e-14);

  const double lam = 0.9;
  const AdSPoint diag = psi({std::exp(lam), 0.0, 0.0, std::exp(-lam)});
  CHECK(diag.v(0) == Catch::Approx(std::cosh(lam)).margin(1e-13));
  CHECK(diag.v(2) == Catch::Approx(std::sinh(lam)).margin(1e-13));
  CHECK(diag.v(1) == 0.0);
  CHECK(diag.v(3) == 0.0);

  std::mt19937_64 rng(6);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    SL2Matrix m{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    const double d = m.det();
    if (d <= 1e-3) continue;
    const double r = std::sqrt(d);
    m = {m.m11 / r, m.m12 / r, m.m21 / r, m.m22 / r};
    const AdSPoint p = psi(m);
    CHECK(std::abs(q_norm(p.v) - 1.0) <= 1e-12);
    const SL2Matrix back = psi_inv(p);
    CHECK(std::abs(back.m11 - m.m11) <= 1e-12);
    CHECK(std::abs(back.m12 - m.m12) <= 1e-12);
    CHECK(std::abs(back.m21 - m.m21) <= 1e-12);
    CHECK(std::abs(back.m22 - m.m22) <= 1e-12);
  }

  CHECK_THROWS_AS(psi({2.0, 0.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("is_singular examples", "[ads]") {
  CHECK(is_singular(base_point(3)));                                  // t=y=0
  CHECK_FALSE(is_singular(AdSPoint::checked(make_vec({0, 1, 0, 0})))); // t^2-y^2=1
  CHECK(is_singular(AdSPoint::checked(make_vec({-1.0, 0.0, 0.0, 0.0}))));
}

TEST_CASE("geodesic points", "[ads]") {
  const Representative id{GroupElement{Mat::Identity(4, 4)}, base_point(3)};
  Vec w(2);
  w << 0.6, 0.8;
  const double s = 2.5;
  const AdSPoint g = geodesic_point(id, w, s);
  CHECK(g.v(0) == 1.0);
  CHECK(g.v(1) == -s);
  CHECK(g.v(2) == Catch::Approx(s * 0.6).margin(1e-14));
  CHECK(g.v(3) == Catch::Approx(s * 0.8).margin(1e-14));

  const AdSPoint at_zero = geodesic_point(id, w, 0.0);
  CHECK((at_zero.v - id.point.v).cwiseAbs().maxCoeff() == 0.0);

  // lemma representative of (0,t,0,0,z): T(s) = t - s z w3, Y(s) = s w2
  const double t = std::sqrt(2.0), z = 1.0;
  Mat lem = Mat::Zero(5, 5);
  lem(0, 1) = 1.0;
  lem(1, 0) = t;
  lem(1, 4) = -z;
  lem(2, 2) = 1.0;
  lem(3, 3) = 1.0;
  lem(4, 0) = z;
  lem(4, 4) = -t;
  const AdSPoint lp = AdSPoint::checked(make_vec({0.0, t, 0.0, 0.0, z}));
  const Representative lrep{GroupElement{lem}, lp};
  Vec w3(3);
  w3 << 0.0, 0.6, 0.8;
  const AdSPoint lg = geodesic_point(lrep, w3, 1.25);
  CHECK(lg.v(1) == Catch::Approx(t - 1.25 * z * 0.8).margin(1e-13));
  CHECK(lg.v(3) == Catch::Approx(1.25 * 0.6).margin(1e-13));
}

TEST_CASE("geodesics are affine in s", "[ads]") {
  for (int i = 0; i < 50; ++i) {
    const AdSPoint p = random_point(4, mix_seed(51, i), 1.0);
    const Representative rep = representative(p, RepConstraint::none);
    std::mt19937_64 rng(mix_seed(52, i));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec w(3);
    for (int k = 0; k < 3; ++k) w(k) = gauss(rng);
    w.normalize();
    const double s1 = gauss(rng), s2 = gauss(rng);
    const Vec mid = rep.g.m * make_vec({1.0, -(s1 + s2) / 2.0,
                                        (s1 + s2) / 2.0 * w(0),
                                        (s1 + s2) / 2.0 * w(1),
                                        (s1 + s2) / 2.0 * w(2)});
    const Vec sum = geodesic_point(rep, w, s1).v + geodesic_point(rep, w, s2).v;
    CHECK((sum - 2.0 * mid).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("tangent classification at the base point", "[ads]") {
  const AdSPoint eu = base_point(3);
  CHECK(tangent_class(eu, make_vec({0, 1, 0, 0})) == TangentClass::time);
  CHECK(tangent_class(eu, make_vec({0, 0, 1, 0})) == TangentClass::space);
  CHECK(tangent_class(eu, make_vec({0, -1, 0.6, 0.8})) == TangentClass::light);
  CHECK_THROWS_AS(tangent_class(eu, make_vec({1, 0, 0, 0})),
                  std::invalid_argument);
}
