#include <catch2/catch_amalgamated.hpp>

#include "btz/ads.hpp"
#include "btz/ambient.hpp"
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

TEST_CASE("q_form on basis and sample vectors", "[ambient]") {
  Vec eu = Vec::Zero(4);
  eu(0) = 1.0;
  CHECK(q_form(eu, eu) == 1.0);

  const Vec b = make_vec({0.0, std::sqrt(2.0), 0.0, 1.0});
  CHECK(q_form(b, b) == Catch::Approx(1.0).margin(1e-15));

  const Vec ones = make_vec({1.0, 1.0, 1.0, 1.0});
  CHECK(q_form(ones, ones) == 0.0);

  CHECK_THROWS_AS(q_form(eu, Vec::Zero(5)), std::invalid_argument);
}

TEST_CASE("q_form is symmetric and bilinear", "[ambient]") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Vec v(5), w(5), z(5);
    for (int i = 0; i < 5; ++i) {
      v(i) = gauss(rng);
      w(i) = gauss(rng);
      z(i) = gauss(rng);
    }
    CHECK(q_form(v, w) == Catch::Approx(q_form(w, v)).margin(1e-12));
    CHECK(q_form(v, w + z) ==
          Catch::Approx(q_form(v, w) + q_form(v, z)).margin(1e-12));
  }
}

TEST_CASE("random_point determinism and quadric membership", "[ambient]") {
  for (int l = 3; l <= 5; ++l) {
    const AdSPoint a = random_point(l, 42, 1.5);
    const AdSPoint b = random_point(l, 42, 1.5);
    CHECK((a.v - b.v).cwiseAbs().maxCoeff() == 0.0);
  }
  // sigma = 0 forces the unit circle in the (u,t) plane
  const AdSPoint c = random_point(3, 9, 0.0);
  CHECK(c.v.tail(2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(c.v(0) * c.v(0) + c.v(1) * c.v(1) == Catch::Approx(1.0).margin(1e-12));
  for (int i = 0; i < 1000; ++i) {
    const AdSPoint p = random_point(4, mix_seed(3, i), 2.0);
    CHECK(std::abs(q_norm(p.v) - 1.0) <= 1e-12);
  }
}

TEST_CASE("eta_complete produces representatives", "[ambient]") {
  Vec eu = Vec::Zero(4);
  eu(0) = 1.0;
  const GroupElement id = eta_complete(eu);
  CHECK((id.m - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-14);

  for (const Vec& v : {make_vec({0.0, 1.0, 0.0, 0.0}),
                       make_vec({0.0, std::sqrt(2.0), 0.0, 1.0})}) {
    const GroupElement g = eta_complete(v);
    CHECK((g.m.col(0) - v).cwiseAbs().maxCoeff() == 0.0); // exact first column
    const ValidationReport rep = validate_element(g.m, ElementKind::group);
    CHECK(rep.ok);
    CHECK(rep.max_residual <= 1e-12);
    CHECK(g.m.determinant() == Catch::Approx(1.0).margin(1e-9));
  }

  CHECK_THROWS_AS(eta_complete(make_vec({0.0, 0.0, 1.0, 0.0})),
                  std::invalid_argument);
}

TEST_CASE("group elements preserve the form", "[ambient]") {
  for (int i = 0; i < 100; ++i) {
    const AdSPoint p = random_point(4, mix_seed(11, i), 1.0);
    const GroupElement g = eta_complete(p.v);
    std::mt19937_64 rng(mix_seed(12, i));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v(5), w(5);
    for (int k = 0; k < 5; ++k) {
      v(k) = gauss(rng);
      w(k) = gauss(rng);
    }
    const double before = q_form(v, w);
    const double after = q_form(g.m * v, g.m * w);
    CHECK(std::abs(after - before) <= 1e-9 * (1.0 + std::abs(before)));
  }
}

TEST_CASE("mat_exp closed forms", "[ambient]") {
  const GroupElement z = mat_exp(AlgebraElement{Mat::Zero(4, 4)});
  CHECK((z.m - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  // boost block in the (t,y) plane
  const double eta = 0.7;
  const AlgebraElement j1 = generator(GeneratorName::J1, 3);
  const GroupElement b = mat_exp(AlgebraElement{eta * j1.m});
  CHECK(b.m(1, 1) == Catch::Approx(std::cosh(eta)).margin(1e-14));
  CHECK(b.m(3, 3) == Catch::Approx(std::cosh(eta)).margin(1e-14));
  CHECK(b.m(1, 3) == Catch::Approx(std::sinh(eta)).margin(1e-14));
  CHECK(b.m(3, 1) == Catch::Approx(std::sinh(eta)).margin(1e-14));
  CHECK(b.m(0, 0) == 1.0);
  CHECK(b.m(2, 2) == 1.0);

  // nilpotent cone generator: exp(s E(w)) e_u = (1, -s, s w)
  Vec w(3);
  w << 0.6, 0.0, 0.8;
  const double s = 1.3;
  const Mat e = cone_generator(w).m;
  Vec eu = Vec::Zero(5);
  eu(0) = 1.0;
  const Vec img = mat_exp(AlgebraElement{s * e}).m * eu;
  Vec expect(5);
  expect << 1.0, -s, s * 0.6, 0.0, s * 0.8;
  CHECK((img - expect).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("mat_exp of X_{0+} matches the closed-form lateral action",
          "[ambient]") {
  const AlgebraElement x0p = root_vector({0, +1}, 4, 0);
  const double alpha = 1.0;
  Vec base(5);
  base << 1.0, 1.0, -1.0, 0.0, 0.0; // Q = 1 + 1 - 1 = 1
  const Vec img = mat_exp(AlgebraElement{alpha * x0p.m}).m * base;
  Vec expect(5);
  expect << 2.0, 1.0, 0.0, 0.0, 2.0;
  CHECK((img - expect).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("mat_exp inverse identity for shipped generators", "[ambient]") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  for (int l = 3; l <= 5; ++l) {
    std::vector<AlgebraElement> gens = {generator(GeneratorName::J1, l),
                                        generator(GeneratorName::J2, l)};
    const IwasawaBasis basis = iwasawa_basis(l);
    gens.insert(gens.end(), basis.N.begin(), basis.N.end());
    gens.insert(gens.end(), basis.Nbar.begin(), basis.Nbar.end());
    for (const auto& x : gens) {
      const double c = unif(rng);
      const Mat prod = mat_exp(AlgebraElement{c * x.m}).m *
                       mat_exp(AlgebraElement{-c * x.m}).m;
      CHECK((prod - Mat::Identity(l + 1, l + 1)).cwiseAbs().maxCoeff() <=
            1e-11);
    }
  }
}

TEST_CASE("validate_element examples", "[ambient]") {
  CHECK(validate_element(Mat::Identity(4, 4), ElementKind::group).ok);
  CHECK(validate_element(Mat::Identity(4, 4), ElementKind::group).max_residual ==
        0.0);
  CHECK(validate_element(generator(GeneratorName::J1, 3).m,
                         ElementKind::algebra)
            .ok);
  Mat bad = Mat::Identity(4, 4);
  bad(0, 0) = 2.0;
  CHECK_FALSE(validate_element(bad, ElementKind::group).ok);
  CHECK_THROWS_AS(validate_element(Mat::Zero(3, 4), ElementKind::group),
                  std::invalid_argument);
}
