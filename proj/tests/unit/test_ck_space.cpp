#include "ckgeo/ck_space.hpp"
#include "ckgeo/errors.hpp"
#include "ckgeo/kappa_trig.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ckgeo;

namespace {

const KappaPair kAllPairs[] = {{1, 1}, {0, 1}, {-1, 1}, {1, 0}, {0, 0}, {-1, 0}, {1, -1}, {0, -1}, {-1, -1}};

GeodesicPolarCoords sample(std::mt19937_64& rng, KappaPair kp) {
  const double r = testing::uniform(rng, 0.2, 1.2);
  const double theta = kp.kappa2 < 0 ? testing::uniform(rng, 0.1, 1.5) : testing::uniform(rng, 0.3, 2.8);
  return {r, theta, {testing::uniform(rng, 0.1, 2 * std::numbers::pi - 0.1)}};
}

Eigen::VectorXd ambient(const GeodesicPolarCoords& c, KappaPair kp) {
  const auto p = embed(c, kp);
  return Eigen::Map<const Eigen::VectorXd>(p.x.data(), static_cast<Eigen::Index>(p.x.size()));
}

// Central-difference Jacobian of embed, independent of embedding_jacobian.
Eigen::MatrixXd numeric_embedding_jacobian(const GeodesicPolarCoords& c, KappaPair kp) {
  const Point y = c.to_point();
  Eigen::MatrixXd jac(y.size() + 1, y.size());
  for (Eigen::Index k = 0; k < y.size(); ++k) {
    const double h = 1e-4;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(y.size() + 1);
    const double offsets[] = {-2, -1, 1, 2};
    const double weights[] = {1, -8, 8, -1};
    for (int s = 0; s < 4; ++s) {
      Point yy = y;
      yy[k] += offsets[s] * h;
      acc += weights[s] * ambient(GeodesicPolarCoords::from_point(yy), kp);
    }
    jac.col(k) = acc / (12 * h);
  }
  return jac;
}

}  // namespace

TEST_CASE("embedding lands on the Cayley-Klein sphere") {
  auto rng = testing::make_rng(10);
  for (const auto kp : kAllPairs) {
    for (int i = 0; i < 50; ++i) CHECK(std::abs(sphere_constraint_residual(embed(sample(rng, kp), kp), kp)) < 1e-12);
  }
  const auto origin = embed({0.0, 0.4, {1.0}}, {1, 1});
  CHECK(origin.x == std::vector<double>{1.0, 0.0, 0.0, 0.0});
  const auto quarter = embed({std::numbers::pi / 2, 0.0, {0.0}}, {1, 1});
  CHECK(quarter.x[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(quarter.x[1] == doctest::Approx(1.0));
  CHECK(quarter.x[2] == 0.0);
  CHECK(quarter.x[3] == 0.0);
}

TEST_CASE("radial distance is the geodesic distance from the origin") {
  // x0 = C_k1(r) for every kappa, so cos/cosh of the distance is read off directly.
  for (double r : {0.3, 1.1}) {
    CHECK(embed({r, 0.5, {0.2}}, {1, 1}).x[0] == doctest::Approx(std::cos(r)));
    CHECK(embed({r, 0.5, {0.2}}, {-1, -1}).x[0] == doctest::Approx(std::cosh(r)));
    CHECK(embed({r, 0.5, {0.2}}, {0, 1}).x[1] == doctest::Approx(r * std::cos(0.5)));
  }
}

TEST_CASE("embedding domain errors") {
  CHECK_THROWS_AS(embed({-0.1, 0.3, {0.2}}, {1, 1}), DomainError);
  CHECK_THROWS_AS(embed({std::numbers::pi, 0.3, {0.2}}, {1, 1}), DomainError);
  CHECK_NOTHROW(embed({5.0, 0.3, {0.2}}, {-1, 1}));
  CHECK_THROWS_AS(embed({1.6, 0.3, {0.2}}, {4, 1}), DomainError);
}

TEST_CASE("analytic embedding Jacobian agrees with finite differences") {
  auto rng = testing::make_rng(11);
  for (const auto kp : kAllPairs) {
    for (int i = 0; i < 20; ++i) {
      const auto c = sample(rng, kp);
      CHECK(testing::max_abs(embedding_jacobian(c, kp) - numeric_embedding_jacobian(c, kp)) < 1e-9);
    }
  }
}

TEST_CASE("polar metric matches the written line element") {
  const auto g = metric_polar({1, 1}, 3);
  const Point y = Eigen::Vector3d(0.7, 1.1, 0.4);
  const Eigen::MatrixXd m = g(y);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 1) == doctest::Approx(std::pow(std::sin(0.7), 2)));
  CHECK(m(2, 2) == doctest::Approx(std::pow(std::sin(0.7) * std::sin(1.1), 2)));
  CHECK(testing::max_abs(m - Eigen::MatrixXd(m.diagonal().asDiagonal())) == 0.0);

  const Eigen::MatrixXd mink = metric_polar({0, -1}, 3)(y);
  CHECK(mink(1, 1) == doctest::Approx(-0.49));
  CHECK(mink(2, 2) == doctest::Approx(-0.49 * std::pow(std::sinh(1.1), 2)));

  const auto nh = metric_polar({1, 0}, 3);
  CHECK(nh.degenerate());
  CHECK(nh(y)(1, 1) == 0.0);
  CHECK_FALSE(metric_polar({1, 1}, 3).degenerate());
}

TEST_CASE("higher-dimensional polar metric nests the angular factors") {
  const auto g = metric_polar({-1, 1}, 4);
  CHECK(g.dimension() == 4);
  Point y(4);
  y << 0.5, 0.9, 1.2, 0.3;
  const Eigen::MatrixXd m = g(y);
  const double s1 = std::sinh(0.5);
  CHECK(m(3, 3) == doctest::Approx(s1 * s1 * std::pow(std::sin(0.9) * std::sin(1.2), 2)));
}

TEST_CASE("ambient pullback equals the polar metric") {
  auto rng = testing::make_rng(12);
  for (const auto kp : kAllPairs) {
    if (kp.kappa1 == 0.0) {
      CHECK_THROWS_AS(metric_ambient_pullback(kp, 3), FlatCaseError);
      continue;
    }
    const auto pull = metric_ambient_pullback(kp, 3);
    const auto polar = metric_polar(kp, 3);
    Eigen::VectorXd eta(4);
    eta << 1.0, kp.kappa1, kp.kappa1 * kp.kappa2, kp.kappa1 * kp.kappa2;
    double worst_library = 0.0;
    double worst_oracle = 0.0;
    for (int i = 0; i < 200; ++i) {
      const auto c = sample(rng, kp);
      const Point y = c.to_point();
      worst_library = std::max(worst_library, testing::max_abs(pull(y) - polar(y)));
      const Eigen::MatrixXd jac = numeric_embedding_jacobian(c, kp);
      const Eigen::MatrixXd oracle = jac.transpose() * eta.asDiagonal() * jac / kp.kappa1;
      worst_oracle = std::max(worst_oracle, testing::max_abs(oracle - polar(y)));
    }
    CHECK(worst_library < 1e-12);
    CHECK(worst_oracle < 1e-8);
  }
}

TEST_CASE("chart guard") {
  CHECK(polar_chart_contains({1, 1}, Eigen::Vector3d(0.5, 1.0, 0.3)));
  CHECK_FALSE(polar_chart_contains({1, 1}, Eigen::Vector3d(0.0, 1.0, 0.3)));
  CHECK_FALSE(polar_chart_contains({1, 1}, Eigen::Vector3d(0.5, 0.0, 0.3)));
  CHECK_FALSE(polar_chart_contains({1, 1}, Eigen::Vector3d(0.5, std::numbers::pi, 0.3)));
  CHECK_FALSE(polar_chart_contains({1, 1}, Eigen::Vector3d(std::numbers::pi, 1.0, 0.3)));
  CHECK(polar_chart_contains({-1, -1}, Eigen::Vector3d(3.0, 4.0, 0.3)));
  CHECK_FALSE(polar_chart_contains({-1, -1}, Eigen::Vector3d(3.0, 60.0, 0.3)));
  CHECK_FALSE(metric_polar({1, 1}, 3).in_domain(Eigen::Vector3d(1e-9, 1.0, 0.3)));
}

TEST_CASE("space classification") {
  CHECK(classify_space({1, 1}) == "spherical");
  CHECK(classify_space({0, 1}) == "euclidean");
  CHECK(classify_space({-1, 1}) == "hyperbolic");
  CHECK(classify_space({1, 0}) == "oscillating-NH");
  CHECK(classify_space({0, 0}) == "galilean");
  CHECK(classify_space({-1, 0}) == "expanding-NH");
  CHECK(classify_space({1, -1}) == "anti-de-sitter");
  CHECK(classify_space({0, -1}) == "minkowskian");
  CHECK(classify_space({-1, -1}) == "de-sitter");
  CHECK(classify_space({0.3, -7}) == "anti-de-sitter");
}

TEST_CASE("symbolic forms") {
  CHECK(metric_diagonal_symbolic({1, 1}) == std::vector<std::string>{"1", "sin^2 r", "sin^2 r sin^2 theta"});
  CHECK(metric_diagonal_symbolic({0, -1}) == std::vector<std::string>{"1", "-r^2", "-r^2 sinh^2 theta"});
  CHECK(metric_diagonal_symbolic({-1, 0}) == std::vector<std::string>{"1", "0", "0"});
  CHECK(line_element_symbolic({-1, 1}) == "dr^2 + sinh^2 r (dtheta^2 + sin^2 theta dphi^2)");
  CHECK(line_element_symbolic({1, 0}) == "dr^2");
  CHECK(normalize_symbolic("{\\rm d} r^2 + \\sin^2 r \\left( {\\rm d}\\theta^2 + \\sin^2\\theta\\,{\\rm d}\\phi^2 \\right)") ==
        normalize_symbolic(line_element_symbolic({1, 1})));
  CHECK(normalize_symbolic(" A * B ") == "ab");
}

TEST_CASE("catalog of the nine spaces") {
  const auto cat = space_catalog();
  REQUIRE(cat.size() == 9);
  const char* names[] = {"spherical",    "euclidean", "hyperbolic",     "oscillating-NH", "galilean",
                         "expanding-NH", "anti-de-sitter", "minkowskian", "de-sitter"};
  const char* algebras[] = {"so(4)", "iso(3)", "so(3,1)", "t4⊙(so(2)⊕so(2))", "iiso(2)", "t4⊙(so(1,1)⊕so(2))",
                            "so(2,2)", "iso(2,1)", "so(3,1)"};
  for (std::size_t i = 0; i < 9; ++i) {
    CAPTURE(i);
    CHECK(cat[i].name == names[i]);
    CHECK(cat[i].algebra == algebras[i]);
    CHECK(cat[i].kappa.kappa1 == kAllPairs[i].kappa1);
    CHECK(cat[i].kappa.kappa2 == kAllPairs[i].kappa2);
    CHECK(cat[i].k_sectional == cat[i].kappa.kappa1);
    CHECK(cat[i].k_scalar == 6 * cat[i].kappa.kappa1);
    CHECK(cat[i].degenerate == (cat[i].kappa.kappa2 == 0.0));
  }
  CHECK(cat[0].symbol == "S^3");
  CHECK(cat[8].symbol == "dS^{2+1}");
}
