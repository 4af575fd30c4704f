#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rmt/spectra.hpp"

using namespace rmt;
using doctest::Approx;
using std::numbers::pi;

TEST_CASE("self-adjoint spectra come back ascending") {
  MatrixSample s;
  s.structure = MatrixStructure::real_symmetric;
  s.beta = 1;
  s.data = Eigen::MatrixXcd::Zero(2, 2);
  s.data(0, 1) = 1.0;
  s.data(1, 0) = 1.0;
  const auto eig = hermitian_eigenvalues(s);
  REQUIRE(eig.size() == 2);
  CHECK(eig[0] == Approx(-1.0));
  CHECK(eig[1] == Approx(1.0));
}

TEST_CASE("antihermitian matrices are read through multiplication by -i") {
  MatrixSample s;
  s.structure = MatrixStructure::antihermitian;
  s.beta = 2;
  s.data = Eigen::MatrixXcd::Zero(2, 2);
  s.data(0, 1) = 1.0;
  s.data(1, 0) = -1.0;
  const auto eig = hermitian_eigenvalues(s);
  CHECK(eig[0] == Approx(-1.0));
  CHECK(eig[1] == Approx(1.0));
}

TEST_CASE("non-self-adjoint input is rejected") {
  MatrixSample s;
  s.structure = MatrixStructure::hermitian;
  s.beta = 2;
  s.data = Eigen::MatrixXcd::Zero(2, 2);
  s.data(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS(hermitian_eigenvalues(s));
}

TEST_CASE("eigenangles use principal arguments") {
  MatrixSample s;
  s.structure = MatrixStructure::unitary;
  s.beta = 2;
  s.data = Eigen::MatrixXcd::Zero(3, 3);
  s.data(0, 0) = std::polar(1.0, 0.5);
  s.data(1, 1) = std::polar(1.0, -2.5);
  s.data(2, 2) = std::polar(1.0, pi);
  const auto ang = unitary_eigenangles(s);
  REQUIRE(ang.size() == 3);
  CHECK(ang[0] == Approx(-2.5));
  CHECK(ang[1] == Approx(0.5));
  CHECK(ang[2] == Approx(pi));
}

TEST_CASE("singular values come back descending") {
  MatrixSample s;
  s.structure = MatrixStructure::rect_block;
  s.beta = 2;
  s.data = Eigen::MatrixXcd::Zero(3, 2);
  s.data(0, 0) = 3.0;
  s.data(1, 1) = 5.0;
  const auto sv = singular_values(s);
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == Approx(5.0));
  CHECK(sv[1] == Approx(3.0));
}

TEST_CASE("pair collapsing") {
  const auto deduped = dedupe_pairs({2.0, 1.0, 1.0 + 1e-9, 2.0 - 1e-9}, 1e-6);
  REQUIRE(deduped.size() == 2);
  CHECK(deduped[0] == doctest::Approx(1.0));
  CHECK(deduped[1] == doctest::Approx(2.0));
  CHECK_THROWS(dedupe_pairs({1.0, 2.0, 3.0, 4.0}, 1e-6));
  CHECK_THROWS(dedupe_pairs({1.0, 1.0, 2.0}, 1e-6));
}

TEST_CASE("chamber folding by family") {
  const auto a = fold_to_chamber({1.0, 3.0, 2.0}, Chart::linear, RootFamily::A);
  CHECK(a.coords == std::vector<double>{3.0, 2.0, 1.0});

  const auto bc = fold_to_chamber({-3.0, 1.0}, Chart::linear, RootFamily::BC);
  CHECK(bc.coords == std::vector<double>{3.0, 1.0});

  // D keeps the sign parity on the last coordinate
  const auto d1 = fold_to_chamber({-3.0, 1.0}, Chart::linear, RootFamily::D);
  CHECK(d1.coords == std::vector<double>{3.0, -1.0});
  const auto d2 = fold_to_chamber({-3.0, -1.0}, Chart::linear, RootFamily::D);
  CHECK(d2.coords == std::vector<double>{3.0, 1.0});
}

TEST_CASE("angle charts wrap before folding") {
  const auto p =
      fold_to_chamber({1.5 * pi, 0.25}, Chart::angle, RootFamily::BC);
  CHECK(p.coords[0] == Approx(0.5 * pi));
  CHECK(p.coords[1] == Approx(0.25));
}

TEST_CASE("folding is idempotent") {
  for (RootFamily fam : {RootFamily::A, RootFamily::B, RootFamily::C,
                         RootFamily::BC, RootFamily::D}) {
    const auto once = fold_to_chamber({0.4, -2.2, 1.7}, Chart::linear, fam);
    const auto twice = fold_to_chamber(once.coords, Chart::linear, fam);
    CHECK(once.coords == twice.coords);
  }
}

TEST_CASE("positive half of a symmetric spectrum") {
  const auto half = positive_half_spectrum({-2.0, -1.0, 0.0, 1.0, 2.0}, 1, 1e-9);
  CHECK(half == std::vector<double>{2.0, 1.0});
  CHECK_THROWS(positive_half_spectrum({-2.0, 1.0}, 0, 1e-9));
  CHECK_THROWS(positive_half_spectrum({-1.0, 0.5, 1.0}, 1, 1e-9));
}

TEST_CASE("symmetric-space extraction recovers planted angles") {
  // p = g sig g^{-1} sig with g a plain rotation by theta in a 2x2 block has
  // eigenangles ±2·theta
  const double theta = 0.7;
  MatrixSample p;
  p.structure = MatrixStructure::symspace_point;
  p.beta = 2;
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(3, 3);
  g(0, 0) = std::cos(theta);
  g(0, 2) = -std::sin(theta);
  g(2, 0) = std::sin(theta);
  g(2, 2) = std::cos(theta);
  Eigen::MatrixXcd sig = Eigen::MatrixXcd::Identity(3, 3);
  sig(2, 2) = -1.0;
  p.data = g * sig * g.inverse() * sig;
  const auto point = extract_symspace_coords(p, 2, 1);
  REQUIRE(point.coords.size() == 1);
  CHECK(point.coords[0] == Approx(theta));
  CHECK(point.family == RootFamily::BC);
}
