#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cic/io.hpp"
#include "cic/rng.hpp"

using namespace cic;

TEST_CASE("field csv round-trips exactly") {
  Rng rng(51);
  std::vector<double> a(16);
  for (double& v : a) v = rng.uniform(-1.0, 1.0);
  a[3] = 1.0 / 3.0;
  a[7] = 1e-300;
  const SpectralField f{std::move(a)};

  std::stringstream ss;
  io::write_field_csv(ss, f);
  const SpectralField g = io::read_field_csv(ss);
  REQUIRE(g.truncation() == f.truncation());
  for (int k = 1; k <= f.truncation(); ++k) CHECK(g.coeff(k) == f.coeff(k));
}

TEST_CASE("kernel csv keeps entries and tail") {
  FilterKernel k = theorem_kernel(10.0, 6);
  k.tail_value = 1.0;
  std::stringstream ss;
  io::write_kernel_csv(ss, k);
  const FilterKernel back = io::read_kernel_csv(ss);
  REQUIRE(back.truncation() == 6);
  for (int m = 1; m <= 8; ++m) CHECK(back.at(m) == k.at(m));
  CHECK(back.tail_value == 1.0);
}

TEST_CASE("kernel csv without footer is rejected") {
  std::stringstream ss("m,h_m\n1,1\n");
  CHECK_THROWS(io::read_kernel_csv(ss));
}

TEST_CASE("trajectory and spectrum csv headers") {
  Trajectory t;
  t.times = {0.0, 0.5};
  t.distances = {1.0, 0.5};
  t.control_norms = {0.0, 0.0};
  t.states = {SpectralField::zero(2), SpectralField::zero(2)};
  std::stringstream ss;
  io::write_trajectory_csv(ss, t);
  CHECK(ss.str().rfind("t,distance,control_norm\n", 0) == 0);

  std::stringstream s2;
  io::write_spectrum_csv(s2, {-1.0, -4.0});
  CHECK(s2.str() == "n,mu_n\n1,-1\n2,-4\n");
}

TEST_CASE("branch csv carries the coefficient columns") {
  EquilibriumBranch b;
  b.j = 1;
  b.samples.push_back({2.0, SpectralField::single_mode(1, 0.8, 2), 0, +1});
  std::stringstream ss;
  io::write_branch_csv(ss, b);
  CHECK(ss.str().rfind("j,lambda,sign,morse_index,a_1,a_2\n", 0) == 0);
}

TEST_CASE("g17 formatting survives parsing") {
  for (double v : {1.0 / 3.0, 0.1, 1e-17, 123456.789, -2.5e300}) {
    CHECK(std::stod(io::format_g17(v)) == v);
  }
}

TEST_CASE("check reports serialize with their tolerances") {
  std::vector<CheckReport> rs = {{"demo", true, 1e-12, 1e-10, 5}};
  const nlohmann::json j = io::checks_to_json(rs);
  CHECK(j[0]["name"] == "demo");
  CHECK(j[0]["passed"] == true);
  CHECK(j[0]["trials"] == 5);
}
