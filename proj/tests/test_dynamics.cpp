#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "bilv/dynamics.hpp"

using namespace bilv;

namespace {

Poly X(int i, uint32_t e = 1) { return Poly::var(VarId::x(i), e); }

SystemSpec undeformed(int k) { return SystemSpec::make(k, std::vector<Rational>(static_cast<size_t>(2 * k + 1), rat(0))); }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("vector field values by hand at k=1") {
  SystemSpec s = undeformed(1);
  CHECK(vector_field(s, {1, 1, 1}) == std::vector<double>{0, 0, 0});
  CHECK(vector_field(s, {1, 2, 3}) == std::vector<double>{-1, 4, -3});
  SystemSpec t = SystemSpec::make(1, {rat(1), rat(-1), rat(0)});
  CHECK(vector_field(t, {1, 1, 1}) == std::vector<double>{1, -1, 0});
}

TEST_CASE("vector field validates the state size") {
  SystemSpec s = undeformed(1);
  CHECK_THROWS_AS(vector_field(s, {1, 2, 3, 4}), DimensionMismatch);
  CHECK_THROWS_AS(vector_field(s, {1, 2}), DimensionMismatch);
}

TEST_CASE("float field agrees with the exact Hamiltonian field") {
  std::mt19937_64 rng(7321);
  std::uniform_int_distribution<int> num(-40, 40);
  for (int k = 1; k <= 3; ++k) {
    int n = 2 * k + 1;
    std::vector<Rational> c;
    Rational total(0);
    for (int i = 0; i < n - 1; ++i) {
      Rational v = rat(num(rng), 16);
      total += v;
      c.push_back(v);
    }
    c.push_back(-total);
    SystemSpec spec = SystemSpec::make(k, c, rat(num(rng), 16));

    Poly H;
    for (int i = 1; i <= n; ++i) H += X(i);
    auto field = Bracket::deformed(spec.b).hamiltonian_vector_field(H);

    for (int round = 0; round < 100 / n; ++round) {
      std::map<VarId, Rational> pt;
      std::vector<double> x;
      for (int i = 1; i <= n; ++i) {
        Rational v = rat(num(rng), 8);
        pt[VarId::x(i)] = v;
        x.push_back(rat_double(v));
      }
      auto got = vector_field(spec, x);
      for (int i = 0; i < n; ++i) {
        double exact = rat_double(field[static_cast<size_t>(i)].eval(pt));
        double scale = std::max(1.0, std::fabs(exact));
        CHECK(std::fabs(got[static_cast<size_t>(i)] - exact) / scale < 1e-13);
      }
    }
  }
}

TEST_CASE("compiled polynomials match exact evaluation") {
  SystemSpec spec = SystemSpec::make(2, {rat(1, 2), rat(-1, 4), rat(0), rat(1, 8), rat(-3, 8)}, rat(1, 3));
  auto compiled = compiled_integrals(spec);
  auto exact = K_b_list(spec.k, spec.b);
  REQUIRE(compiled.size() == exact.size());
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-20, 20);
  for (int round = 0; round < 25; ++round) {
    std::map<VarId, Rational> pt;
    std::vector<double> x;
    for (int i = 1; i <= spec.n(); ++i) {
      Rational v = rat(num(rng), 8);
      pt[VarId::x(i)] = v;
      x.push_back(rat_double(v));
    }
    for (size_t l = 0; l < compiled.size(); ++l) {
      double want = rat_double(exact[l].eval(pt));
      double scale = std::max(1.0, std::fabs(want));
      CHECK(std::fabs(compiled[l].eval(x) - want) / scale < 1e-12);
    }
  }
  CHECK_THROWS_AS(CompiledPoly(Poly::var(VarId::b(1, 3)), 5), DomainViolation);
}

TEST_CASE("fixed point stays put") {
  SystemSpec s = undeformed(2);
  auto traj = integrate(s, {1, 1, 1, 1, 1}, 5.0, 1e-10, 1e-10);
  CHECK(traj.times.back() == doctest::Approx(5.0).epsilon(1e-12));
  for (const auto& state : traj.states)
    for (double xi : state) CHECK(xi == doctest::Approx(1.0).epsilon(1e-12));
  auto drift = drift_report(s, traj);
  for (double d : drift.max_rel_drift) CHECK(d < 1e-12);
}

TEST_CASE("conservation along a generic undeformed orbit") {
  SystemSpec s = undeformed(2);
  auto traj = integrate(s, {1, 2, 3, 4, 5}, 10.0, 1e-12, 1e-12);
  REQUIRE(traj.states.size() >= 2);
  auto drift = drift_report(s, traj);
  REQUIRE(drift.max_rel_drift.size() == 3);
  for (double d : drift.max_rel_drift) CHECK(d < 1e-9);
  CHECK(drift.initial[0] == doctest::Approx(15.0).epsilon(1e-12));
  CHECK(drift.initial[2] == doctest::Approx(120.0).epsilon(1e-12));
}

TEST_CASE("conservation along a deformed orbit") {
  SystemSpec s = SystemSpec::make(2, {rat(1, 4), rat(-1, 2), rat(1, 8), rat(3, 8), rat(-1, 4)}, rat(-1, 5));
  auto traj = integrate(s, {1.5, 1.8, 1.4, 1.6, 1.7}, 10.0, 1e-12, 1e-12);
  auto drift = drift_report(s, traj);
  for (double d : drift.max_rel_drift) CHECK(d < 1e-8);
}

TEST_CASE("tightening tolerances does not hurt conservation") {
  SystemSpec s = undeformed(2);
  std::vector<double> x0 = {1, 2, 3, 4, 5};
  auto loose = drift_report(s, integrate(s, x0, 10.0, 1e-6, 1e-6));
  auto tight = drift_report(s, integrate(s, x0, 10.0, 5e-7, 5e-7));
  for (size_t l = 0; l < loose.max_rel_drift.size(); ++l) {
    bool both_tiny = loose.max_rel_drift[l] < 1e-12 && tight.max_rel_drift[l] < 1e-12;
    CHECK((both_tiny || tight.max_rel_drift[l] < 2.0 * loose.max_rel_drift[l]));
  }
}

TEST_CASE("reverse integration returns to the start") {
  SystemSpec s = SystemSpec::make(1, {rat(1, 2), rat(-1, 3), rat(-1, 6)}, rat(1, 7));
  std::vector<double> x0 = {1.1, 0.9, 1.4};
  auto fwd = integrate(s, x0, 4.0, 1e-12, 1e-12);
  auto back = integrate(s, fwd.states.back(), 4.0, 1e-12, 1e-12, 1, -1);
  CHECK(back.times.back() == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(max_abs_diff(back.states.back(), x0) < 1e-9);
}

TEST_CASE("finite-time blow-up collapses the step size") {
  SystemSpec s = undeformed(1);
  CHECK_THROWS_AS(integrate(s, {1, 5, -5}, 20.0, 1e-10, 1e-10), StepSizeUnderflow);
}

TEST_CASE("configuration validation") {
  SystemSpec s = undeformed(1);
  std::vector<double> x0 = {1, 2, 3};
  CHECK_THROWS_AS(integrate(s, x0, -1.0, 1e-10, 1e-10), DomainViolation);
  CHECK_THROWS_AS(integrate(s, x0, 1.0, 0.0, 1e-10), DomainViolation);
  CHECK_THROWS_AS(integrate(s, x0, 1.0, 1e-10, -1e-10), DomainViolation);
  CHECK_THROWS_AS(integrate(s, x0, 1.0, 1e-10, 1e-10, 0), DomainViolation);
  CHECK_THROWS_AS(integrate(s, x0, 1.0, 1e-10, 1e-10, 1, 2), DomainViolation);
  CHECK_THROWS_AS(integrate(s, {1, 2}, 1.0, 1e-10, 1e-10), DimensionMismatch);
  CHECK_THROWS_AS(SystemSpec::make(1, {rat(1), rat(0), rat(0)}), ConstraintViolation);
  CHECK_THROWS_AS(SystemSpec::make(1, {rat(0), rat(0)}), WrongArity);
}

TEST_CASE("stride thins the record but keeps the endpoint") {
  SystemSpec s = undeformed(2);
  std::vector<double> x0 = {1, 2, 3, 4, 5};
  auto dense = integrate(s, x0, 6.0, 1e-10, 1e-10, 1);
  auto sparse = integrate(s, x0, 6.0, 1e-10, 1e-10, 10);
  CHECK(dense.accepted_steps == sparse.accepted_steps);
  CHECK(sparse.times.size() < dense.times.size());
  CHECK(sparse.times.back() == dense.times.back());
  CHECK(max_abs_diff(sparse.states.back(), dense.states.back()) == 0.0);
  CHECK(dense.times.size() == dense.states.size());
}

TEST_CASE("drift report on a constant trajectory is zero") {
  SystemSpec s = undeformed(1);
  Trajectory traj;
  traj.times = {0.0, 1.0, 2.0};
  traj.states = {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}};
  auto drift = drift_report(s, traj);
  REQUIRE(drift.max_rel_drift.size() == 2);
  CHECK(drift.initial[0] == doctest::Approx(6.0));
  for (double d : drift.max_rel_drift) CHECK(d == 0.0);
}
