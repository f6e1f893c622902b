#include "bilv/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bilv/errors.hpp"
#include "bilv/indexsets.hpp"

namespace bilv {

SystemSpec SystemSpec::make(int k, std::vector<Rational> c, Rational free_const) {
  ConstantStructure b = solve_b_from_c(k, c, free_const);
  return SystemSpec{k, std::move(c), std::move(free_const), std::move(b)};
}

std::vector<double> vector_field(const SystemSpec& spec, const std::vector<double>& x) {
  int n = spec.n();
  if (static_cast<int>(x.size()) != n) throw DimensionMismatch("state needs 2k+1 entries");
  std::vector<double> dx(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    double s = 0;
    for (int j = 1; j <= spec.k; ++j) {
      s += x[static_cast<size_t>(mod_into_I(spec.k, i + j)) - 1];
      s -= x[static_cast<size_t>(mod_into_I(spec.k, i - j)) - 1];
    }
    dx[static_cast<size_t>(i) - 1] =
        x[static_cast<size_t>(i) - 1] * s + rat_double(spec.c[static_cast<size_t>(i) - 1]);
  }
  return dx;
}

CompiledPoly::CompiledPoly(const Poly& p, int n) {
  for (const auto& t : p.terms()) {
    Term ct;
    ct.coeff = rat_double(t.coeff);
    for (const auto& [v, e] : t.mon.entries()) {
      if (v.kind() != VarKind::X || v.x_index() > n)
        throw DomainViolation("compiled polynomial must use only x_1..x_n");
      ct.factors.emplace_back(v.x_index() - 1, e);
    }
    terms_.push_back(std::move(ct));
  }
}

double CompiledPoly::eval(const std::vector<double>& x) const {
  double total = 0;
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (const auto& [slot, e] : t.factors) {
      double base = x[static_cast<size_t>(slot)];
      for (uint32_t i = 0; i < e; ++i) v *= base;
    }
    total += v;
  }
  return total;
}

std::vector<CompiledPoly> compiled_integrals(const SystemSpec& spec) {
  std::vector<CompiledPoly> out;
  for (const Poly& p : K_b_list(spec.k, spec.b)) out.emplace_back(p, spec.n());
  return out;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561, A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784, B6 = 11.0 / 84;
// 5th-order minus embedded 4th-order weights.
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920, E5 = -17253.0 / 339200,
                 E6 = 22.0 / 525, E7 = -1.0 / 40;

}  // namespace

Trajectory integrate(const SystemSpec& spec, const std::vector<double>& x0, double t_end,
                     double rel_tol, double abs_tol, int stride, int direction) {
  int n = spec.n();
  if (static_cast<int>(x0.size()) != n) throw DimensionMismatch("state needs 2k+1 entries");
  if (!(t_end > 0) || !(rel_tol > 0) || !(abs_tol > 0) || stride < 1 || (direction != 1 && direction != -1))
    throw DomainViolation("integrate: bad configuration");

  auto f = [&](const std::vector<double>& x) {
    std::vector<double> d = vector_field(spec, x);
    if (direction < 0)
      for (double& v : d) v = -v;
    return d;
  };

  Trajectory traj;
  std::vector<double> y = x0;
  double t = 0;
  traj.times.push_back(t);
  traj.states.push_back(y);

  std::vector<double> k1 = f(y);
  double h = std::min(0.01 * t_end, 0.1);
  double err_prev = 1.0;
  size_t since_record = 0;
  const double eps = std::numeric_limits<double>::epsilon();

  while (t < t_end) {
    if (h < 32 * eps * std::max(1.0, std::abs(t)))
      throw StepSizeUnderflow("step size collapsed at t = " + std::to_string(t));
    bool last = false;
    if (t + h >= t_end) {
      h = t_end - t;
      last = true;
    }

    auto stage = [&](const std::vector<double>& base, std::initializer_list<std::pair<double, const std::vector<double>*>> terms) {
      std::vector<double> s = base;
      for (const auto& [w, v] : terms)
        for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] += h * w * (*v)[static_cast<size_t>(i)];
      return s;
    };

    std::vector<double> k2 = f(stage(y, {{A21, &k1}}));
    std::vector<double> k3 = f(stage(y, {{A31, &k1}, {A32, &k2}}));
    std::vector<double> k4 = f(stage(y, {{A41, &k1}, {A42, &k2}, {A43, &k3}}));
    std::vector<double> k5 = f(stage(y, {{A51, &k1}, {A52, &k2}, {A53, &k3}, {A54, &k4}}));
    std::vector<double> k6 = f(stage(y, {{A61, &k1}, {A62, &k2}, {A63, &k3}, {A64, &k4}, {A65, &k5}}));
    std::vector<double> ynew(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      ynew[static_cast<size_t>(i)] =
          y[static_cast<size_t>(i)] +
          h * (B1 * k1[static_cast<size_t>(i)] + B3 * k3[static_cast<size_t>(i)] + B4 * k4[static_cast<size_t>(i)] +
               B5 * k5[static_cast<size_t>(i)] + B6 * k6[static_cast<size_t>(i)]);
    std::vector<double> k7 = f(ynew);

    double err = 0;
    for (int i = 0; i < n; ++i) {
      double e = h * (E1 * k1[static_cast<size_t>(i)] + E3 * k3[static_cast<size_t>(i)] + E4 * k4[static_cast<size_t>(i)] +
                      E5 * k5[static_cast<size_t>(i)] + E6 * k6[static_cast<size_t>(i)] + E7 * k7[static_cast<size_t>(i)]);
      double sc = abs_tol + rel_tol * std::max(std::abs(y[static_cast<size_t>(i)]), std::abs(ynew[static_cast<size_t>(i)]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / n);

    if (err <= 1.0) {
      t += h;
      y = std::move(ynew);
      k1 = std::move(k7);  // FSAL
      ++traj.accepted_steps;
      ++since_record;
      if (since_record == static_cast<size_t>(stride) || t >= t_end) {
        traj.times.push_back(direction < 0 ? -t : t);
        traj.states.push_back(y);
        since_record = 0;
      }
      double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
      h *= std::clamp(fac, 0.2, 5.0);
      err_prev = std::max(err, 1e-10);
      if (last && t >= t_end) break;
    } else {
      ++traj.rejected_steps;
      double fac = 0.9 * std::pow(err, -0.2);
      h *= std::clamp(fac, 0.1, 1.0);
    }
  }
  return traj;
}

DriftReport drift_report(const SystemSpec& spec, const Trajectory& traj) {
  std::vector<CompiledPoly> Ks = compiled_integrals(spec);
  DriftReport rep;
  if (traj.states.empty()) return rep;
  for (const auto& Kp : Ks) rep.initial.push_back(Kp.eval(traj.states.front()));
  rep.max_rel_drift.assign(Ks.size(), 0.0);
  for (const auto& x : traj.states)
    for (size_t l = 0; l < Ks.size(); ++l) {
      double v = Ks[l].eval(x);
      double denom = std::max(1.0, std::abs(rep.initial[l]));
      rep.max_rel_drift[l] = std::max(rep.max_rel_drift[l], std::abs(v - rep.initial[l]) / denom);
    }
  return rep;
}

}  // namespace bilv
