#pragma once

#include <cstdint>
#include <vector>

#include "bilv/integrals.hpp"
#include "bilv/poisson.hpp"

namespace bilv {

// Deformed system fixed by k, deformation constants c (sum zero) and the
// free chain constant; b is derived once and kept exact.
struct SystemSpec {
  int k = 0;
  std::vector<Rational> c;
  Rational free_const;
  ConstantStructure b;

  static SystemSpec make(int k, std::vector<Rational> c, Rational free_const = Rational(0));
  int n() const { return 2 * k + 1; }
};

// xdot_i = x_i sum_{j=1..k} (x_{i+j} - x_{i-j}) + c_i.
std::vector<double> vector_field(const SystemSpec& spec, const std::vector<double>& x);

// Flattened term list for fast float evaluation of an x-only polynomial.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  CompiledPoly(const Poly& p, int n);
  double eval(const std::vector<double>& x) const;

 private:
  struct Term {
    double coeff;
    std::vector<std::pair<int, uint32_t>> factors;  // (0-based slot, exponent)
  };
  std::vector<Term> terms_;
};

// K_0^b..K_k^b specialised at the numeric b of the spec and compiled.
std::vector<CompiledPoly> compiled_integrals(const SystemSpec& spec);

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  size_t accepted_steps = 0;
  size_t rejected_steps = 0;
};

// Dormand-Prince 5(4) with a PI controller (safety 0.9, growth clamped to
// 5x). Records every stride-th accepted step plus the final state. Throws
// StepSizeUnderflow when the controller collapses the step.
Trajectory integrate(const SystemSpec& spec, const std::vector<double>& x0, double t_end,
                     double rel_tol, double abs_tol, int stride = 1, int direction = +1);

struct DriftReport {
  std::vector<double> initial;        // integral values at the first sample
  std::vector<double> max_rel_drift;  // max_t |K(t)-K(0)| / max(1, |K(0)|)
};

DriftReport drift_report(const SystemSpec& spec, const Trajectory& traj);

}  // namespace bilv
