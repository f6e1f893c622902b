#pragma once

#include <gmpxx.h>

#include <string>

#include "bilv/errors.hpp"

namespace bilv {

// Exact rational scalar. mpq_class keeps lowest terms with positive denominator
// once canonicalized; every entry point below canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw DomainViolation("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q". Throws BadInput on anything else or q = 0.
inline Rational rat_parse(const std::string& s) {
  try {
    Rational r(s);
    if (r.get_den() == 0) throw BadInput("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw BadInput("not a rational: '" + s + "'");
  }
}

// "p" for integers, "p/q" otherwise (GMP canonical form).
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline double rat_double(const Rational& r) { return r.get_d(); }

}  // namespace bilv
