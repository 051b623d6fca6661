#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace g2rs {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational &r) { return r.get_str(); }

/// Small nonzero rationals p/q with |p| <= 9, 1 <= q <= 7, drawn from a seeded engine.
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  Rational nonzero() {
    std::uniform_int_distribution<int> num(1, 9), den(1, 7), sign(0, 1);
    return make_rational(sign(engine_) ? num(engine_) : -num(engine_), den(engine_));
  }

  Rational any() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    return make_rational(num(engine_), den(engine_));
  }

private:
  std::mt19937_64 engine_;
};

} // namespace g2rs
