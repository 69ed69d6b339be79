#pragma once

#include "mpoly.hpp"

#include <stdexcept>

namespace infl {

enum class FactorialKind { falling, rising, double_falling, double_rising };

/// Product w(w±s)(w±2s)... with k factors, s = 1 or 2. Works for Rational and Poly.
template <class T>
T factorial_gadget(const T& w, int k, FactorialKind kind) {
  if (k < 0) throw std::invalid_argument("factorial gadget length must be nonnegative");
  long step = 0;
  switch (kind) {
    case FactorialKind::falling: step = -1; break;
    case FactorialKind::rising: step = 1; break;
    case FactorialKind::double_falling: step = -2; break;
    case FactorialKind::double_rising: step = 2; break;
  }
  T r(Rational(1));
  for (long i = 0; i < k; ++i) r = r * (w + T(Rational(step * i)));
  return r;
}

template <class T>
T falling(const T& w, int k) { return factorial_gadget(w, k, FactorialKind::falling); }
template <class T>
T rising(const T& w, int k) { return factorial_gadget(w, k, FactorialKind::rising); }
template <class T>
T dfalling(const T& w, int k) { return factorial_gadget(w, k, FactorialKind::double_falling); }
template <class T>
T drising(const T& w, int k) { return factorial_gadget(w, k, FactorialKind::double_rising); }

inline Rational factorial_q(long n) { return Rational(factorial_z(n)); }
inline Rational binom_q(long n, long k) { return Rational(binomial_z(n, k)); }

}  // namespace infl
