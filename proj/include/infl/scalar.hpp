#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace infl {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T n) {
    if constexpr (std::is_signed_v<T>) v_ = static_cast<long>(n);
    else v_ = static_cast<unsigned long>(n);
  }
  Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(mpz_class(std::string(s)));
    return Rational(mpz_class(std::string(s.substr(0, slash))),
                    mpz_class(std::string(s.substr(slash + 1))));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }
  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational pow(const Rational& base, unsigned e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return Rational(n, d);
}

inline mpz_class binomial_z(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline mpz_class factorial_z(long n) {
  if (n < 0) throw std::domain_error("negative factorial");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Element of Z/pZ for a prime p < 2^31. A modulus of 0 means "not yet bound";
/// such elements are plain integers that adopt the modulus of the first
/// bound operand they meet.
class ModP {
 public:
  ModP() = default;
  ModP(long v) : raw_(v) {}
  ModP(long v, std::uint64_t p) : p_(p) { raw_ = reduce(v, p); }

  std::uint64_t modulus() const { return p_; }
  long raw() const { return raw_; }
  bool is_zero() const { return raw_ == 0; }
  bool is_one() const { return raw_ == 1; }

  ModP& operator+=(const ModP& o) { return combine(o, [](long a, long b, std::uint64_t p) { return reduce(a + b, p); }); }
  ModP& operator-=(const ModP& o) { return combine(o, [](long a, long b, std::uint64_t p) { return reduce(a - b, p); }); }
  ModP& operator*=(const ModP& o) {
    return combine(o, [](long a, long b, std::uint64_t p) {
      if (!p) return a * b;
      return static_cast<long>((static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b)) % p);
    });
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const { return p_ ? ModP(-raw_, p_) : ModP(-raw_); }

  ModP inverse() const {
    if (!p_) {
      if (raw_ == 1 || raw_ == -1) return *this;
      throw std::domain_error("inverse of unbound integer in Z/p");
    }
    if (raw_ == 0) throw std::domain_error("inverse of zero in Z/p");
    long t = 0, nt = 1, r = static_cast<long>(p_), nr = raw_;
    while (nr) {
      long q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return ModP(t, p_);
  }

  friend bool operator==(const ModP& a, const ModP& b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (!p) return a.raw_ == b.raw_;
    return reduce(a.raw_, p) == reduce(b.raw_, p);
  }

  std::string str() const { return std::to_string(raw_); }

  static long reduce(long v, std::uint64_t p) {
    if (!p) return v;
    long m = v % static_cast<long>(p);
    return m < 0 ? m + static_cast<long>(p) : m;
  }

 private:
  template <class F>
  ModP& combine(const ModP& o, F f) {
    std::uint64_t p = p_ ? p_ : o.p_;
    if (p_ && o.p_ && p_ != o.p_) throw std::domain_error("mixed moduli");
    raw_ = f(reduce(raw_, p), reduce(o.raw_, p), p);
    p_ = p;
    return *this;
  }

  long raw_ = 0;
  std::uint64_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.str(); }

/// Reduction of a rational number modulo p; throws when p divides the denominator.
inline ModP reduce_mod_p(const Rational& q, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = q.num() % pz, d = q.den() % pz;
  if (d == 0) throw std::domain_error("denominator " + q.den().get_str() + " not invertible mod " + std::to_string(p));
  ModP nn(n.get_si(), p), dd(d.get_si(), p);
  return nn / dd;
}

// Uniform scalar hooks used by the generic polynomial code.
inline bool is_zero(const Rational& c) { return c.is_zero(); }
inline bool is_zero(const ModP& c) { return c.is_zero(); }
inline std::string to_text(const Rational& c) { return c.str(); }
inline std::string to_text(const ModP& c) { return c.str(); }
inline bool is_negative(const Rational& c) { return c.sign() < 0; }
inline bool is_negative(const ModP&) { return false; }

}  // namespace infl
