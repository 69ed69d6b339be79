#pragma once

#include "scalar.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace infl {

/// Q[w]/(q(w)) for a monic q of small degree.
class QuotientRing {
 public:
  /// `monic` holds q's coefficients from degree 0 up to the leading 1.
  explicit QuotientRing(std::vector<Rational> monic, std::string name = "w")
      : q_(std::move(monic)), name_(std::move(name)) {
    if (q_.size() < 2 || !q_.back().is_one()) throw std::invalid_argument("QuotientRing needs a monic modulus of degree >= 1");
  }
  std::size_t degree() const { return q_.size() - 1; }
  const std::vector<Rational>& modulus() const { return q_; }
  const std::string& generator_name() const { return name_; }

  /// Reduces a coefficient vector in place.
  void reduce(std::vector<Rational>& c) const {
    std::size_t d = degree();
    for (std::size_t k = c.size(); k-- > d;) {
      if (c[k].is_zero()) continue;
      Rational lead = c[k];
      for (std::size_t i = 0; i < d; ++i) c[k - d + i] -= lead * q_[i];
      c[k] = Rational(0);
    }
    c.resize(std::min(c.size(), d));
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

 private:
  std::vector<Rational> q_;
  std::string name_;
};

/// Element of a QuotientRing. Elements built from plain integers carry no
/// ring and adopt the ring of whatever they are combined with.
class QElem {
 public:
  QElem() = default;
  QElem(long c) : QElem(Rational(c)) {}
  QElem(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  QElem(std::shared_ptr<const QuotientRing> ring, std::vector<Rational> coeffs)
      : ring_(std::move(ring)), c_(std::move(coeffs)) {
    normalize();
  }

  static QElem generator(std::shared_ptr<const QuotientRing> ring) { return QElem(ring, {Rational(0), Rational(1)}); }

  const std::shared_ptr<const QuotientRing>& ring() const { return ring_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

  QElem& operator+=(const QElem& o) {
    adopt(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  QElem& operator-=(const QElem& o) { return *this += -o; }
  QElem& operator*=(const QElem& o) {
    adopt(o);
    if (c_.empty() || o.c_.empty()) {
      c_.clear();
      return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    normalize();
    return *this;
  }
  friend QElem operator+(QElem a, const QElem& b) { return a += b; }
  friend QElem operator-(QElem a, const QElem& b) { return a -= b; }
  friend QElem operator*(QElem a, const QElem& b) { return a *= b; }
  QElem operator-() const {
    QElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend bool operator==(const QElem& a, const QElem& b) { return a.c_ == b.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    if (c_.size() == 1) return c_[0].str();
    std::string name = ring_ ? ring_->generator_name() : "w";
    std::string out = "(";
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      Rational a = c_[i];
      bool neg = a.sign() < 0;
      if (neg) a = -a;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string mono = i == 0 ? "" : (i == 1 ? name : name + "^" + std::to_string(i));
      if (i == 0) out += a.str();
      else if (a.is_one()) out += mono;
      else out += a.str() + "*" + mono;
    }
    return out + ")";
  }

 private:
  void adopt(const QElem& o) {
    if (!ring_) ring_ = o.ring_;
    else if (o.ring_ && o.ring_ != ring_ && o.ring_->modulus() != ring_->modulus())
      throw std::domain_error("mixed quotient rings");
  }
  void normalize() {
    if (ring_) ring_->reduce(c_);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::shared_ptr<const QuotientRing> ring_;
  std::vector<Rational> c_;
};

inline bool is_zero(const QElem& c) { return c.is_zero(); }
inline std::string to_text(const QElem& c) { return c.str(); }
inline bool is_negative(const QElem& c) { return c.is_rational() && c.rational_part().sign() < 0; }

/// Q(zeta) with zeta a primitive cube root of unity: w^2 + w + 1.
inline std::shared_ptr<const QuotientRing> cyclotomic3() {
  static const auto ring = std::make_shared<const QuotientRing>(std::vector<Rational>{1, 1, 1}, "zeta");
  return ring;
}

/// Q(sqrt(-1/2)): w^2 + 1/2.
inline std::shared_ptr<const QuotientRing> sqrt_minus_half() {
  static const auto ring =
      std::make_shared<const QuotientRing>(std::vector<Rational>{Rational(1, 2), 0, 1}, "r");
  return ring;
}

}  // namespace infl
