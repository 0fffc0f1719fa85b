#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace symcurve {

/// Exact rational coefficient. Always kept in lowest terms with a positive
/// denominator; there is no floating point anywhere in the engine.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den);

  static Rat zero() { return Rat(); }
  static Rat one() { return Rat(1); }

  /// Accepts "n" or "n/d" with optional sign; rejects everything else.
  static std::optional<Rat> parse(std::string_view text);

  bool isZero() const { return sgn(v_) == 0; }
  bool isOne() const { return v_ == 1; }
  bool isNegative() const { return sgn(v_) < 0; }

  Rat operator-() const { return Rat(static_cast<mpq_class>(-v_)); }
  Rat abs() const { return isNegative() ? -*this : *this; }
  /// Throws std::domain_error on zero.
  Rat inverse() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(static_cast<mpq_class>(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(static_cast<mpq_class>(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(static_cast<mpq_class>(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }

  /// "7", "-3/4".
  std::string str() const;

  static constexpr bool kHasSign = true;
  static std::string fieldName() { return "QQ"; }

private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

inline Rat operator/(const Rat& a, const Rat& b) {
  if (b.isZero()) throw std::domain_error("division by zero");
  return Rat(static_cast<mpq_class>(a.v_ / b.v_));
}

inline Rat Rat::inverse() const {
  if (isZero()) throw std::domain_error("zero has no inverse");
  return Rat(static_cast<mpq_class>(1 / v_));
}

inline std::optional<Rat> Rat::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // validate: [+-]?digits(/digits)?
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  bool sawDigit = false, sawSlash = false, sawDen = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      (sawSlash ? sawDen : sawDigit) = true;
    } else if (c == '/' && !sawSlash && sawDigit) {
      sawSlash = true;
    } else {
      return std::nullopt;
    }
  }
  if (!sawDigit || (sawSlash && !sawDen)) return std::nullopt;
  // mpq_set_str rejects a leading '+'
  std::string body(text[0] == '+' ? text.substr(1) : text);
  mpq_class v(body, 10);
  if (sgn(v.get_den()) == 0) return std::nullopt;
  v.canonicalize();
  return Rat(std::move(v));
}

inline std::string Rat::str() const {
  return v_.get_str();
}

}  // namespace symcurve
