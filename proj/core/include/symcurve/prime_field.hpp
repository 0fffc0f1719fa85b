#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symcurve {

/// Z/p with a process-wide modulus, set once before any computation (the
/// `--field fp:P` path). Residues are stored in [0, p). Arithmetic over a
/// prime field is a speed heuristic only; verified runs use Rat.
class Fp {
public:
  /// p must be prime and < 2^31. May be called again between runs, never
  /// concurrently with arithmetic.
  static void setModulus(std::uint64_t p);
  static std::uint64_t modulus() {
    if (p_ == 0) throw std::logic_error("prime-field modulus not set");
    return p_;
  }

  Fp() : v_(0) { (void)modulus(); }
  Fp(long n);

  static Fp zero() { return Fp(); }
  static Fp one() { return Fp(1); }
  static std::optional<Fp> parse(std::string_view text);

  bool isZero() const { return v_ == 0; }
  bool isOne() const { return v_ == 1; }
  bool isNegative() const { return false; }

  Fp operator-() const { return fromResidue(v_ == 0 ? 0 : p_ - v_); }
  Fp abs() const { return *this; }
  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v_ + b.v_;
    return fromResidue(s >= p_ ? s - p_ : s);
  }
  friend Fp operator-(Fp a, Fp b) { return a + (-b); }
  friend Fp operator*(Fp a, Fp b) {
    return fromResidue(static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.v_) * b.v_) % p_));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) { *this = *this + o; return *this; }
  Fp& operator-=(Fp o) { *this = *this - o; return *this; }
  Fp& operator*=(Fp o) { *this = *this * o; return *this; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  std::string str() const { return std::to_string(v_); }

  static constexpr bool kHasSign = false;
  static std::string fieldName() { return "Fp(" + std::to_string(modulus()) + ")"; }

private:
  static Fp fromResidue(std::uint64_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }
  static inline std::uint64_t p_ = 0;
  std::uint64_t v_;
};

inline Fp::Fp(long n) {
  std::uint64_t p = modulus();
  long r = n % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  v_ = static_cast<std::uint64_t>(r);
}

inline void Fp::setModulus(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31)) throw std::invalid_argument("modulus must be a prime below 2^31");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  p_ = p;
}

inline Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("zero has no inverse");
  // extended Euclid on (v, p)
  std::int64_t t = 0, newT = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), newR = static_cast<std::int64_t>(v_);
  while (newR != 0) {
    std::int64_t qq = r / newR;
    t -= qq * newT; std::swap(t, newT);
    r -= qq * newR; std::swap(r, newR);
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return fromResidue(static_cast<std::uint64_t>(t));
}

inline std::optional<Fp> Fp::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size()) return std::nullopt;
  bool neg = text[0] == '-';
  Fp num = Fp::zero(), den = Fp::one();
  bool sawDigit = false, inDen = false, sawDenDigit = false;
  Fp ten(10);
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      Fp& acc = inDen ? den : num;
      if (inDen && !sawDenDigit) acc = Fp::zero();
      acc = acc * ten + Fp(c - '0');
      (inDen ? sawDenDigit : sawDigit) = true;
    } else if (c == '/' && !inDen && sawDigit) {
      inDen = true;
    } else {
      return std::nullopt;
    }
  }
  if (!sawDigit || (inDen && !sawDenDigit)) return std::nullopt;
  if (inDen && den.isZero()) return std::nullopt;
  Fp out = inDen ? num / den : num;
  return neg ? -out : out;
}

}  // namespace symcurve
