#include "symcurve/monomial.hpp"

#include <cctype>
#include <stdexcept>

namespace symcurve {

namespace {

void checkArity(int arity) {
  if (arity < 1 || arity > Monomial::kMaxArity)
    throw std::invalid_argument("monomial arity must be between 1 and 4, got " +
                                std::to_string(arity));
}

void checkSameArity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("arity mismatch: " + std::to_string(a.arity()) +
                                " vs " + std::to_string(b.arity()));
}

constexpr std::string_view kNames2[] = {"x2", "x3"};
constexpr std::string_view kNames3[] = {"x1", "x2", "x3"};
constexpr std::string_view kNames4[] = {"x1", "x2", "x3", "t"};

}  // namespace

std::string_view variableName(int arity, int index) {
  checkArity(arity);
  if (index < 0 || index >= arity) throw std::invalid_argument("variable index out of range");
  switch (arity) {
    case 2: return kNames2[index];
    case 3: return kNames3[index];
    case 4: return kNames4[index];
    default: return arity == 1 ? std::string_view("x1") : std::string_view();
  }
}

Monomial::Monomial(int arity) : arity_(arity) { checkArity(arity); }

Monomial::Monomial(std::initializer_list<int> exps) : arity_(static_cast<int>(exps.size())) {
  checkArity(arity_);
  int i = 0;
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    e_[i++] = e;
  }
}

Monomial Monomial::fromExponents(std::span<const int> exps) {
  Monomial m(static_cast<int>(exps.size()));
  for (int i = 0; i < m.arity_; ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent in monomial");
    m.e_[i] = exps[i];
  }
  return m;
}

Monomial Monomial::var(int arity, int index, int power) {
  Monomial m(arity);
  if (index < 0 || index >= arity) throw std::invalid_argument("variable index out of range");
  if (power < 0) throw std::invalid_argument("negative exponent in monomial");
  m.e_[index] = power;
  return m;
}

int Monomial::exp(int i) const {
  if (i < 0 || i >= arity_) throw std::invalid_argument("exponent index out of range");
  return e_[i];
}

bool Monomial::isUnit() const {
  for (int i = 0; i < arity_; ++i)
    if (e_[i] != 0) return false;
  return true;
}

long long Monomial::totalDegree() const {
  long long d = 0;
  for (int i = 0; i < arity_; ++i) d += e_[i];
  return d;
}

long long Monomial::weightedDegree(std::span<const int> weights) const {
  if (static_cast<int>(weights.size()) != arity_)
    throw std::invalid_argument("weight vector arity mismatch");
  long long d = 0;
  for (int i = 0; i < arity_; ++i) d += static_cast<long long>(weights[i]) * e_[i];
  return d;
}

std::string Monomial::str() const {
  std::string out;
  for (int i = 0; i < arity_; ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variableName(arity_, i);
    if (e_[i] != 1) {
      out += '^';
      out += std::to_string(e_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial Monomial::parse(std::string_view text, int arity) {
  checkArity(arity);
  Monomial m(arity);
  std::size_t pos = 0;
  auto skipWs = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad monomial \"" + std::string(text) + "\": " + why);
  };

  skipWs();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skipWs();
    if (pos != text.size()) fail("trailing characters after 1");
    return m;
  }

  bool expectFactor = true;
  while (pos < text.size()) {
    skipWs();
    if (pos == text.size()) break;
    if (!expectFactor) {
      if (text[pos] != '*') fail("expected '*'");
      ++pos;
      skipWs();
    }
    // variable name
    int var = -1;
    for (int i = 0; i < arity; ++i) {
      std::string_view name = variableName(arity, i);
      if (text.substr(pos, name.size()) == name) {
        // prefer the longest match (irrelevant here: names never prefix each other)
        var = i;
        pos += name.size();
        break;
      }
    }
    if (var < 0) fail("unknown variable at position " + std::to_string(pos));
    int power = 1;
    skipWs();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skipWs();
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected exponent digits after '^'");
      long long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 1'000'000) fail("exponent too large");
        ++pos;
      }
      power = static_cast<int>(v);
    }
    m.e_[var] += power;
    expectFactor = false;
    skipWs();
  }
  if (expectFactor) fail("empty monomial");
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  checkSameArity(a, b);
  for (int i = 0; i < a.arity_; ++i)
    if (a.e_[i] > b.e_[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  checkSameArity(a, b);
  Monomial m(a.arity_);
  for (int i = 0; i < a.arity_; ++i) m.e_[i] = std::max(a.e_[i], b.e_[i]);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  checkSameArity(a, b);
  Monomial m(a.arity_);
  for (int i = 0; i < a.arity_; ++i) m.e_[i] = std::min(a.e_[i], b.e_[i]);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  checkSameArity(a, b);
  Monomial m(a.arity_);
  for (int i = 0; i < a.arity_; ++i) m.e_[i] = a.e_[i] + b.e_[i];
  return m;
}

Monomial exactQuotient(const Monomial& a, const Monomial& b) {
  checkSameArity(a, b);
  Monomial m(a.arity_);
  for (int i = 0; i < a.arity_; ++i) {
    if (b.e_[i] > a.e_[i]) throw std::invalid_argument("monomial quotient is not exact");
    m.e_[i] = a.e_[i] - b.e_[i];
  }
  return m;
}

Monomial colonQuotient(const Monomial& u, const Monomial& v) {
  return exactQuotient(u, gcd(u, v));
}

int lexCompare(const Monomial& a, const Monomial& b) {
  checkSameArity(a, b);
  for (int i = 0; i < a.arity_; ++i) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
  }
  return 0;
}

bool lexLess(const Monomial& a, const Monomial& b) { return lexCompare(a, b) < 0; }

Monomial extendArity(const Monomial& m, int newArity) {
  if (newArity < m.arity()) throw std::invalid_argument("cannot shrink arity with extendArity");
  checkArity(newArity);
  Monomial out(newArity);
  for (int i = 0; i < m.arity(); ++i) out = out * Monomial::var(newArity, i, m.exp(i));
  return out;
}

Monomial dropVar(const Monomial& m, int var) {
  if (var < 0 || var >= m.arity()) throw std::invalid_argument("variable index out of range");
  if (m.exp(var) != 0) throw std::invalid_argument("dropVar: exponent of dropped variable is nonzero");
  Monomial out(m.arity() - 1);
  int j = 0;
  for (int i = 0; i < m.arity(); ++i) {
    if (i == var) continue;
    out = out * Monomial::var(m.arity() - 1, j++, m.exp(i));
  }
  return out;
}

}  // namespace symcurve
