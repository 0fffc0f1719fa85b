#include "symcurve/poly_text.hpp"

#include <cctype>
#include <stdexcept>

namespace symcurve::detail {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad polynomial \"" + std::string(text) + "\" at position " +
                                std::to_string(pos) + ": " + why);
  }
};

std::string readNumber(Cursor& c) {
  std::string out;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    out += c.peek();
    ++c.pos;
  }
  if (out.empty()) c.fail("expected digits");
  c.skipWs();
  if (!c.done() && c.peek() == '/') {
    ++c.pos;
    c.skipWs();
    out += '/';
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      out += c.peek();
      ++c.pos;
    }
    if (out.back() == '/') c.fail("expected denominator digits");
  }
  return out;
}

int readVariable(Cursor& c, int arity) {
  for (int i = 0; i < arity; ++i) {
    std::string_view name = variableName(arity, i);
    if (c.text.substr(c.pos, name.size()) == name) {
      c.pos += name.size();
      return i;
    }
  }
  c.fail("unknown variable");
}

int readExponent(Cursor& c) {
  c.skipWs();
  if (c.done() || c.peek() != '^') return 1;
  ++c.pos;
  c.skipWs();
  long long v = 0;
  bool any = false;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.peek() - '0');
    if (v > 1'000'000) c.fail("exponent too large");
    ++c.pos;
    any = true;
  }
  if (!any) c.fail("expected exponent digits after '^'");
  return static_cast<int>(v);
}

}  // namespace

std::vector<TextTerm> splitPolyText(std::string_view text, int arity) {
  Cursor c{text};
  std::vector<TextTerm> terms;
  c.skipWs();
  if (c.done()) c.fail("empty polynomial");

  bool first = true;
  while (true) {
    c.skipWs();
    if (c.done()) {
      if (first) c.fail("empty polynomial");
      break;
    }
    TextTerm term;
    term.mono = Monomial(arity);
    if (c.peek() == '+' || c.peek() == '-') {
      term.negative = c.peek() == '-';
      ++c.pos;
      c.skipWs();
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    if (c.done()) c.fail("dangling sign");

    bool sawCoeff = false, sawMono = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      term.coeff = readNumber(c);
      sawCoeff = true;
      c.skipWs();
      if (!c.done() && c.peek() == '*') {
        ++c.pos;
        c.skipWs();
        if (c.done()) c.fail("dangling '*'");
      } else if (!c.done() && c.peek() != '+' && c.peek() != '-') {
        c.fail("expected '*', '+' or '-' after coefficient");
      }
    }
    while (!c.done() && c.peek() != '+' && c.peek() != '-') {
      int var = readVariable(c, arity);
      int e = readExponent(c);
      term.mono = term.mono * Monomial::var(arity, var, e);
      sawMono = true;
      c.skipWs();
      if (!c.done() && c.peek() == '*') {
        ++c.pos;
        c.skipWs();
        if (c.done()) c.fail("dangling '*'");
      } else {
        break;
      }
    }
    if (!sawCoeff && !sawMono) c.fail("expected a term");
    if (term.coeff.empty()) term.coeff = "1";
    terms.push_back(std::move(term));
    first = false;
  }
  return terms;
}

}  // namespace symcurve::detail
