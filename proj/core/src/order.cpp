#include "symcurve/order.hpp"

#include <stdexcept>

namespace symcurve {

MonomialOrder::MonomialOrder(Kind kind, int arity, std::vector<int> weights, int elimVar)
    : kind_(kind), arity_(arity), weights_(std::move(weights)), elimVar_(elimVar) {
  if (arity_ < 1 || arity_ > Monomial::kMaxArity)
    throw std::invalid_argument("order arity out of range");
  if (kind_ != Kind::Lex) {
    if (static_cast<int>(weights_.size()) != arity_)
      throw std::invalid_argument("weight vector size must match arity");
    for (int w : weights_)
      if (w <= 0) throw std::invalid_argument("order weights must be positive");
  }
  if (kind_ == Kind::Elim && (elimVar_ < 0 || elimVar_ >= arity_))
    throw std::invalid_argument("elimination variable out of range");
}

MonomialOrder MonomialOrder::lex(int arity) { return MonomialOrder(Kind::Lex, arity, {}, -1); }

MonomialOrder MonomialOrder::wgrlex(std::vector<int> weights) {
  int arity = static_cast<int>(weights.size());
  return MonomialOrder(Kind::WGrLex, arity, std::move(weights), -1);
}

MonomialOrder MonomialOrder::elim(int var, std::vector<int> weights) {
  int arity = static_cast<int>(weights.size());
  return MonomialOrder(Kind::Elim, arity, std::move(weights), var);
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (a.arity() != arity_ || b.arity() != arity_)
    throw std::invalid_argument("monomial arity does not match order arity");
  switch (kind_) {
    case Kind::Lex:
      return lexCompare(a, b);
    case Kind::WGrLex: {
      long long da = a.weightedDegree(weights_);
      long long db = b.weightedDegree(weights_);
      if (da != db) return da < db ? -1 : 1;
      return lexCompare(a, b);
    }
    case Kind::Elim: {
      if (a.exp(elimVar_) != b.exp(elimVar_))
        return a.exp(elimVar_) < b.exp(elimVar_) ? -1 : 1;
      long long da = 0, db = 0;
      for (int i = 0; i < arity_; ++i) {
        if (i == elimVar_) continue;
        da += static_cast<long long>(weights_[i]) * a.exp(i);
        db += static_cast<long long>(weights_[i]) * b.exp(i);
      }
      if (da != db) return da < db ? -1 : 1;
      return lexCompare(a, b);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::WGrLex: {
      std::string s = "wgrlex(";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights_[i]);
      }
      return s + ")";
    }
    case Kind::Elim:
      return "elim(" + std::string(variableName(arity_, elimVar_)) + ")";
  }
  return "?";
}

}  // namespace symcurve
