#include "symcurve/filtration.hpp"

#include <stdexcept>

namespace symcurve {

MonomialFiltration::MonomialFiltration(CurveParams params)
    : params_(params),
      j1_(2, {Monomial{2, 0}, Monomial{1, params.q}, Monomial{0, params.q + 1}}),
      j2_(2, {Monomial{0, 2 * params.q + 1}}) {}

const MonomialIdeal& MonomialFiltration::In(int n) {
  if (n < 0) throw std::invalid_argument("filtration index must be non-negative");
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;

  MonomialIdeal acc = MonomialIdeal::zero(2);
  for (int a2 = 0; 2 * a2 <= n; ++a2) {
    int a1 = n - 2 * a2;
    acc = sum(acc, product(power(j1_, a1), power(j2_, a2)));
  }
  return cache_.emplace(n, std::move(acc)).first->second;
}

std::int64_t MonomialFiltration::lengthIn(int n) {
  if (n <= 0) return 0;
  LengthValue len = quotientLength(In(n));
  return len.value();
}

}  // namespace symcurve
