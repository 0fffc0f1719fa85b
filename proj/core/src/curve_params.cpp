#include "symcurve/curve_params.hpp"

#include <numeric>
#include <stdexcept>

namespace symcurve {

CurveParams::CurveParams(int q_, int m_) : q(q_), m(m_) {
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (std::gcd(2 * q + 1, m) != 1)
    throw std::invalid_argument("invalid parameters (q=" + std::to_string(q) +
                                ", m=" + std::to_string(m) + "): gcd(2q+1, m) = " +
                                std::to_string(std::gcd(2 * q + 1, m)) + " must be 1");
}

std::string CurveParams::label() const {
  return "(q=" + std::to_string(q) + ",m=" + std::to_string(m) + ")";
}

std::vector<CurveParams> defaultGrid() {
  return {CurveParams(1, 1), CurveParams(1, 2), CurveParams(2, 1), CurveParams(2, 3),
          CurveParams(3, 1)};
}

}  // namespace symcurve
