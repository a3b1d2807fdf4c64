#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mwp {

// Scalar flow grades, totally ordered Zero < M < W < P < Inf.
// Zero: no dependency; M: max/copy flow; W: weak polynomial; P: polynomial;
// Inf: non-polynomial dependency.
enum class Coeff : std::uint8_t { Zero = 0, M = 1, W = 2, P = 3, Inf = 4 };

inline constexpr std::array<Coeff, 5> kAllCoeffs = {
    Coeff::Zero, Coeff::M, Coeff::W, Coeff::P, Coeff::Inf};

// Addition is max under the total order.
constexpr Coeff coeff_add(Coeff a, Coeff b) { return a < b ? b : a; }

// Multiplication is max, except that a finite zero annihilates: the product is
// Zero when neither argument is Inf and at least one is Zero. In particular
// Inf * Zero = Inf, so the extended semi-ring is not strong; a detected
// non-polynomial flow can never be erased by a later overwrite.
constexpr Coeff coeff_mul(Coeff a, Coeff b) {
  if (a != Coeff::Inf && b != Coeff::Inf && (a == Coeff::Zero || b == Coeff::Zero))
    return Coeff::Zero;
  return a < b ? b : a;
}

constexpr char coeff_char(Coeff c) {
  switch (c) {
    case Coeff::Zero: return '0';
    case Coeff::M: return 'm';
    case Coeff::W: return 'w';
    case Coeff::P: return 'p';
    case Coeff::Inf: return 'i';
  }
  return '?';
}

inline Coeff coeff_from_char(char c) {
  switch (c) {
    case '0': return Coeff::Zero;
    case 'm': return Coeff::M;
    case 'w': return Coeff::W;
    case 'p': return Coeff::P;
    case 'i': return Coeff::Inf;
    default: throw std::invalid_argument(std::string("unknown coefficient: ") + c);
  }
}

inline std::string coeff_str(Coeff c) { return std::string(1, coeff_char(c)); }

}  // namespace mwp
