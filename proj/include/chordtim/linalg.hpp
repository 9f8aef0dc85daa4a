#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chordtim/rational.hpp"

namespace chordtim {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Rank over the rationals.
std::size_t rank(RationalMatrix rows);

/// Unique solution of a square system, or empty when singular.
std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b);

struct LpSolution {
  enum class Status { optimal, unbounded };
  Status status = Status::optimal;
  Rational objective;
  RationalVector primal;  // x
  RationalVector dual;    // one multiplier per constraint row
  std::size_t pivots = 0;
};

/// maximize c.x  subject to  A x <= b, x >= 0, with b >= 0 so the slack basis
/// is feasible. Dense exact tableau with Bland's rule.
LpSolution maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

}  // namespace chordtim
