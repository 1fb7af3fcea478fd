#pragma once

#include "ilsolve/linsys.hpp"

namespace ilsolve::fixtures {

// 2x2 system: A = (-[2,4] [8,10]; [2,4] [4,6]), b = (-[4,6]; -[8,10]).
inline IntervalLinearSystem two_by_two_system() {
  IntervalMatrix a{{Interval(-4, -2), Interval(8, 10)}, {Interval(2, 4), Interval(4, 6)}};
  IntervalVector b{Interval(-6, -4), Interval(-10, -8)};
  return IntervalLinearSystem(std::move(a), std::move(b));
}

// 3x3 system with b = ([3,5], [6,8], [5,7]).
inline IntervalLinearSystem three_by_three_system() {
  IntervalMatrix a{{Interval(-10, -8), Interval(3, 5), Interval(8, 10)},
                   {Interval(-7, -5), Interval(0, 2), Interval(-8, -6)},
                   {Interval(4, 6), Interval(7, 9), Interval(-7, -5)}};
  IntervalVector b{Interval(3, 5), Interval(6, 8), Interval(5, 7)};
  return IntervalLinearSystem(std::move(a), std::move(b));
}

}  // namespace ilsolve::fixtures
