#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "spectral/complex.hpp"

namespace spectral {

/// One or more equal-length complex sequences (e.g. the pair u_hat, v_hat).
using Fields = std::vector<std::vector<Complex>>;

struct OdeState {
  Fields components;
  double time = 0.0;

  /// Throws InvalidArgument if component lengths differ or time is not finite.
  void validate() const;
};

/// dy/dt = rhs(t, y). Writes the derivative into `dydt`, which arrives with
/// the same shape as `y`.
using OdeRhs = std::function<void(double t, const Fields& y, Fields& dydt)>;

/// Classical fourth-order Runge-Kutta with reusable stage storage. The state
/// is treated as opaque sequences; what the components mean is up to `rhs`.
class Rk4Stepper {
 public:
  /// Advances `state` by `dt` in place. Throws InvalidArgument for dt <= 0 and
  /// NumericFailure if any stage derivative or the result is non-finite.
  void step(OdeState& state, double dt, const OdeRhs& rhs);

  /// Advances to exactly `t_end` using the fewest equal steps not longer than
  /// `dt` (so the step is exactly `dt` whenever the interval is a multiple).
  /// Returns the number of steps taken.
  std::size_t advance_to(OdeState& state, double t_end, double dt, const OdeRhs& rhs);

 private:
  Fields k1_, k2_, k3_, k4_, stage_;
};

/// Single RK4 step returning a new state.
OdeState rk4_step(const OdeState& state, double dt, const OdeRhs& rhs);

}  // namespace spectral
