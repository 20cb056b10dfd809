#include "spectral/time_integration.hpp"

#include <algorithm>
#include <cmath>

#include "spectral/errors.hpp"

namespace spectral {

namespace {

void match_shape(const Fields& like, Fields& out) {
  out.resize(like.size());
  for (std::size_t c = 0; c < like.size(); ++c) out[c].resize(like[c].size());
}

void evaluate(const OdeRhs& rhs, double t, const Fields& y, Fields& dydt) {
  rhs(t, y, dydt);
  for (const auto& component : dydt) {
    if (!all_finite(component)) throw NumericFailure(t, "right-hand side produced non-finite values");
  }
}

// out = y + h * k
void axpy(const Fields& y, double h, const Fields& k, Fields& out) {
  for (std::size_t c = 0; c < y.size(); ++c) {
    const auto& yc = y[c];
    const auto& kc = k[c];
    auto& oc = out[c];
    for (std::size_t i = 0; i < yc.size(); ++i) oc[i] = yc[i] + h * kc[i];
  }
}

}  // namespace

void OdeState::validate() const {
  if (components.empty()) throw InvalidArgument("ODE state needs at least one component");
  const std::size_t length = components.front().size();
  for (const auto& component : components) {
    if (component.size() != length) throw InvalidArgument("ODE state components differ in length");
  }
  if (!std::isfinite(time)) throw InvalidArgument("ODE state time must be finite");
}

void Rk4Stepper::step(OdeState& state, double dt, const OdeRhs& rhs) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("time step must be positive");
  state.validate();

  const Fields& y = state.components;
  const double t = state.time;
  for (Fields* buffer : {&k1_, &k2_, &k3_, &k4_, &stage_}) match_shape(y, *buffer);

  evaluate(rhs, t, y, k1_);
  axpy(y, 0.5 * dt, k1_, stage_);
  evaluate(rhs, t + 0.5 * dt, stage_, k2_);
  axpy(y, 0.5 * dt, k2_, stage_);
  evaluate(rhs, t + 0.5 * dt, stage_, k3_);
  axpy(y, dt, k3_, stage_);
  evaluate(rhs, t + dt, stage_, k4_);

  const double w = dt / 6.0;
  bool finite = true;
  for (std::size_t c = 0; c < y.size(); ++c) {
    auto& yc = state.components[c];
    for (std::size_t i = 0; i < yc.size(); ++i) {
      yc[i] += w * (k1_[c][i] + 2.0 * (k2_[c][i] + k3_[c][i]) + k4_[c][i]);
    }
    finite = finite && all_finite(yc);
  }
  state.time = t + dt;
  if (!finite) throw NumericFailure(state.time, "state became non-finite");
}

std::size_t Rk4Stepper::advance_to(OdeState& state, double t_end, double dt, const OdeRhs& rhs) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("time step must be positive");
  const double span = t_end - state.time;
  if (span < 0.0) throw InvalidArgument("cannot integrate backwards in time");
  if (span == 0.0) return 0;

  // Tolerate representation error so that e.g. 0.5 / (1/64) takes 32 steps.
  const auto steps = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(span / dt - 1e-9)));
  const double h = span / static_cast<double>(steps);
  const double t_start = state.time;
  for (std::size_t n = 0; n < steps; ++n) {
    step(state, h, rhs);
    state.time = t_start + static_cast<double>(n + 1) * h;
  }
  state.time = t_end;
  return steps;
}

OdeState rk4_step(const OdeState& state, double dt, const OdeRhs& rhs) {
  OdeState next = state;
  Rk4Stepper stepper;
  stepper.step(next, dt, rhs);
  return next;
}

}  // namespace spectral
