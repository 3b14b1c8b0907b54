#pragma once

#include "iotrelay/params.hpp"

namespace iotrelay {

/// Density of concurrent transmitters after CSMA contention:
/// lambda * (1 - exp(-E|N|)) / E|N| with E|N| = lambda * pi * R_s^2.
double active_density(const NetworkParams& params);

/// Radius of the interference-free ball around the receiver, R_s - r, floored
/// at zero.
double exclusion_radius(double hop_r, const NetworkParams& params);

/// Lower bound on the Laplace transform of the aggregate interference at a
/// receiver `hop_r` from its transmitter: interferers form a PPP of the active
/// density outside the exclusion ball. Uses the closed form when the path loss
/// exponent is exactly 4, quadrature otherwise.
double lt_lower_bound(double s, double hop_r, const NetworkParams& params);

/// Closed form for eta = 4: exp(-pi*Lambda*sqrt(c)*atan(sqrt(c)/a^2)),
/// c = P*s/mu, a = exclusion radius. Throws DomainError for other exponents.
double lt_lower_bound_eta4(double s, double hop_r, const NetworkParams& params);

/// exp(-2*pi*Lambda * int_a^inf v / (1 + mu*v^eta/(P*s)) dv) by quadrature.
double lt_lower_bound_numeric(double s, double hop_r, const NetworkParams& params);

}  // namespace iotrelay
