#pragma once

namespace iotrelay::numerics {

/// Error function (C library implementation, ~1 ulp).
double erf(double x);

}  // namespace iotrelay::numerics
