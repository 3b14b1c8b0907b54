#include "iotrelay/numerics/special.hpp"

#include <cmath>

namespace iotrelay::numerics {

double erf(double x) { return std::erf(x); }

}  // namespace iotrelay::numerics
