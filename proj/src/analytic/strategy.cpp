#include "iotrelay/analytic/strategy.hpp"

#include <algorithm>
#include <cctype>

#include "iotrelay/errors.hpp"

namespace iotrelay {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kMfr:
      return "MFR";
    case Strategy::kNfp:
      return "NFP";
    case Strategy::kRfp:
      return "RFP";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (Strategy s : kAllStrategies) {
    if (upper == to_string(s)) return s;
  }
  throw ConfigError("unknown forwarding strategy '" + std::string(text) + "'");
}

int tie_rank(Strategy s) {
  switch (s) {
    case Strategy::kNfp:
      return 0;
    case Strategy::kRfp:
      return 1;
    case Strategy::kMfr:
      return 2;
  }
  return 3;
}

}  // namespace iotrelay
