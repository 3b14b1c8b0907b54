#include "iotrelay/units.hpp"

#include <cmath>
#include <string>

#include "iotrelay/errors.hpp"

namespace iotrelay {

double dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double w_to_dbm(double watts) {
  if (!(watts > 0.0)) {
    throw DomainError("w_to_dbm: power must be positive, got " +
                      std::to_string(watts));
  }
  return 10.0 * std::log10(watts) + 30.0;
}

double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }

double lin_to_db(double lin) {
  if (!(lin > 0.0)) {
    throw DomainError("lin_to_db: ratio must be positive, got " +
                      std::to_string(lin));
  }
  return 10.0 * std::log10(lin);
}

double convert_units(double value, UnitConversion kind) {
  switch (kind) {
    case UnitConversion::kDbmToW:
      return dbm_to_w(value);
    case UnitConversion::kWToDbm:
      return w_to_dbm(value);
    case UnitConversion::kDbToLin:
      return db_to_lin(value);
    case UnitConversion::kLinToDb:
      return lin_to_db(value);
  }
  throw DomainError("convert_units: unknown conversion");
}

}  // namespace iotrelay
