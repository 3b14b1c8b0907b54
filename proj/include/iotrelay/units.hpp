#pragma once

namespace iotrelay {

enum class UnitConversion { kDbmToW, kWToDbm, kDbToLin, kLinToDb };

double dbm_to_w(double dbm);
double w_to_dbm(double watts);
double db_to_lin(double db);
double lin_to_db(double lin);

double convert_units(double value, UnitConversion kind);

}  // namespace iotrelay
