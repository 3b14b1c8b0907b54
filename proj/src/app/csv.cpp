#include "iotrelay/app/csv.hpp"

#include <cmath>
#include <cstdio>

#include "iotrelay/units.hpp"

namespace iotrelay::cli {
namespace {

const char* kSweepHeader =
    "strategy,cst_dbm,lambda_active,p_success,mean_progress_m,nafp,app,delay_s,"
    "feasible,clamped";

const char* flag(bool b) { return b ? "true" : "false"; }

void append_sweep_fields(std::string& out, const SweepPoint& p) {
  out += to_string(p.strategy);
  for (double v : {w_to_dbm(p.cst_w), p.active_density, p.success_prob,
                   p.mean_progress_m, p.nafp, p.app, p.delay_s}) {
    out += ',';
    out += format_double(v);
  }
  out += ',';
  out += flag(p.feasible);
  out += ',';
  out += flag(p.clamped_exclusion);
}

double to_db_or_inf(double lin) {
  if (lin <= 0.0) return -INFINITY;
  if (std::isinf(lin)) return INFINITY;
  return lin_to_db(lin);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string sweep_csv(std::span<const SweepPoint> rows) {
  std::string out = kSweepHeader;
  out += '\n';
  for (const auto& p : rows) {
    append_sweep_fields(out, p);
    out += '\n';
  }
  return out;
}

std::string optimize_csv(std::span<const SweepPoint> rows) {
  std::string out = kSweepHeader;
  out += ",slots_to_access,retransmissions,hops,slot_s\n";
  for (const auto& p : rows) {
    append_sweep_fields(out, p);
    for (double v : {p.delay.slots_to_access, p.delay.retransmissions,
                     p.delay.hops, p.delay.slot_s}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string nafp_csv(std::span<const NafpRow> rows) {
  std::string out = "lambda,strategy,nafp,nafp_max\n";
  for (const auto& r : rows) {
    out += format_double(r.lambda);
    out += ',';
    out += to_string(r.strategy);
    out += ',';
    out += format_double(r.nafp);
    out += ',';
    out += format_double(r.nafp_max);
    out += '\n';
  }
  return out;
}

std::string samples_csv(std::span<const sim::SuccessEstimate> estimates) {
  std::string out = "trial,strategy,r_m,z_m,d_m,sinr_db,success\n";
  for (const auto& est : estimates) {
    const std::string name(to_string(est.strategy));
    for (std::size_t i = 0; i < est.trials.size(); ++i) {
      const auto& t = est.trials[i];
      out += std::to_string(i);
      out += ',';
      out += name;
      for (double v : {t.hop_distance_m, t.progress_m, t.perp_offset_m,
                       to_db_or_inf(t.sinr_lin)}) {
        out += ',';
        out += format_double(v);
      }
      out += t.success ? ",1\n" : ",0\n";
    }
  }
  return out;
}

}  // namespace iotrelay::cli
