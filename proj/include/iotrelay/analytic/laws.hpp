#pragma once

#include "iotrelay/analytic/strategy.hpp"
#include "iotrelay/params.hpp"

namespace iotrelay {

/// Which nearest-forward-neighbour distance law to use.
///
/// kCorrected is the forward-half-disc law
///   lambda*pi*r*exp(-lambda*pi*r^2/2) / (1 - exp(-lambda*pi*R_t^2/2)),
/// the one consistent with the NFP progress density. kAsPrinted uses the full
/// disc exponent exp(-lambda*pi*r^2) over the same denominator; it does not
/// normalise and exists only as a negative control.
enum class NfpLaw { kCorrected, kAsPrinted };

/// Area of the circular segment of a radius-`radius` disc lying beyond a chord
/// at distance `z` from the centre.
double segment_area(double z, double radius);

/// Density of the hop distance r in [0, R_t]. MFR integrates its joint
/// density over the angle with a 64-point Gauss-Legendre rule.
double pdf_distance(Strategy s, double r, const NetworkParams& params,
                    NfpLaw nfp_law = NfpLaw::kCorrected);

/// CDF of the hop distance. Closed form for NFP and RFP; quadrature for MFR.
/// The as-printed NFP law is clamped to [0, 1].
double cdf_distance(Strategy s, double r, const NetworkParams& params,
                    NfpLaw nfp_law = NfpLaw::kCorrected);

/// Density of the forward progress z in [0, R_t].
double pdf_progress(Strategy s, double z, const NetworkParams& params);

/// CDF of the forward progress. Closed form for MFR and RFP; quadrature for NFP.
double cdf_progress(Strategy s, double z, const NetworkParams& params);

/// Closed-form MFR progress CDF:
/// (exp(-lambda*A(z)) - exp(-lambda*pi*R_t^2/2)) / (1 - exp(-lambda*pi*R_t^2/2)).
double mfr_progress_cdf(double z, const NetworkParams& params);

/// Joint density of (progress, perpendicular offset) for the MFR relay:
/// the segment beyond the relay's progress is empty.
double mfr_joint_density(double z, double d, const NetworkParams& params);

/// Mean forward progress E[Z] by quadrature of z * pdf_progress.
double mean_progress(Strategy s, const NetworkParams& params);

/// Mean progress normalised by the mean inter-device spacing: E[Z]*sqrt(lambda).
double nafp(Strategy s, const NetworkParams& params);

}  // namespace iotrelay
