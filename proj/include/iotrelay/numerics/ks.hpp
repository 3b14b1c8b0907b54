#pragma once

#include <functional>
#include <span>

namespace iotrelay::numerics {

/// One-sample Kolmogorov-Smirnov statistic: sup |F_n(x) - cdf(x)| for
/// ascending `sorted_samples`. Throws DomainError on an empty or unsorted
/// sample.
double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf);

/// Asymptotic critical value c(alpha)/sqrt(n) for the one-sample test.
double ks_critical_value(std::size_t n, double alpha);

}  // namespace iotrelay::numerics
