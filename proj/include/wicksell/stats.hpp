// SPDX-License-Identifier: Apache-2.0
//! \file wicksell/stats.hpp
//! Kolmogorov-Smirnov distances and a least-squares line fit.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "wicksell/common.hpp"

namespace wicksell {

//! One-sample KS distance between the empirical CDF of `values` and `cdf`.
template <class Cdf>
double ks_statistic(std::vector<double> values, Cdf&& cdf)
{
    const std::size_t n = values.size();
    if (n == 0)
        throw DomainError("ks_statistic: empty sample");
    std::sort(values.begin(), values.end());
    double d = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(values[i]);
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
    }
    return d;
}

//! Two-sample KS distance.
inline double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b)
{
    if (a.empty() || b.empty())
        throw DomainError("ks_statistic_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x)
            ++i;
        while (j < b.size() && b[j] <= x)
            ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / a.size()
                                  - static_cast<double>(j) / b.size()));
    }
    return d;
}

struct LineFit {
    double intercept = 0;
    double slope = 0;
};

//! Ordinary least squares for y = intercept + slope * x.
inline LineFit fit_line(std::span<const double> x, std::span<const double> y)
{
    const std::size_t n = x.size();
    if (n != y.size() || n < 2)
        throw DomainError("fit_line: need two or more points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0)
        throw DomainError("fit_line: abscissae are all equal");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

}  // namespace wicksell
