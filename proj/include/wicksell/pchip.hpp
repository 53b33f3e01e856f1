// SPDX-License-Identifier: Apache-2.0
//! \file wicksell/pchip.hpp
//! Monotone piecewise-cubic interpolation (Fritsch-Carlson derivatives).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "wicksell/common.hpp"

namespace wicksell {

//! Cubic Hermite interpolant through (x_i, y_i) with derivative limiting so
//! monotone data produce a monotone interpolant. Outside the knot range the
//! curve continues linearly with the endpoint derivative.
class MonotoneCubicInterpolant {
  public:
    MonotoneCubicInterpolant() = default;

    MonotoneCubicInterpolant(std::vector<double> xs, std::vector<double> ys)
        : xs_(std::move(xs)), ys_(std::move(ys))
    {
        const std::size_t n = xs_.size();
        if (n < 2 || ys_.size() != n)
            throw InvalidParameterError("interpolant needs at least two knots");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (!(xs_[i] < xs_[i + 1]))
                throw InvalidParameterError("interpolant abscissae must be strictly increasing");
        build_derivatives();
    }

    double operator()(double x) const
    {
        if (x <= xs_.front())
            return ys_.front() + d_.front() * (x - xs_.front());
        if (x >= xs_.back())
            return ys_.back() + d_.back() * (x - xs_.back());
        const std::size_t i = segment(x);
        const double h = xs_[i + 1] - xs_[i];
        const double t = (x - xs_[i]) / h;
        const double t2 = t * t;
        const double t3 = t2 * t;
        return ys_[i] * (2 * t3 - 3 * t2 + 1) + h * d_[i] * (t3 - 2 * t2 + t)
               + ys_[i + 1] * (-2 * t3 + 3 * t2) + h * d_[i + 1] * (t3 - t2);
    }

    double derivative(double x) const
    {
        if (x <= xs_.front())
            return d_.front();
        if (x >= xs_.back())
            return d_.back();
        const std::size_t i = segment(x);
        const double h = xs_[i + 1] - xs_[i];
        const double t = (x - xs_[i]) / h;
        const double t2 = t * t;
        return ys_[i] * (6 * t2 - 6 * t) / h + d_[i] * (3 * t2 - 4 * t + 1)
               + ys_[i + 1] * (6 * t - 6 * t2) / h + d_[i + 1] * (3 * t2 - 2 * t);
    }

    double front_x() const { return xs_.front(); }
    double back_x() const { return xs_.back(); }
    double front_y() const { return ys_.front(); }
    double back_y() const { return ys_.back(); }
    double front_derivative() const { return d_.front(); }
    double back_derivative() const { return d_.back(); }
    const std::vector<double>& knots() const { return xs_; }

  private:
    std::size_t segment(double x) const
    {
        auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        std::size_t i = static_cast<std::size_t>(it - xs_.begin());
        return std::clamp<std::size_t>(i, 1, xs_.size() - 1) - 1;
    }

    void build_derivatives()
    {
        const std::size_t n = xs_.size();
        std::vector<double> h(n - 1), s(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            h[i] = xs_[i + 1] - xs_[i];
            s[i] = (ys_[i + 1] - ys_[i]) / h[i];
        }
        d_.assign(n, 0.0);
        if (n == 2) {
            d_[0] = d_[1] = s[0];
            return;
        }
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (s[i - 1] * s[i] <= 0) {
                d_[i] = 0;
            }
            else {
                const double w1 = 2 * h[i] + h[i - 1];
                const double w2 = h[i] + 2 * h[i - 1];
                d_[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
            }
        }
        d_[0] = endpoint(h[0], h[1], s[0], s[1]);
        d_[n - 1] = endpoint(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
    }

    // Three-point endpoint slope, limited so it cannot break monotonicity.
    static double endpoint(double h0, double h1, double s0, double s1)
    {
        double d = ((2 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
        if (d * s0 <= 0)
            return 0.0;
        if (s0 * s1 <= 0 && std::fabs(d) > 3 * std::fabs(s0))
            return 3 * s0;
        return d;
    }

    std::vector<double> xs_, ys_, d_;
};

}  // namespace wicksell
