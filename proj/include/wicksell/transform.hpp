// SPDX-License-Identifier: Apache-2.0
//! \file wicksell/transform.hpp
//! The section transform: distribution of sphere-profile radii seen in a
//! lower-dimensional cut, for codimension r >= 1.
//!
//! With M_r the r-th moment of the radius law F, the section CDF is
//!
//!   F_r(x) = 1 - (r / M_r) Int_x^inf u (u^2 - x^2)^{(r-2)/2} (1 - F(u)) du.
//!
//! The substitution s = sqrt(u^2 - x^2) turns the integral into
//! Int_0^inf s^{r-1} (1 - F(sqrt(x^2 + s^2))) ds, which is bounded for r = 1
//! where the raw integrand blows up at u = x. Subtracting the same identity
//! at x = 0 (where it equals M_r / r exactly) gives the form evaluated here,
//!
//!   F_r(x) = (r / M_r) Int_0^inf s^{r-1} [F(sqrt(x^2 + s^2)) - F(s)] ds,
//!
//! whose integrand stays positive, so values deep in the lower tail do not
//! drown in the cancellation of 1 - (almost 1). Point masses contribute in
//! closed form. The density is
//!
//!   f_r(x) = (x r / M_r) Int_x^inf (u^2 - x^2)^{(r-2)/2} dF(u),
//!
//! evaluated with the same substitution against the continuous part of dF.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wicksell/common.hpp"
#include "wicksell/laws.hpp"
#include "wicksell/pchip.hpp"
#include "wicksell/quadrature.hpp"
#include "wicksell/rng.hpp"

namespace wicksell {

//! Tabulation grid request: log-spaced points from min_fraction * x_max up
//! to x_max (refinement nodes are added automatically where needed).
struct GridSpec {
    double min_fraction = 1e-7;
    int points = 512;

    bool operator==(const GridSpec&) const = default;
};

namespace transform_detail {

//! Quadrature cutoff: the support top, or the 1 - 1e-12 quantile when the
//! support is unbounded.
inline double effective_upper(const RadiusLaw& law)
{
    const double u = law.upper_support();
    if (std::isfinite(u))
        return u;
    return law.quantile(1.0 - 1e-12);
}

//! s-space images of the law's breakpoints for integrands evaluated at both
//! s and sqrt(x^2 + s^2).
inline std::vector<double> section_splits(const RadiusLaw& law, double x, double s_max)
{
    std::vector<double> out;
    for (double b : law.breakpoints()) {
        if (b > 0 && b < s_max)
            out.push_back(b);
        if (b > x) {
            const double s = std::sqrt((b - x) * (b + x));
            if (s > 0 && s < s_max)
                out.push_back(s);
        }
    }
    if (x < s_max)
        out.push_back(x);
    return out;
}

//! (a^r - (a^2 - x^2)^{r/2}) / r without cancellation: the contribution of a
//! unit atom at a to the transform integral.
inline double atom_section_term(double a, double x, int r)
{
    if (x >= a)
        return ipow(a, r) / r;
    const double z = (x / a) * (x / a);
    return ipow(a, r) / r * (-std::expm1(0.5 * r * std::log1p(-z)));
}

inline QuadratureOptions section_quad_options(double scale)
{
    QuadratureOptions opts;
    // Floor just above the rounding plateau of CDF differences, so deep-tail
    // values keep several significant digits instead of stalling the loop.
    opts.abs_tol = 5e-15 * std::max(scale, 1e-30);
    opts.rel_tol = 3e-11;
    return opts;
}

}  // namespace transform_detail

//---------------------------------------------------------------------------
// Moments
//---------------------------------------------------------------------------

//! M_r = r Int_0^inf u^{r-1} (1 - F(u)) du; analytic when the law knows it.
//! Unbounded supports are extended octave by octave past the 1 - 1e-12
//! quantile; if the contributions never die out the moment is declared
//! divergent.
inline double moment(const RadiusLaw& law, int r)
{
    if (r < 1)
        throw DomainError("moment: r must be a positive integer");
    if (auto m = law.analytic_moment(r))
        return *m;

    const double cutoff = transform_detail::effective_upper(law);
    auto integrand = [&](double u) { return ipow(u, r - 1) * (1.0 - law.cdf(u)); };
    auto opts = transform_detail::section_quad_options(ipow(cutoff, r) / r);
    auto splits = law.breakpoints();
    auto core = integrate(integrand, 0.0, cutoff, opts, splits);
    if (!core.converged)
        throw QuadratureError("moment: quadrature failed below u = " + std::to_string(cutoff));
    double total = core.value;

    if (!std::isfinite(law.upper_support())) {
        double lo = cutoff;
        bool settled = false;
        for (int octave = 0; octave < 60; ++octave) {
            const double hi = 2 * lo;
            auto seg = integrate(integrand, lo, hi, opts);
            total += seg.value;
            lo = hi;
            if (seg.value <= 1e-13 * std::fabs(total)) {
                settled = true;
                break;
            }
        }
        if (!settled)
            throw DivergentMomentError("moment: tail integral still growing at u = "
                                       + std::to_string(lo));
    }
    return r * total;
}

//---------------------------------------------------------------------------
// Pointwise transform
//---------------------------------------------------------------------------

//! F_r(x) with the moment M_r already known.
inline double section_cdf_with_moment(const RadiusLaw& law, int r, double x, double mr)
{
    if (r < 1)
        throw DomainError("section_cdf: r must be a positive integer");
    if (!(x > 0))
        throw DomainError("section_cdf: x must be positive");
    const double upper = law.upper_support();
    if (std::isfinite(upper) && x >= upper)
        return 1.0;

    double q = 0;
    for (const Atom& a : law.atoms())
        q += a.mass * transform_detail::atom_section_term(a.position, x, r);

    const double s_max = transform_detail::effective_upper(law);
    auto bracket = [&](double s) {
        const double arg = std::sqrt(x * x + s * s);
        const double d = law.continuous_cdf(arg) - law.continuous_cdf(s);
        return d > 0 ? ipow(s, r - 1) * d : 0.0;
    };
    auto opts = transform_detail::section_quad_options(ipow(s_max, r) / r);
    auto splits = transform_detail::section_splits(law, x, s_max);
    auto res = integrate(bracket, 0.0, s_max, opts, splits);
    if (!res.converged)
        throw QuadratureError("section_cdf: quadrature failed at x = " + std::to_string(x));
    q += res.value;

    return std::clamp(r * q / mr, 0.0, 1.0);
}

inline double section_cdf(const RadiusLaw& law, int r, double x)
{
    return section_cdf_with_moment(law, r, x, moment(law, r));
}

//! f_r(x) with the moment M_r already known. Atoms sitting exactly at x make
//! the r = 1 density infinite there.
inline double section_pdf_with_moment(const RadiusLaw& law, int r, double x, double mr)
{
    if (r < 1)
        throw DomainError("section_pdf: r must be a positive integer");
    if (!(x > 0))
        throw DomainError("section_pdf: x must be positive");
    const double upper = law.upper_support();
    if (std::isfinite(upper) && x >= upper)
        return 0.0;

    double stieltjes = 0;
    for (const Atom& a : law.atoms()) {
        if (a.position < x)
            continue;
        if (a.position == x) {
            if (r == 1)
                throw SingularDensityError("section_pdf: atom exactly at x = "
                                           + std::to_string(x));
            continue;  // mass over (x, inf): the boundary atom drops out
        }
        const double gap2 = (a.position - x) * (a.position + x);
        if (r == 1)
            stieltjes += a.mass / std::sqrt(gap2);
        else if (r == 2)
            stieltjes += a.mass;
        else
            stieltjes += a.mass * std::pow(gap2, 0.5 * (r - 2));
    }

    double integral = 0;
    if (law.pdf(x).has_value()) {
        const double cut = transform_detail::effective_upper(law);
        if (cut > x) {
            const double s_up = std::sqrt((cut - x) * (cut + x));
            auto integrand = [&](double s) {
                const double arg = std::sqrt(x * x + s * s);
                const double f = law.pdf(arg).value_or(0.0);
                return f > 0 ? ipow(s, r - 1) * f / arg : 0.0;
            };
            std::vector<double> splits;
            for (double b : law.breakpoints())
                if (b > x) {
                    const double s = std::sqrt((b - x) * (b + x));
                    if (s > 0 && s < s_up)
                        splits.push_back(s);
                }
            auto opts = transform_detail::section_quad_options(ipow(s_up, r) / r);
            auto res = integrate(integrand, 0.0, s_up, opts, splits);
            if (!res.converged)
                throw QuadratureError("section_pdf: quadrature failed at x = "
                                      + std::to_string(x));
            integral = res.value;
        }
    }

    return x * r / mr * (stieltjes + integral);
}

inline double section_pdf(const RadiusLaw& law, int r, double x)
{
    return section_pdf_with_moment(law, r, x, moment(law, r));
}

//---------------------------------------------------------------------------
// The mixing factor of the r = 1 representation
//---------------------------------------------------------------------------

//! Parameter-free law on (1, inf) with density g(v) = v / sqrt(v^2 - 1) - 1.
//! Dividing a radius by an independent draw from it reproduces the upper
//! half of the r = 1 section representation.
struct GFactorLaw {
    static double density(double v)
    {
        if (v <= 1)
            return 0;
        return v / std::sqrt((v - 1) * (v + 1)) - 1.0;
    }

    //! G(v) = 1 + sqrt(v^2 - 1) - v, evaluated as 1 - 1/(v + sqrt(v^2 - 1)).
    static double cdf(double v)
    {
        if (v <= 1)
            return 0;
        return 1.0 - 1.0 / (v + std::sqrt((v - 1) * (v + 1)));
    }

    static double quantile(double p)
    {
        if (!(p > 0 && p < 1))
            throw DomainError("gfactor quantile: p must lie in the open interval (0, 1)");
        const double q = 1 - p;
        return (1 + q * q) / (2 * q);
    }

    static std::vector<double> sample(std::size_t n, std::uint64_t seed)
    {
        std::vector<double> out(n);
        auto rng = make_rng(seed);
        for (double& v : out)
            v = quantile(u01_open(rng));
        return out;
    }
};

//---------------------------------------------------------------------------
// Independent r = 1 oracles
//---------------------------------------------------------------------------

struct DecomposedCdf {
    double i1 = 0;  //!< Int_{(0, t]} u dF(u)
    double i2 = 0;  //!< Int_{(t, inf)} (u - sqrt(u^2 - t^2)) dF(u)
    double total = 0;
};

//! r = 1 section CDF assembled from the split (I1 + I2) / M1, integrating
//! against dF directly; shares no code path with section_cdf.
inline DecomposedCdf decomposed_cdf_oracle(const RadiusLaw& law, double t)
{
    if (!(t > 0))
        throw DomainError("decomposed_cdf_oracle: t must be positive");
    const double m1 = moment(law, 1);
    const double cut = transform_detail::effective_upper(law);
    const bool has_density = law.pdf(t).has_value();

    DecomposedCdf out;
    for (const Atom& a : law.atoms()) {
        if (a.position <= t)
            out.i1 += a.mass * a.position;
        else
            out.i2 += a.mass * t * t
                      / (a.position + std::sqrt((a.position - t) * (a.position + t)));
    }

    if (has_density) {
        auto opts = transform_detail::section_quad_options(cut);
        auto splits = law.breakpoints();
        if (t > 0) {
            auto lower = [&](double u) { return u * law.pdf(u).value_or(0.0); };
            auto res = integrate(lower, 0.0, std::min(t, cut), opts, splits);
            if (!res.converged)
                throw QuadratureError("decomposed_cdf_oracle: I1 quadrature failed");
            out.i1 += res.value;
        }
        if (cut > t) {
            // u - sqrt(u^2 - t^2) = t^2 / (u + sqrt(u^2 - t^2))
            auto tail = [&](double u) {
                return law.pdf(u).value_or(0.0) * t * t
                       / (u + std::sqrt((u - t) * (u + t)));
            };
            auto res = integrate(tail, t, cut, opts, splits);
            if (!res.converged)
                throw QuadratureError("decomposed_cdf_oracle: I2 quadrature failed");
            out.i2 += res.value;
        }
    }

    out.total = (out.i1 + out.i2) / m1;
    return out;
}

//! r = 1 section CDF through the mixture identity
//! F_1(t) = (t / M1) [P(xi <= t eta1) - P(xi <= t eta2)], with eta1 drawn
//! from GFactorLaw and eta2 uniform on [0, 1], both independent of xi.
inline double mixture_cdf_oracle(const RadiusLaw& law, double t)
{
    if (!(t > 0))
        throw DomainError("mixture_cdf_oracle: t must be positive");
    const double m1 = moment(law, 1);

    QuadratureOptions opts;
    opts.abs_tol = 1e-14;
    opts.rel_tol = 3e-11;

    // P(xi <= t eta1) via the quantile substitution p -> G^{-1}(p)
    std::vector<double> splits1;
    for (double b : law.breakpoints()) {
        const double v = b / t;
        if (v > 1 && std::isfinite(v))
            splits1.push_back(GFactorLaw::cdf(v));
    }
    auto p1 = integrate([&](double p) { return law.cdf(t * GFactorLaw::quantile(p)); }, 0.0,
                        1.0, opts, splits1);
    if (!p1.converged)
        throw QuadratureError("mixture_cdf_oracle: eta1 quadrature failed");

    // P(xi <= t eta2) with eta2 uniform on [0, 1]
    std::vector<double> splits2;
    for (double b : law.breakpoints()) {
        const double u = b / t;
        if (u > 0 && u < 1)
            splits2.push_back(u);
    }
    auto p2 = integrate([&](double u) { return law.cdf(t * u); }, 0.0, 1.0, opts, splits2);
    if (!p2.converged)
        throw QuadratureError("mixture_cdf_oracle: eta2 quadrature failed");

    return t * (p1.value - p2.value) / m1;
}

//---------------------------------------------------------------------------
// Tabulation
//---------------------------------------------------------------------------

//! Log-spaced grid toward zero, plus refinement at the top for r = 1: there
//! the section density generically ends in a sqrt cusp (or an inverse-sqrt
//! singularity below an atom) and the trapezoid mass check needs resolution.
inline std::vector<double> build_section_grid(const RadiusLaw& law, int r, const GridSpec& spec)
{
    if (spec.points < 2)
        throw InvalidParameterError("grid spec: need at least 2 points");
    if (!(spec.min_fraction > 0 && spec.min_fraction < 1))
        throw InvalidParameterError("grid spec: min_fraction must lie in (0, 1)");

    const double x_max = transform_detail::effective_upper(law);
    const double x_min = spec.min_fraction * x_max;
    const int n = spec.points;

    std::vector<double> grid(static_cast<std::size_t>(n));
    const double span = std::log(x_max / x_min);
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)] = x_min * std::exp(span * i / (n - 1));
    grid.front() = x_min;
    grid.back() = x_max;

    auto ladder = [&](double anchor) {
        for (double delta = 0.05; delta > 0.999e-7; delta /= 1.15) {
            const double p = anchor * (1 - delta);
            if (p > x_min && p < x_max)
                grid.push_back(p);
        }
    };
    if (r == 1)
        ladder(x_max);
    for (const Atom& a : law.atoms()) {
        if (a.position <= x_min || a.position > x_max)
            continue;
        if (a.position < x_max)
            grid.push_back(a.position);
        if (r == 1 && a.position < x_max)
            ladder(a.position);
    }

    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double u, double v) { return v - u <= 1e-13 * v; }),
               grid.end());
    grid.back() = x_max;
    return grid;
}

//! Tabulated section law: strictly increasing grid, CDF and PDF values, the
//! moment that scaled the transform and the provenance chain. Interpolation
//! is monotone piecewise-cubic in log-log coordinates, extended below the
//! first knot as a pure power.
class SectionLaw {
  public:
    SectionLaw() = default;

    SectionLaw(int r, double moment_mr, std::string source, GridSpec spec,
               std::vector<double> grid, std::vector<double> cdf_values,
               std::vector<double> pdf_values)
        : r_(r),
          moment_(moment_mr),
          source_(std::move(source)),
          spec_(spec),
          grid_(std::move(grid)),
          cdf_(std::move(cdf_values)),
          pdf_(std::move(pdf_values))
    {
        if (r_ < 1)
            throw InvalidParameterError("section law: r must be a positive integer");
        if (grid_.empty() || grid_.size() != cdf_.size() || grid_.size() != pdf_.size())
            throw InvalidParameterError("section law: grid/cdf/pdf sizes must match");
        for (std::size_t i = 0; i + 1 < grid_.size(); ++i)
            if (!(grid_[i] < grid_[i + 1]))
                throw InvalidParameterError("section law: grid must be strictly increasing");
        finalize();
    }

    int r() const { return r_; }
    double moment() const { return moment_; }
    const std::string& source() const { return source_; }
    const GridSpec& grid_spec() const { return spec_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& cdf_values() const { return cdf_; }
    const std::vector<double>& pdf_values() const { return pdf_; }
    double x_min() const { return grid_.front(); }
    double x_max() const { return grid_.back(); }

    //! Used by the iterated transform, where r counts the whole chain.
    void set_total_codimension(int r)
    {
        if (r < 1)
            throw InvalidParameterError("section law: r must be a positive integer");
        r_ = r;
    }

    double cdf_at(double x) const
    {
        const auto& in = interp();
        if (x <= 0)
            return 0;
        if (x >= x_max())
            return 1;
        if (x < x_min()) {
            const double slope = in.log_cdf.front_derivative();
            if (slope <= 0)
                return cdf_.front();
            return cdf_.front() * std::pow(x / x_min(), slope);
        }
        return std::min(1.0, std::exp(in.log_cdf(std::log(x))));
    }

    double pdf_at(double x) const
    {
        const auto& in = interp();
        if (!in.has_pdf || x <= 0 || x > x_max())
            return 0;
        if (x < in.pdf_x_lo) {
            const double slope = in.log_pdf.front_derivative();
            if (slope <= 0)
                return std::exp(in.log_pdf.front_y());
            return std::exp(in.log_pdf.front_y()) * std::pow(x / in.pdf_x_lo, slope);
        }
        return std::exp(in.log_pdf(std::log(x)));
    }

    double quantile_at(double p) const
    {
        const auto& in = interp();
        if (!(p >= 0 && p <= 1))
            throw DomainError("quantile level must lie in [0, 1]");
        if (p <= 0)
            return 0;
        if (p >= 1)
            return x_max();
        if (p <= cdf_.front()) {
            const double slope = in.log_cdf.front_derivative();
            if (slope <= 0)
                return x_min();
            return x_min() * std::pow(p / cdf_.front(), 1.0 / slope);
        }
        const double target = std::log(p);
        double lo = std::log(x_min());
        double hi = std::log(x_max());
        for (int it = 0; it < 200 && hi - lo > 4 * DBL_EPSILON * std::fabs(hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            (in.log_cdf(mid) < target ? lo : hi) = mid;
        }
        return std::exp(0.5 * (lo + hi));
    }

    LawPtr as_radius_law() const;

    bool operator==(const SectionLaw& other) const
    {
        return r_ == other.r_ && moment_ == other.moment_ && source_ == other.source_
               && spec_ == other.spec_ && grid_ == other.grid_ && cdf_ == other.cdf_
               && pdf_ == other.pdf_;
    }

  private:
    struct Interp {
        MonotoneCubicInterpolant log_cdf;
        MonotoneCubicInterpolant log_pdf;
        bool has_pdf = false;
        double pdf_x_lo = 0;
    };

    void finalize()
    {
        if (grid_.size() < 2)
            return;
        auto in = std::make_shared<Interp>();

        std::vector<double> lx(grid_.size()), lc(grid_.size());
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            lx[i] = std::log(grid_[i]);
            lc[i] = std::log(std::max(cdf_[i], 1e-320));
        }
        in->log_cdf = MonotoneCubicInterpolant(lx, lc);

        std::vector<double> px, pv;
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            if (pdf_[i] > 0) {
                px.push_back(std::log(grid_[i]));
                pv.push_back(std::log(pdf_[i]));
            }
        }
        if (px.size() >= 2) {
            in->log_pdf = MonotoneCubicInterpolant(std::move(px), std::move(pv));
            in->has_pdf = true;
            in->pdf_x_lo = std::exp(in->log_pdf.front_x());
        }
        interp_ = std::move(in);
    }

    const Interp& interp() const
    {
        if (!interp_)
            throw DomainError("section law: table has fewer than two points");
        return *interp_;
    }

    int r_ = 1;
    double moment_ = 0;
    std::string source_;
    GridSpec spec_;
    std::vector<double> grid_, cdf_, pdf_;
    std::shared_ptr<const Interp> interp_;
};

//! A tabulated section law viewed as a radius law, so it can be pushed
//! through the transform again.
class TabulatedSectionLaw final : public RadiusLaw {
  public:
    explicit TabulatedSectionLaw(SectionLaw table) : table_(std::move(table)) {}

    double cdf(double x) const override { return table_.cdf_at(x); }
    std::optional<double> pdf(double x) const override { return table_.pdf_at(x); }
    double quantile(double p) const override { return table_.quantile_at(p); }
    double lower_endpoint() const override { return 0.0; }
    double upper_support() const override { return table_.x_max(); }
    std::optional<EvtClass> evt_class() const override { return std::nullopt; }
    std::vector<double> breakpoints() const override { return table_.grid(); }
    std::string describe() const override { return table_.source(); }

    const SectionLaw& table() const { return table_; }

  private:
    SectionLaw table_;
};

inline LawPtr SectionLaw::as_radius_law() const
{
    return std::make_shared<TabulatedSectionLaw>(*this);
}

//! Tabulate F_r and f_r of `law` over the standard grid. The pdf value at a
//! node carrying an atom (where the r = 1 density is infinite) is stored as
//! zero; the neighbouring refinement ladder carries the mass.
inline SectionLaw tabulate_section_law(const RadiusLaw& law, int r, const GridSpec& spec = {},
                                       int threads = 0)
{
    if (r < 1)
        throw DomainError("tabulate_section_law: r must be a positive integer");
    const double mr = moment(law, r);
    auto grid = build_section_grid(law, r, spec);

    std::vector<double> cdf(grid.size()), pdf(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        cdf[i] = section_cdf_with_moment(law, r, grid[i], mr);
        try {
            pdf[i] = section_pdf_with_moment(law, r, grid[i], mr);
        }
        catch (const SingularDensityError&) {
            pdf[i] = 0.0;
        }
    });

    for (std::size_t i = 1; i < cdf.size(); ++i)
        cdf[i] = std::max(cdf[i], cdf[i - 1]);
    if (cdf.front() > 1e-6)
        throw QuadratureError("tabulate_section_law: cdf(x_min) = " + std::to_string(cdf.front())
                              + " exceeds 1e-6; lower the grid min_fraction");
    if (cdf.back() < 1 - 1e-6)
        throw QuadratureError("tabulate_section_law: table top falls short of 1 at x = "
                              + std::to_string(grid.back()));

    std::string source = "wicksell(r=" + std::to_string(r) + ") of " + law.describe();
    return SectionLaw(r, mr, std::move(source), spec, std::move(grid), std::move(cdf),
                      std::move(pdf));
}

//! (n, k) section-plane convenience spelling; the transform depends on the
//! dimensions only through r = n - k, and so does the result.
inline SectionLaw tabulate_section_law_nk(const RadiusLaw& law, int n, int k,
                                          const GridSpec& spec = {}, int threads = 0)
{
    if (k < 1 || k >= n)
        throw DomainError("tabulate_section_law_nk: need 1 <= k < n");
    return tabulate_section_law(law, n - k, spec, threads);
}

//! One more unit cut: treats the tabulated CDF as the input law, recomputes
//! its first moment by quadrature on the grid, and applies the r = 1
//! transform. The result's r counts the whole chain.
inline SectionLaw iterate_section(const SectionLaw& table, int threads = 0)
{
    if (table.grid().size() < 2)
        throw InvalidParameterError("iterate_section: degenerate single-point grid");
    auto law = table.as_radius_law();
    SectionLaw next = tabulate_section_law(*law, 1, table.grid_spec(), threads);
    next.set_total_codimension(table.r() + 1);
    return next;
}

//! Sup distance between two tabulated CDFs, probed at both knot sets.
inline double cdf_sup_distance(const SectionLaw& a, const SectionLaw& b)
{
    double d = 0;
    for (double x : a.grid())
        d = std::max(d, std::fabs(a.cdf_at(x) - b.cdf_at(x)));
    for (double x : b.grid())
        d = std::max(d, std::fabs(a.cdf_at(x) - b.cdf_at(x)));
    return d;
}

}  // namespace wicksell
