// SPDX-License-Identifier: Apache-2.0
//! \file wicksell/laws.hpp
//! Catalog of sphere-radius distributions.
//!
//! Every law exposes the CDF, the density of its absolutely continuous part,
//! the quantile, point masses, the lower endpoint, the (possibly infinite)
//! upper end of the support and its minima domain-of-attraction tag. Laws are
//! immutable after construction; all evaluations are pure.
#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wicksell/common.hpp"
#include "wicksell/rng.hpp"

namespace wicksell {

class RadiusLaw;
using LawPtr = std::shared_ptr<const RadiusLaw>;

class RadiusLaw {
  public:
    virtual ~RadiusLaw() = default;

    virtual double cdf(double x) const = 0;

    //! Density of the absolutely continuous part; nullopt when the law is
    //! purely atomic (point masses live in atoms() instead).
    virtual std::optional<double> pdf(double x) const = 0;

    //! Generalized inverse of the CDF; p must lie in [0, 1].
    virtual double quantile(double p) const = 0;

    //! Lower endpoint eta = inf{x : F(x) > 0}.
    virtual double lower_endpoint() const = 0;

    //! Supremum of the support; +infinity when unbounded.
    virtual double upper_support() const = 0;

    virtual std::optional<EvtClass> evt_class() const = 0;

    virtual std::vector<Atom> atoms() const { return {}; }

    //! r-th moment when a closed form exists.
    virtual std::optional<double> analytic_moment(int /*r*/) const { return std::nullopt; }

    //! Abscissae where cdf/pdf may be non-smooth; quadratures split here.
    virtual std::vector<double> breakpoints() const
    {
        std::vector<double> b{lower_endpoint()};
        if (std::isfinite(upper_support()))
            b.push_back(upper_support());
        for (const Atom& a : atoms())
            b.push_back(a.position);
        return b;
    }

    //! Quantile of the size-biased law u^r dF(u)/M_r when a closed form exists.
    virtual std::optional<double> size_biased_quantile(int /*r*/, double /*p*/) const
    {
        return std::nullopt;
    }

    //! Canonical spec string; parse_law_spec() round-trips it.
    virtual std::string describe() const = 0;

    //! CDF with the point masses at or below x removed.
    double continuous_cdf(double x) const
    {
        double c = cdf(x);
        for (const Atom& a : atoms())
            if (a.position <= x)
                c -= a.mass;
        return c < 0 ? 0 : c;
    }

    //! Inverse-transform sampling; deterministic for fixed (seed, n).
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const
    {
        std::vector<double> out(n);
        auto rng = make_rng(seed);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = quantile(u01(rng));
        return out;
    }

  protected:
    static void check_level(double p)
    {
        if (!(p >= 0 && p <= 1))
            throw DomainError("quantile level must lie in [0, 1]");
    }

    static std::string format_param(double v)
    {
        std::ostringstream os;
        os.precision(17);
        os << v;
        return os.str();
    }
};

//---------------------------------------------------------------------------
// Catalog
//---------------------------------------------------------------------------

//! F(x) = x^alpha on [0, 1].
class PowerLaw final : public RadiusLaw {
  public:
    explicit PowerLaw(double alpha) : alpha_(alpha)
    {
        if (!(alpha > 0))
            throw InvalidParameterError("power law: alpha must be positive");
    }

    double cdf(double x) const override
    {
        if (x <= 0)
            return 0;
        if (x >= 1)
            return 1;
        return std::pow(x, alpha_);
    }

    std::optional<double> pdf(double x) const override
    {
        if (x <= 0 || x >= 1)
            return 0.0;
        return alpha_ * std::pow(x, alpha_ - 1);
    }

    double quantile(double p) const override
    {
        check_level(p);
        return std::pow(p, 1.0 / alpha_);
    }

    double lower_endpoint() const override { return 0; }
    double upper_support() const override { return 1; }
    std::optional<EvtClass> evt_class() const override { return EvtClass::weibull(alpha_); }

    std::optional<double> analytic_moment(int r) const override
    {
        return alpha_ / (alpha_ + r);
    }

    std::optional<double> size_biased_quantile(int r, double p) const override
    {
        return std::pow(p, 1.0 / (alpha_ + r));
    }

    std::string describe() const override { return "power --alpha " + format_param(alpha_); }

    double alpha() const { return alpha_; }

  private:
    double alpha_;
};

//! Point mass at rho.
class DiracLaw final : public RadiusLaw {
  public:
    explicit DiracLaw(double rho) : rho_(rho)
    {
        if (!(rho > 0))
            throw InvalidParameterError("dirac law: rho must be positive");
    }

    double cdf(double x) const override { return x >= rho_ ? 1.0 : 0.0; }
    std::optional<double> pdf(double /*x*/) const override { return std::nullopt; }

    double quantile(double p) const override
    {
        check_level(p);
        return rho_;
    }

    double lower_endpoint() const override { return rho_; }
    double upper_support() const override { return rho_; }

    // alpha is immaterial: eta = rho > 0, so only the shifted-support rule
    // ever applies downstream.
    std::optional<EvtClass> evt_class() const override { return EvtClass::weibull(1.0); }

    std::vector<Atom> atoms() const override { return {{rho_, 1.0}}; }
    std::optional<double> analytic_moment(int r) const override { return ipow(rho_, r); }

    std::optional<double> size_biased_quantile(int /*r*/, double /*p*/) const override
    {
        return rho_;
    }

    std::string describe() const override { return "dirac --rho " + format_param(rho_); }

  private:
    double rho_;
};

//! F(x) = 1 - exp(-(x/lambda)^alpha) on (0, inf).
class WeibullLaw final : public RadiusLaw {
  public:
    WeibullLaw(double alpha, double lambda) : alpha_(alpha), lambda_(lambda)
    {
        if (!(alpha > 0) || !(lambda > 0))
            throw InvalidParameterError("weibull law: alpha and lambda must be positive");
    }

    double cdf(double x) const override
    {
        if (x <= 0)
            return 0;
        return -std::expm1(-std::pow(x / lambda_, alpha_));
    }

    std::optional<double> pdf(double x) const override
    {
        if (x <= 0)
            return 0.0;
        const double z = std::pow(x / lambda_, alpha_);
        return alpha_ / x * z * std::exp(-z);
    }

    double quantile(double p) const override
    {
        check_level(p);
        if (p >= 1)
            return std::numeric_limits<double>::infinity();
        return lambda_ * std::pow(-std::log1p(-p), 1.0 / alpha_);
    }

    double lower_endpoint() const override { return 0; }
    double upper_support() const override { return std::numeric_limits<double>::infinity(); }
    std::optional<EvtClass> evt_class() const override { return EvtClass::weibull(alpha_); }

    std::optional<double> analytic_moment(int r) const override
    {
        return ipow(lambda_, r) * std::tgamma(1.0 + r / alpha_);
    }

    std::string describe() const override
    {
        return "weibull --alpha " + format_param(alpha_) + " --lambda " + format_param(lambda_);
    }

  private:
    double alpha_, lambda_;
};

//! F(x) = exp(-1/x) for 0 < x < 1, truncated to 1 at x = 1. The truncation
//! keeps every moment finite; the lower tail (all that matters here) is the
//! untouched Gumbel-class essential singularity at 0.
class TruncRecipExpLaw final : public RadiusLaw {
  public:
    double cdf(double x) const override
    {
        if (x <= 0)
            return 0;
        if (x >= 1)
            return 1;
        return std::exp(-1.0 / x);
    }

    std::optional<double> pdf(double x) const override
    {
        if (x <= 0 || x >= 1)
            return 0.0;
        return std::exp(-1.0 / x) / (x * x);
    }

    double quantile(double p) const override
    {
        check_level(p);
        if (p <= 0)
            return 0;
        const double e_inv = std::exp(-1.0);
        if (p >= e_inv)
            return 1;
        return -1.0 / std::log(p);
    }

    double lower_endpoint() const override { return 0; }
    double upper_support() const override { return 1; }
    std::optional<EvtClass> evt_class() const override { return EvtClass::gumbel(); }

    std::vector<Atom> atoms() const override { return {{1.0, 1.0 - std::exp(-1.0)}}; }

    std::string describe() const override { return "truncrecipexp"; }
};

//! Support shifted right by eta0 > 0: F(x) = inner(x - eta0).
class ShiftedLaw final : public RadiusLaw {
  public:
    ShiftedLaw(LawPtr inner, double eta0) : inner_(std::move(inner)), eta0_(eta0)
    {
        if (!inner_)
            throw InvalidParameterError("shifted law: inner law required");
        if (eta0 < 0)
            throw InvalidParameterError("shifted law: eta0 must be non-negative");
    }

    double cdf(double x) const override { return inner_->cdf(x - eta0_); }

    std::optional<double> pdf(double x) const override
    {
        auto p = inner_->pdf(x - eta0_);
        return p;
    }

    double quantile(double p) const override { return inner_->quantile(p) + eta0_; }

    double lower_endpoint() const override { return inner_->lower_endpoint() + eta0_; }

    double upper_support() const override { return inner_->upper_support() + eta0_; }

    std::optional<EvtClass> evt_class() const override { return inner_->evt_class(); }

    std::vector<Atom> atoms() const override
    {
        auto as = inner_->atoms();
        for (auto& a : as)
            a.position += eta0_;
        return as;
    }

    std::vector<double> breakpoints() const override
    {
        auto b = inner_->breakpoints();
        for (auto& x : b)
            x += eta0_;
        return b;
    }

    std::string describe() const override
    {
        return "shifted --eta0 " + format_param(eta0_) + " --inner " + inner_->describe();
    }

    const RadiusLaw& inner() const { return *inner_; }
    double eta0() const { return eta0_; }

  private:
    LawPtr inner_;
    double eta0_;
};

//! Dilation by c > 0: F(x) = inner(x / c). Used by equivariance checks.
class ScaledLaw final : public RadiusLaw {
  public:
    ScaledLaw(LawPtr inner, double scale) : inner_(std::move(inner)), scale_(scale)
    {
        if (!inner_)
            throw InvalidParameterError("scaled law: inner law required");
        if (!(scale > 0))
            throw InvalidParameterError("scaled law: scale must be positive");
    }

    double cdf(double x) const override { return inner_->cdf(x / scale_); }

    std::optional<double> pdf(double x) const override
    {
        auto p = inner_->pdf(x / scale_);
        if (!p)
            return std::nullopt;
        return *p / scale_;
    }

    double quantile(double p) const override { return scale_ * inner_->quantile(p); }
    double lower_endpoint() const override { return scale_ * inner_->lower_endpoint(); }
    double upper_support() const override { return scale_ * inner_->upper_support(); }
    std::optional<EvtClass> evt_class() const override { return inner_->evt_class(); }

    std::vector<Atom> atoms() const override
    {
        auto as = inner_->atoms();
        for (auto& a : as)
            a.position *= scale_;
        return as;
    }

    std::vector<double> breakpoints() const override
    {
        auto b = inner_->breakpoints();
        for (auto& x : b)
            x *= scale_;
        return b;
    }

    std::optional<double> analytic_moment(int r) const override
    {
        auto m = inner_->analytic_moment(r);
        if (!m)
            return std::nullopt;
        return ipow(scale_, r) * *m;
    }

    std::optional<double> size_biased_quantile(int r, double p) const override
    {
        auto q = inner_->size_biased_quantile(r, p);
        if (!q)
            return std::nullopt;
        return scale_ * *q;
    }

    std::string describe() const override
    {
        return "scaled --c " + format_param(scale_) + " --inner " + inner_->describe();
    }

  private:
    LawPtr inner_;
    double scale_;
};

//---------------------------------------------------------------------------
// Factories and the spec-string grammar
//---------------------------------------------------------------------------

inline LawPtr make_power_law(double alpha) { return std::make_shared<PowerLaw>(alpha); }
inline LawPtr make_uniform_law() { return std::make_shared<PowerLaw>(1.0); }
inline LawPtr make_dirac_law(double rho) { return std::make_shared<DiracLaw>(rho); }
inline LawPtr make_weibull_law(double alpha, double lambda)
{
    return std::make_shared<WeibullLaw>(alpha, lambda);
}
inline LawPtr make_trunc_recip_exp_law() { return std::make_shared<TruncRecipExpLaw>(); }
inline LawPtr make_shifted_law(LawPtr inner, double eta0)
{
    return std::make_shared<ShiftedLaw>(std::move(inner), eta0);
}
inline LawPtr make_scaled_law(LawPtr inner, double scale)
{
    return std::make_shared<ScaledLaw>(std::move(inner), scale);
}

namespace law_detail {

inline std::vector<std::string> tokenize(const std::string& text)
{
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

inline double parse_number(const std::string& flag, const std::vector<std::string>& tokens,
                           std::size_t& i)
{
    if (i >= tokens.size())
        throw InvalidParameterError("law spec: " + flag + " needs a value");
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(tokens[i], &used);
    }
    catch (const std::exception&) {
        throw InvalidParameterError("law spec: bad number for " + flag);
    }
    if (used != tokens[i].size())
        throw InvalidParameterError("law spec: bad number for " + flag);
    ++i;
    return v;
}

inline LawPtr parse(const std::vector<std::string>& tokens, std::size_t& i)
{
    if (i >= tokens.size())
        throw InvalidParameterError("law spec: missing law kind");
    const std::string kind = tokens[i++];

    std::optional<double> alpha, rho, lambda, eta0, scale;
    LawPtr inner;
    while (i < tokens.size()) {
        const std::string& flag = tokens[i];
        if (flag == "--alpha") {
            ++i;
            alpha = parse_number(flag, tokens, i);
        }
        else if (flag == "--rho") {
            ++i;
            rho = parse_number(flag, tokens, i);
        }
        else if (flag == "--lambda") {
            ++i;
            lambda = parse_number(flag, tokens, i);
        }
        else if (flag == "--eta0") {
            ++i;
            eta0 = parse_number(flag, tokens, i);
        }
        else if (flag == "--c") {
            ++i;
            scale = parse_number(flag, tokens, i);
        }
        else if (flag == "--inner") {
            ++i;
            inner = parse(tokens, i);  // consumes the rest
        }
        else {
            throw InvalidParameterError("law spec: unknown flag " + flag);
        }
    }

    auto reject_extras = [&](bool a, bool r, bool l, bool e, bool c, bool in) {
        if ((alpha && !a) || (rho && !r) || (lambda && !l) || (eta0 && !e) || (scale && !c)
            || (inner && !in))
            throw InvalidParameterError("law spec: flag not valid for kind '" + kind + "'");
    };

    if (kind == "power") {
        reject_extras(true, false, false, false, false, false);
        if (!alpha)
            throw InvalidParameterError("law spec: power needs --alpha");
        return make_power_law(*alpha);
    }
    if (kind == "dirac") {
        reject_extras(false, true, false, false, false, false);
        if (!rho)
            throw InvalidParameterError("law spec: dirac needs --rho");
        return make_dirac_law(*rho);
    }
    if (kind == "weibull") {
        reject_extras(true, false, true, false, false, false);
        if (!alpha || !lambda)
            throw InvalidParameterError("law spec: weibull needs --alpha and --lambda");
        return make_weibull_law(*alpha, *lambda);
    }
    if (kind == "truncrecipexp") {
        reject_extras(false, false, false, false, false, false);
        return make_trunc_recip_exp_law();
    }
    if (kind == "shifted") {
        reject_extras(false, false, false, true, false, true);
        if (!eta0 || !inner)
            throw InvalidParameterError("law spec: shifted needs --eta0 and --inner");
        return make_shifted_law(std::move(inner), *eta0);
    }
    if (kind == "scaled") {
        reject_extras(false, false, false, false, true, true);
        if (!scale || !inner)
            throw InvalidParameterError("law spec: scaled needs --c and --inner");
        return make_scaled_law(std::move(inner), *scale);
    }
    throw InvalidParameterError("law spec: unknown kind '" + kind + "'");
}

}  // namespace law_detail

//! Build a law from its spec string, e.g. "power --alpha 0.5" or
//! "shifted --eta0 0.5 --inner power --alpha 1". Everything after --inner is
//! the inner law's own spec.
inline LawPtr parse_law_spec(const std::string& text)
{
    auto tokens = law_detail::tokenize(text);
    std::size_t i = 0;
    LawPtr law = law_detail::parse(tokens, i);
    if (i != tokens.size())
        throw InvalidParameterError("law spec: trailing tokens");
    return law;
}

}  // namespace wicksell
