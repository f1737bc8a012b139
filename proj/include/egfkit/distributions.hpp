#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "egfkit/numerics.hpp"

namespace egfkit {

enum class Family {
    pareto_i,
    exponential,
    uniform,
    power,
    lomax,
    weibull,
    gamma_shifted,
    beta_exponential,
    tilted_pareto,
    inverse_beta,
    benini,
    half_normal,
    log_normal,
};

//! Canonical CLI name of a family (e.g. "paretoI", "gamma_shifted").
std::string_view family_name(Family family);

//! Number of parameters a family takes (uniform: 2, half/log normal: 0).
std::size_t family_param_count(Family family);

//! A sample with its order statistics. Values must be finite, n >= 1.
class Sample {
public:
    explicit Sample(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    //! Order statistics X_(1) <= ... <= X_(n).
    const std::vector<double>& sorted() const { return sorted_; }
    double mean() const;
    //! Sample standard deviation (divisor n-1); requires n >= 2.
    double stddev() const;

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
};

//! A lifetime distribution family with fixed parameters.
//!
//! Parameter order follows the CLI contract: paretoI:alpha,
//! exponential:lambda, uniform:a,b, power:c, lomax:m, weibull:lambda,
//! gamma_shifted:lambda, beta_exponential:lambda, tilted_pareto:lambda,
//! inverse_beta:lambda, benini:lambda, half_normal:-, log_normal:-.
class DistributionSpec {
public:
    DistributionSpec(Family family, std::vector<double> params);

    //! Parse "family:p1,p2" (or bare "family" when no parameters).
    static DistributionSpec parse(std::string_view text);

    Family family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    Interval support() const { return support_; }
    //! Canonical "family:p1,p2" form.
    std::string name() const;

    //! Density; 0 outside the support.
    double pdf(double x) const;
    //! P(X <= x), clamped to [0,1].
    double cdf(double x) const;
    //! P(X > x) = 1 - cdf(x), evaluated in tail-stable form.
    double survival(double x) const;
    //! Inverse CDF; u must lie in (0,1).
    double quantile(double u) const;
    //! Hazard rate pdf/survival; requires survival(t) > 0.
    double hazard(double t) const;
    //! Mean residual life integrate(survival, [t,inf)) / survival(t).
    //! Requires a finite mean and survival(t) > 0.
    double mean_residual_life(double t) const;

    bool has_finite_mean() const;

    //! n inverse-CDF draws from the stream.
    Sample sample(std::size_t n, RngStream& rng) const;

private:
    Family family_;
    std::vector<double> params_;
    Interval support_;
};

} // namespace egfkit
