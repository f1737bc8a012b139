#pragma once

#include <stdexcept>
#include <string>

namespace egfkit {

//! Base class for all egfkit errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

//! Adaptive quadrature ran out of subdivision budget. Carries the partial
//! estimate accumulated so far and its error estimate.
class integration_error : public error {
public:
    integration_error(const std::string& what, double partial, double est_error)
        : error(what), partial_(partial), est_error_(est_error) {}
    double partial() const { return partial_; }
    double est_error() const { return est_error_; }

private:
    double partial_;
    double est_error_;
};

//! An integral required by an operation diverges; the message names the
//! violated convergence condition.
class convergence_error : public error {
public:
    using error::error;
};

//! Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

//! Residual-lifetime quantity requested at a point with zero survival.
class degenerate_tail_error : public error {
public:
    using error::error;
};

//! Mean (or mean residual life) does not exist for the distribution.
class infinite_mean_error : public error {
public:
    using error::error;
};

//! The moment estimator is undefined for the given sample (mean <= 1).
class estimator_undefined_error : public error {
public:
    using error::error;
};

//! Too few observations for the requested computation.
class insufficient_data_error : public error {
public:
    using error::error;
};

//! Sample has zero spread where a scale estimate is required.
class degenerate_sample_error : public error {
public:
    using error::error;
};

} // namespace egfkit
