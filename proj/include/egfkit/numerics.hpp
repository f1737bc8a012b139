#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <random>

#include "egfkit/errors.hpp"

namespace egfkit {

//! Integration domain. `upper` may be +infinity; `lower` must be finite.
struct Interval {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();

    bool is_unbounded() const { return !std::isfinite(upper); }
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0;
    std::size_t panels = 0;
};

//! Adaptive Gauss-Kronrod quadrature of f over domain.
//!
//! Semi-infinite domains are mapped to [0,1) via x = lower + u/(1-u); one
//! adaptive engine handles both cases. Stops when the accumulated error
//! estimate drops below rel_tol * max(|I|, 1e-12); throws integration_error
//! (carrying the partial estimate) once the panel budget of 2^15 is spent.
QuadratureResult integrate_full(const std::function<double(double)>& f,
                                Interval domain, double rel_tol);

//! Convenience wrapper returning just the value.
double integrate(const std::function<double(double)>& f, Interval domain,
                 double rel_tol);

//! Central difference (f(t+step) - f(t-step)) / (2 step).
double differentiate(const std::function<double(double)>& f, double t,
                     double step);

//! Mix an id list into a single 64-bit stream id (splitmix64 chain).
//! Used to key independent RngStream instances off structured coordinates.
std::uint64_t mix64(std::initializer_list<std::uint64_t> parts);

//! Seeded, splittable random stream. Equal (seed, stream_id) pairs produce
//! identical sequences; distinct stream_ids give statistically independent
//! ones. Single-owner: never share an instance across threads.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    //! Next variate, strictly inside (0,1).
    double next_uniform();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

} // namespace egfkit
