#include "egfkit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace egfkit {

namespace {

// 15-point Kronrod nodes on [-1,1] (positive half; symmetric about 0) and
// weights, with the embedded 7-point Gauss weights. QUADPACK qk15 constants.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

// Gauss-Kronrod 15(7) rule on [a,b]. Nodes are interior, so endpoint
// singularities are never evaluated directly. Non-finite integrand values
// are treated as zero; the adaptive loop shrinks panels around them.
Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    double kronrod = 0.0;
    double gauss = 0.0;
    double abs_int = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kKronrodNodes[i];
        double flo = f(mid - dx);
        double fhi = (i == 7) ? 0.0 : f(mid + dx);
        if (!std::isfinite(flo)) flo = 0.0;
        if (!std::isfinite(fhi)) fhi = 0.0;
        const double pair = (i == 7) ? flo : flo + fhi;
        kronrod += kKronrodWeights[i] * pair;
        abs_int += kKronrodWeights[i] * (std::abs(flo) + std::abs(fhi));
        if (i % 2 == 1 || i == 7) gauss += kGaussWeights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    abs_int *= half;

    double err = std::abs(kronrod - gauss);
    // QUADPACK-style sharpening of the raw |K-G| difference.
    if (abs_int > 0.0 && err > 0.0) {
        err = abs_int * std::min(1.0, std::pow(200.0 * err / abs_int, 1.5));
    }
    return Panel{a, b, kronrod, err};
}

constexpr std::size_t kPanelBudget = std::size_t{1} << 15;

} // namespace

void Interval::validate() const {
    if (!std::isfinite(lower)) throw domain_error("interval lower bound must be finite");
    if (!(lower < upper)) throw domain_error("interval requires lower < upper");
}

QuadratureResult integrate_full(const std::function<double(double)>& f,
                                Interval domain, double rel_tol) {
    domain.validate();
    if (!(rel_tol > 0.0) || rel_tol > 1e-2) {
        throw domain_error("rel_tol must lie in (0, 1e-2]");
    }

    std::function<double(double)> g;
    double lo;
    double hi;
    if (domain.is_unbounded()) {
        // x = lower + u/(1-u) maps [0,1) onto [lower, inf); dx = du/(1-u)^2.
        const double base = domain.lower;
        g = [&f, base](double u) {
            const double om = 1.0 - u;
            return f(base + u / om) / (om * om);
        };
        lo = 0.0;
        hi = 1.0;
    } else {
        g = f;
        lo = domain.lower;
        hi = domain.upper;
    }

    std::priority_queue<Panel> panels;
    Panel first = gk15(g, lo, hi);
    double total = first.value;
    double total_err = first.err;
    panels.push(first);
    std::size_t n_panels = 1;

    const auto tolerance = [&](double t) {
        return rel_tol * std::max(std::abs(t), 1e-12);
    };

    while (total_err > tolerance(total) && n_panels < kPanelBudget) {
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Panel no longer splittable at double precision; keep its
            // contribution and stop refining it.
            total_err -= worst.err;
            Panel pinned = worst;
            pinned.err = 0.0;
            panels.push(pinned);
            continue;
        }
        Panel left = gk15(g, worst.a, mid);
        Panel right = gk15(g, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        panels.push(left);
        panels.push(right);
        ++n_panels;
    }

    if (total_err > tolerance(total)) {
        throw integration_error("quadrature did not converge within panel budget",
                                total, total_err);
    }
    return QuadratureResult{total, total_err, n_panels};
}

double integrate(const std::function<double(double)>& f, Interval domain,
                 double rel_tol) {
    return integrate_full(f, domain, rel_tol).value;
}

double differentiate(const std::function<double(double)>& f, double t,
                     double step) {
    if (!(step > 0.0)) throw domain_error("differentiation step must be positive");
    const double hi = f(t + step);
    const double lo = f(t - step);
    if (!std::isfinite(hi) || !std::isfinite(lo)) {
        throw domain_error("function undefined at differentiation stencil point");
    }
    return (hi - lo) / (2.0 * step);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t mix64(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t state = 0x8000000080001105ull;
    std::uint64_t h = 0;
    for (std::uint64_t p : parts) {
        state ^= p;
        h = splitmix64(state);
    }
    return h;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id),
      engine_(mix64({seed, stream_id})) {}

double RngStream::next_uniform() {
    // 53 mantissa bits, offset by half an ulp: result is strictly in (0,1),
    // so inverse-CDF sampling never evaluates Q(0) or Q(1).
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

} // namespace egfkit
