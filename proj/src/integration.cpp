#include "credal/integration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace credal {

BoundedFunctionSamples::BoundedFunctionSamples(std::vector<double> v, double m)
    : values(std::move(v)), bound_M(m) {
    if (!(bound_M > 0.0)) {
        throw std::invalid_argument("sup-norm bound must be positive");
    }
    for (double x : values) {
        if (std::abs(x) > bound_M) {
            throw std::invalid_argument("sample exceeds certified bound");
        }
    }
}

double choquet_against_capacity(const std::vector<double>& capacity_grades,
                                const std::vector<double>& f) {
    if (capacity_grades.size() != f.size() || f.empty()) {
        throw std::invalid_argument("capacity and sample lengths must match");
    }
    const size_t m = f.size();
    std::vector<size_t> order(m);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        if (f[i] != f[j]) return f[i] > f[j];
        return i < j;  // deterministic tie-break by point index
    });

    // Sum over descending values of (f_(i) - f_(i+1)) * Pi(top-i set), the
    // last layer carried at Pi(X) = max grade; equivalent to the signed
    // two-sided layer-cake for negative samples.
    double value = 0.0;
    double prefix_sup = 0.0;
    for (size_t k = 0; k + 1 < m; ++k) {
        prefix_sup = std::max(prefix_sup, capacity_grades[order[k]]);
        value += (f[order[k]] - f[order[k + 1]]) * prefix_sup;
    }
    prefix_sup = std::max(prefix_sup, capacity_grades[order[m - 1]]);
    value += f[order[m - 1]] * prefix_sup;
    return value;
}

double choquet_discrete(const SupportCloud& cloud, const BoundedFunctionSamples& f) {
    if (static_cast<int>(f.values.size()) != cloud.size()) {
        throw std::invalid_argument("samples must cover every cloud point");
    }
    return choquet_against_capacity(cloud.grades(), f.values);
}

double choquet_trapezoid_identity(const TrapezoidPossibility& dist) {
    if (dist.domain_lo() < 0.0) {
        throw std::invalid_argument("identity form needs a nonnegative domain");
    }
    return dist.b() + dist.delta() / 2.0;
}

double lebesgue_expectation_trapezoid(const TrapezoidPossibility& dist) {
    const double area = dist.plateau_length() + dist.delta();
    if (area <= 0.0) {
        throw std::invalid_argument("zero-area support");
    }
    // Equal ramp widths make the density symmetric about the plateau midpoint.
    return (dist.a() + dist.b()) / 2.0;
}

std::pair<double, double> upper_lower_expectation(const SupportCloud& cloud,
                                                  const BoundedFunctionSamples& f) {
    if (cloud.size() > 12) {
        throw std::invalid_argument("enumeration limit: cloud too large");
    }
    if (static_cast<int>(f.values.size()) != cloud.size()) {
        throw std::invalid_argument("samples must cover every cloud point");
    }
    const double upper = choquet_against_capacity(cloud.grades(), f.values);
    std::vector<double> neg(f.values.size());
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = -f.values[i];
    const double lower = -choquet_against_capacity(cloud.grades(), neg);
    return {lower, upper};
}

double sugeno_discrete(const SupportCloud& cloud, const std::vector<double>& f) {
    if (static_cast<int>(f.size()) != cloud.size()) {
        throw std::invalid_argument("samples must cover every cloud point");
    }
    for (double v : f) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("Sugeno integrand must lie in [0, 1]");
        }
    }
    // sup over alpha of min(alpha, Pi{f >= alpha}) is attained on the finite
    // candidate set {f values} union {grades}.
    std::vector<double> candidates = f;
    candidates.insert(candidates.end(), cloud.grades().begin(), cloud.grades().end());
    double best = 0.0;
    for (double alpha : candidates) {
        double cap = 0.0;
        for (int i = 0; i < cloud.size(); ++i) {
            if (f[static_cast<size_t>(i)] >= alpha) cap = std::max(cap, cloud.grade(i));
        }
        best = std::max(best, std::min(alpha, cap));
    }
    return best;
}

double holder_mean(double alpha, double a, double b) {
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0)) {
        throw std::invalid_argument("Hoelder mean arguments must lie in [0, 1]");
    }
    if (std::isinf(alpha)) {
        return alpha > 0.0 ? std::max(a, b) : std::min(a, b);
    }
    if (std::abs(alpha) < 1e-8) {
        return std::sqrt(a * b);
    }
    if (alpha < 0.0 && (a == 0.0 || b == 0.0)) {
        return 0.0;  // min-like limit dominates
    }
    // Factor out the dominant argument to keep pow() in range.
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    if (hi == 0.0) return 0.0;
    const double base = alpha > 0.0 ? hi : lo;
    const double ra = a / base;
    const double rb = b / base;
    const double mean = (std::pow(ra, alpha) + std::pow(rb, alpha)) / 2.0;
    return base * std::pow(mean, 1.0 / alpha);
}

double alpha_of_confidence(double confidence, double epsilon) {
    if (!(confidence >= 0.0 && confidence <= 1.0)) {
        throw std::invalid_argument("confidence must lie in [0, 1]");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("epsilon must be positive");
    }
    return 1.0 + 1.0 / (epsilon + (1.0 - confidence));
}

}  // namespace credal
