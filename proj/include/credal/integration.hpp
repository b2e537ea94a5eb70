#ifndef CREDAL_INTEGRATION_HPP
#define CREDAL_INTEGRATION_HPP

#include "credal/possibility.hpp"

#include <utility>
#include <vector>

namespace credal {

/// A bounded function sampled at the points of a cloud, with a certified
/// sup-norm bound M.
struct BoundedFunctionSamples {
    std::vector<double> values;
    double bound_M;

    BoundedFunctionSamples(std::vector<double> v, double m);
};

/// Discrete Choquet integral of `f` against the possibility capacity induced
/// by `capacity_grades` (sup over subsets). Handles signed integrands via the
/// two-sided layer-cake decomposition; ties in the descending sort are broken
/// by point index.
double choquet_against_capacity(const std::vector<double>& capacity_grades,
                                const std::vector<double>& f);

/// Choquet integral of the samples against the cloud's possibility measure.
/// The cloud must be max-normalized.
double choquet_discrete(const SupportCloud& cloud, const BoundedFunctionSamples& f);

/// Closed-form Choquet expectation of f(x) = x for a trapezoid on a
/// nonnegative domain: b + delta/2 (1 for the vacuous distribution on [0,1]).
double choquet_trapezoid_identity(const TrapezoidPossibility& dist);

/// Expectation of x under the area-normalized trapezoid density: the
/// centroid (a + b)/2 for equal ramp widths.
double lebesgue_expectation_trapezoid(const TrapezoidPossibility& dist);

/// (lower, upper) credal expectations of the samples: upper is the Choquet
/// integral against Pi, lower the dual integral against N
/// (= -Choquet_Pi(-f)). Exact; requires cloud size <= 12.
std::pair<double, double> upper_lower_expectation(const SupportCloud& cloud,
                                                  const BoundedFunctionSamples& f);

/// Sugeno integral sup_alpha min(alpha, Pi{f >= alpha}) for samples in [0,1].
double sugeno_discrete(const SupportCloud& cloud, const std::vector<double>& f);

/// Hoelder power mean M_alpha(a, b) for a, b in [0, 1], with dedicated
/// branches at alpha = 0 (geometric) and +/-infinity (max/min); values of
/// |alpha| below 1e-8 fall back to the geometric mean.
double holder_mean(double alpha, double a, double b);

/// Heuristic map from confidence C in [0, 1] to a Hoelder exponent:
///   alpha(C) = 1 + 1 / (epsilon + (1 - C)).
double alpha_of_confidence(double confidence, double epsilon);

}  // namespace credal

#endif
