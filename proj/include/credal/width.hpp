#ifndef CREDAL_WIDTH_HPP
#define CREDAL_WIDTH_HPP

#include "credal/possibility.hpp"

#include <deque>
#include <optional>
#include <vector>

namespace credal {

/// Sliding window of per-step innovation consistency scalars y~' S^-1 y~.
/// Single-owner mutable state; everything else in this module is pure.
class NeesWindow {
  public:
    NeesWindow(int window_len, int meas_dim);

    void push(double stat);
    void clear() { buffer_.clear(); }
    bool empty() const { return buffer_.empty(); }
    int size() const { return static_cast<int>(buffer_.size()); }
    int meas_dim() const { return meas_dim_; }

    /// Window mean of the per-dimension consistency statistic (entry / m).
    double mean_nees() const;

  private:
    int window_len_;
    int meas_dim_;
    std::deque<double> buffer_;
};

/// Switching thresholds: critical width, hysteresis half-band, and the
/// exponential scaling of the consistency proxy.
struct SwitchThresholds {
    double w_crit = 0.5;
    double hysteresis = 0.1;
    double kappa_w = 0.5;

    void validate() const;
};

/// Gate statistics handed from a possibilistic update into the report.
struct GateDiagnostics {
    int prune_count = 0;
    double min_stat = 0.0;             // smallest pre-gate Mahalanobis value
    double gate_r2 = 1.0;              // gate radius the surprisal is scaled by
    double necessity_saturation = 0.0; // evidence/support conflict degree
};

/// One step of epistemic diagnostics.
struct WidthReport {
    double w_bar = 0.0;
    std::optional<double> w_tv;   // exact event-sup width when enumerable
    std::optional<double> w_hat;  // consistency proxy, probabilistic regime only
    int prune_count = 0;
    double necessity_saturation = 0.0;
    double surprisal = 0.0;
    double alpha_c = 1.0;
};

enum class WidthMethod { closed_form, quadrature };

/// w(A) = Pi(A) - N(A).
double pointwise_width(const TrapezoidPossibility& dist, const Interval& event);
double pointwise_width(const SupportCloud& cloud, const DiscreteEvent& event);

/// Normalized aggregate width of a trapezoid. The closed form evaluates
///   2*delta*(l + delta) / (l + 2*delta) / mu(X),
/// the quadrature form integrates (pi - n) / mu(X) with the pointwise kernel.
/// The two disagree off the vacuous/collapsed endpoints; callers choose.
double aggregate_width_trapezoid(const TrapezoidPossibility& dist, WidthMethod method);

/// Per-point discrete necessity kernel n_i = max(0, g_i - c) with the
/// constant offset c equal to the cloud's exact event-sup width.
std::vector<double> necessity_kernel_cloud(const SupportCloud& cloud);

/// Normalized aggregate width of a cloud under the counting measure:
/// mean of (g_i - n_i) = mean of min(g_i, c). 0 for a collapsed cloud,
/// 1 for uniform ignorance.
double aggregate_width_cloud(const SupportCloud& cloud);

/// Consistency proxy 1 - exp(-kappa_w * window-mean NEES). Throws
/// "cold start" on an empty window.
double w_hat(const NeesWindow& window, const SwitchThresholds& thresholds);

/// Appends new points at grade 1 (total ignorance over the added region).
/// The new points must be disjoint from the existing ones.
SupportCloud domain_expand(const SupportCloud& cloud,
                           const std::vector<Eigen::VectorXd>& new_points);

/// Finite-difference rate of width increase under domain expansion by the
/// given fraction of the cloud size; always >= 0.
double fragility_estimate(const SupportCloud& cloud, double expansion_fraction);

/// sup over events of |Pi_1(A) - Pi_2(A)| for two clouds on the same points.
double credal_pseudometric(const SupportCloud& d1, const SupportCloud& d2);

/// Assembles the per-step diagnostic bundle for a possibilistic-regime cloud:
/// aggregate width, exact event-sup width when the cloud is small enough to
/// enumerate, the last gate's prune count and conflict degree, the surprisal
/// min_stat / r^2, and the confidence-mapped Hoelder exponent.
WidthReport ewm_report(const SupportCloud& cloud, const GateDiagnostics& gate);

}  // namespace credal

#endif
