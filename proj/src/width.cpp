#include "credal/width.hpp"

#include "credal/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace credal {

NeesWindow::NeesWindow(int window_len, int meas_dim)
    : window_len_(window_len), meas_dim_(meas_dim) {
    if (window_len < 1 || meas_dim < 1) {
        throw std::invalid_argument("window length and measurement dimension must be positive");
    }
}

void NeesWindow::push(double stat) {
    if (!(stat >= 0.0)) {
        throw std::invalid_argument("consistency statistic must be nonnegative");
    }
    buffer_.push_back(stat);
    while (static_cast<int>(buffer_.size()) > window_len_) buffer_.pop_front();
}

double NeesWindow::mean_nees() const {
    if (buffer_.empty()) {
        throw std::runtime_error("cold start: empty consistency window");
    }
    double sum = 0.0;
    for (double v : buffer_) sum += v;
    return sum / (static_cast<double>(buffer_.size()) * meas_dim_);
}

void SwitchThresholds::validate() const {
    if (!(w_crit > 0.0 && w_crit < 1.0)) {
        throw std::invalid_argument("w_crit must lie in (0, 1)");
    }
    if (!(hysteresis > 0.0)) {
        throw std::invalid_argument("hysteresis must be positive");
    }
    if (!(w_crit + hysteresis < 1.0 && w_crit - hysteresis > 0.0)) {
        throw std::invalid_argument("hysteresis band must stay inside (0, 1)");
    }
    if (!(kappa_w > 0.0)) {
        throw std::invalid_argument("kappa_w must be positive");
    }
}

double pointwise_width(const TrapezoidPossibility& dist, const Interval& event) {
    return possibility_of(dist, event) - necessity_of(dist, event);
}

double pointwise_width(const SupportCloud& cloud, const DiscreteEvent& event) {
    return possibility_of(cloud, event) - necessity_of(cloud, event);
}

double aggregate_width_trapezoid(const TrapezoidPossibility& dist, WidthMethod method) {
    const double mu = dist.domain_length();
    if (!std::isfinite(mu)) {
        throw std::invalid_argument("unbounded domain");
    }
    if (method == WidthMethod::closed_form) {
        if (dist.is_ignorance()) return 1.0;
        const double l = dist.plateau_length();
        const double d = dist.delta();
        if (l + 2.0 * d <= 0.0) return 0.0;  // point mass
        return 2.0 * d * (l + d) / (l + 2.0 * d) / mu;
    }
    // Quadrature of (pi - n); the integrand is piecewise linear with kinks at
    // the plateau edges and where pi crosses the kernel offset.
    const double lo = dist.support().lo;
    const double hi = dist.support().hi;
    const double denom = dist.plateau_length() + 2.0 * dist.delta();
    const double c = dist.is_ignorance() ? 1.0
                     : (denom > 0.0 ? 2.0 * dist.delta() / denom : 0.0);
    std::vector<double> breaks = {dist.a(), dist.b(),
                                  lo + c * dist.delta(), hi - c * dist.delta()};
    auto integrand = [&](double x) {
        return dist.grade(x) - necessity_kernel_trapezoid(dist, x);
    };
    return integrate_piecewise(integrand, lo, hi, breaks, 1e-8) / mu;
}

namespace {

// Constant kernel offset: the cloud's exact event-sup width, which for a
// finite cloud equals max(0, g(1) + g(2) - 1) over the two largest grades.
double kernel_offset(const SupportCloud& cloud) {
    double g1 = 0.0, g2 = 0.0;
    for (double g : cloud.grades()) {
        if (g > g1) {
            g2 = g1;
            g1 = g;
        } else if (g > g2) {
            g2 = g;
        }
    }
    return std::max(0.0, g1 + g2 - 1.0);
}

}  // namespace

std::vector<double> necessity_kernel_cloud(const SupportCloud& cloud) {
    const double c = kernel_offset(cloud);
    std::vector<double> n(static_cast<size_t>(cloud.size()));
    for (int i = 0; i < cloud.size(); ++i) {
        n[static_cast<size_t>(i)] = std::max(0.0, cloud.grade(i) - c);
    }
    return n;
}

double aggregate_width_cloud(const SupportCloud& cloud) {
    const double c = kernel_offset(cloud);
    double sum = 0.0;
    for (double g : cloud.grades()) sum += std::min(g, c);
    return sum / cloud.size();
}

double w_hat(const NeesWindow& window, const SwitchThresholds& thresholds) {
    thresholds.validate();
    return 1.0 - std::exp(-thresholds.kappa_w * window.mean_nees());
}

SupportCloud domain_expand(const SupportCloud& cloud,
                           const std::vector<Eigen::VectorXd>& new_points) {
    if (new_points.empty()) return cloud;
    double scale = 0.0;
    for (const auto& p : cloud.points()) scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
    const double tol = SupportCloud::kDefaultMergeTol * std::max(1.0, scale);

    std::vector<Eigen::VectorXd> pts = cloud.points();
    std::vector<double> grades = cloud.grades();
    for (const auto& q : new_points) {
        if (static_cast<int>(q.size()) != cloud.dim()) {
            throw std::invalid_argument("expansion point dimension mismatch");
        }
        for (const auto& p : pts) {
            if ((p - q).lpNorm<Eigen::Infinity>() <= tol) {
                throw std::invalid_argument("expansion point duplicates an existing point");
            }
        }
        pts.push_back(q);
        grades.push_back(1.0);  // nothing is known over the added region
    }
    return SupportCloud(std::move(pts), std::move(grades));
}

double fragility_estimate(const SupportCloud& cloud, double expansion_fraction) {
    if (!(expansion_fraction > 0.0 && expansion_fraction <= 1.0)) {
        throw std::invalid_argument("expansion fraction must lie in (0, 1]");
    }
    const int k = static_cast<int>(std::ceil(expansion_fraction * cloud.size()));

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(cloud.dim());
    for (const auto& p : cloud.points()) centroid += p;
    centroid /= cloud.size();
    double radius = 0.0;
    for (const auto& p : cloud.points()) radius = std::max(radius, (p - centroid).norm());
    if (radius <= 0.0) radius = 1.0;

    // Deterministic probes just beyond the hull, cycling signed axes.
    std::vector<Eigen::VectorXd> added;
    for (int j = 0; j < k; ++j) {
        Eigen::VectorXd dir = Eigen::VectorXd::Zero(cloud.dim());
        const int axis = (j / 2) % cloud.dim();
        dir(axis) = (j % 2 == 0) ? 1.0 : -1.0;
        added.push_back(centroid + dir * radius * (1.001 + 0.01 * (j / (2 * cloud.dim()))));
    }
    const double before = aggregate_width_cloud(cloud);
    const double after = aggregate_width_cloud(domain_expand(cloud, added));
    return std::max(0.0, after - before) / expansion_fraction;
}

namespace {

void metric_dfs(const std::vector<double>& g1, const std::vector<double>& g2, size_t i,
                double m1, double m2, bool any, double& best) {
    if (i == g1.size()) {
        if (any) best = std::max(best, std::abs(m1 - m2));
        return;
    }
    metric_dfs(g1, g2, i + 1, std::max(m1, g1[i]), std::max(m2, g2[i]), true, best);
    metric_dfs(g1, g2, i + 1, m1, m2, any, best);
}

}  // namespace

double credal_pseudometric(const SupportCloud& d1, const SupportCloud& d2) {
    if (d1.size() != d2.size() || d1.dim() != d2.dim()) {
        throw std::invalid_argument("mismatched point sets");
    }
    double scale = 0.0;
    for (const auto& p : d1.points()) scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
    const double tol = SupportCloud::kDefaultMergeTol * std::max(1.0, scale);
    for (int i = 0; i < d1.size(); ++i) {
        if ((d1.point(i) - d2.point(i)).lpNorm<Eigen::Infinity>() > tol) {
            throw std::invalid_argument("mismatched point sets");
        }
    }
    if (d1.size() > 20) {
        throw std::invalid_argument("enumeration limit: cloud too large");
    }
    double best = 0.0;
    metric_dfs(d1.grades(), d2.grades(), 0, 0.0, 0.0, false, best);
    return best;
}

}  // namespace credal
