#include "credal/possibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace credal {

namespace {

void check_event_interval(const TrapezoidPossibility& dist, const Interval& event) {
    if (event.lo < dist.domain_lo() || event.hi > dist.domain_hi()) {
        throw std::invalid_argument("event interval outside domain");
    }
}

void check_event_indices(const SupportCloud& cloud, const DiscreteEvent& event) {
    for (int i : event.indices) {
        if (i < 0 || i >= cloud.size()) {
            throw std::invalid_argument("event index out of range");
        }
    }
}

}  // namespace

TrapezoidPossibility::TrapezoidPossibility(double a, double b, double delta,
                                           double domain_lo, double domain_hi)
    : a_(a), b_(b), delta_(delta), domain_lo_(domain_lo), domain_hi_(domain_hi) {
    if (!(domain_lo < domain_hi)) {
        throw std::invalid_argument("domain must have positive length");
    }
    if (!(a <= b)) {
        throw std::invalid_argument("plateau requires a <= b");
    }
    if (delta < 0.0) {
        throw std::invalid_argument("ramp width must be nonnegative");
    }
    if (a - delta < domain_lo || b + delta > domain_hi) {
        throw std::invalid_argument("support must lie inside the domain");
    }
}

TrapezoidPossibility TrapezoidPossibility::ignorance(double lo, double hi) {
    return TrapezoidPossibility(lo, hi, 0.0, lo, hi);
}

double TrapezoidPossibility::grade(double x) const {
    if (x >= a_ && x <= b_) return 1.0;
    if (delta_ <= 0.0) return 0.0;
    if (x > b_ && x <= b_ + delta_) return (b_ + delta_ - x) / delta_;
    if (x < a_ && x >= a_ - delta_) return (x - (a_ - delta_)) / delta_;
    return 0.0;
}

double TrapezoidPossibility::sup_over(const Interval& seg) const {
    if (seg.empty()) return 0.0;
    // Plateau intersects the segment.
    if (seg.lo <= b_ && seg.hi >= a_) return 1.0;
    // Entirely left of the plateau: pi is nondecreasing there.
    if (seg.hi < a_) return grade(seg.hi);
    // Entirely right: pi is nonincreasing there.
    return grade(seg.lo);
}

SupportCloud::SupportCloud(std::vector<Eigen::VectorXd> points, std::vector<double> grades)
    : points_(std::move(points)), grades_(std::move(grades)) {
    if (points_.empty() || points_.size() != grades_.size()) {
        throw std::invalid_argument("cloud needs equally many points and grades, at least one");
    }
    dim_ = static_cast<int>(points_.front().size());
    if (dim_ < 1) {
        throw std::invalid_argument("points must have positive dimension");
    }
    for (const auto& p : points_) {
        if (static_cast<int>(p.size()) != dim_) {
            throw std::invalid_argument("inconsistent point dimensions");
        }
    }
    for (double g : grades_) {
        if (!(g >= 0.0 && g <= 1.0)) {
            throw std::invalid_argument("grades must lie in [0, 1]");
        }
    }
}

SupportCloud SupportCloud::merged(std::vector<Eigen::VectorXd> points,
                                  std::vector<double> grades, double merge_tol) {
    if (points.size() != grades.size() || points.empty()) {
        throw std::invalid_argument("cloud needs equally many points and grades, at least one");
    }
    double scale = 0.0;
    for (const auto& p : points) scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
    const double tol = merge_tol * std::max(1.0, scale);

    std::vector<Eigen::VectorXd> out_p;
    std::vector<double> out_g;
    out_p.reserve(points.size());
    out_g.reserve(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        bool found = false;
        for (size_t j = 0; j < out_p.size(); ++j) {
            if ((out_p[j] - points[i]).lpNorm<Eigen::Infinity>() <= tol) {
                out_g[j] = std::max(out_g[j], grades[i]);  // sup of merged grades
                found = true;
                break;
            }
        }
        if (!found) {
            out_p.push_back(std::move(points[i]));
            out_g.push_back(grades[i]);
        }
    }
    return SupportCloud(std::move(out_p), std::move(out_g));
}

double SupportCloud::max_grade() const {
    return *std::max_element(grades_.begin(), grades_.end());
}

bool SupportCloud::is_max_normalized(double tol) const {
    return std::abs(max_grade() - 1.0) <= tol;
}

SupportCloud SupportCloud::max_normalized() const {
    const double m = max_grade();
    if (m <= 0.0) {
        throw std::runtime_error("total incompatibility: empty credal set");
    }
    std::vector<double> g = grades_;
    for (double& v : g) v = std::min(1.0, v / m);
    return SupportCloud(points_, std::move(g));
}

std::vector<int> SupportCloud::zero_grade_indices() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (grades_[static_cast<size_t>(i)] == 0.0) out.push_back(i);
    }
    return out;
}

SupportCloud SupportCloud::without(const std::vector<int>& drop) const {
    std::vector<bool> dead(points_.size(), false);
    for (int i : drop) {
        if (i < 0 || i >= size()) throw std::invalid_argument("drop index out of range");
        dead[static_cast<size_t>(i)] = true;
    }
    std::vector<Eigen::VectorXd> p;
    std::vector<double> g;
    for (size_t i = 0; i < points_.size(); ++i) {
        if (!dead[i]) {
            p.push_back(points_[i]);
            g.push_back(grades_[i]);
        }
    }
    return SupportCloud(std::move(p), std::move(g));
}

SupportCloud SupportCloud::with_grades(std::vector<double> grades) const {
    if (grades.size() != grades_.size()) {
        throw std::invalid_argument("grade count mismatch");
    }
    return SupportCloud(points_, std::move(grades));
}

// --- measures ---------------------------------------------------------------

double possibility_of(const TrapezoidPossibility& dist, const Interval& event,
                      bool allow_empty) {
    if (event.empty()) {
        if (allow_empty) return 0.0;
        throw std::invalid_argument("empty event");
    }
    check_event_interval(dist, event);
    return dist.sup_over(event);
}

double possibility_of(const SupportCloud& cloud, const DiscreteEvent& event,
                      bool allow_empty) {
    if (event.empty()) {
        if (allow_empty) return 0.0;
        throw std::invalid_argument("empty event");
    }
    check_event_indices(cloud, event);
    double sup = 0.0;
    for (int i : event.indices) sup = std::max(sup, cloud.grade(i));
    return sup;
}

double necessity_of(const TrapezoidPossibility& dist, const Interval& event,
                    bool allow_empty) {
    if (event.empty()) {
        if (allow_empty) return 0.0;
        throw std::invalid_argument("empty event");
    }
    check_event_interval(dist, event);
    // Complement inside the domain, evaluated on closed segments; pi is
    // continuous so the closure does not change the sup.
    double comp_sup = 0.0;
    if (event.lo > dist.domain_lo()) {
        comp_sup = std::max(comp_sup, dist.sup_over({dist.domain_lo(), event.lo}));
    }
    if (event.hi < dist.domain_hi()) {
        comp_sup = std::max(comp_sup, dist.sup_over({event.hi, dist.domain_hi()}));
    }
    return 1.0 - comp_sup;
}

double necessity_of(const SupportCloud& cloud, const DiscreteEvent& event,
                    bool allow_empty) {
    if (event.empty()) {
        if (allow_empty) return 0.0;
        throw std::invalid_argument("empty event");
    }
    check_event_indices(cloud, event);
    std::vector<bool> in(static_cast<size_t>(cloud.size()), false);
    for (int i : event.indices) in[static_cast<size_t>(i)] = true;
    double comp_sup = 0.0;
    for (int i = 0; i < cloud.size(); ++i) {
        if (!in[static_cast<size_t>(i)]) comp_sup = std::max(comp_sup, cloud.grade(i));
    }
    return 1.0 - comp_sup;
}

double necessity_kernel_trapezoid(const TrapezoidPossibility& dist, double x) {
    if (x < dist.domain_lo() || x > dist.domain_hi()) {
        throw std::invalid_argument("x outside domain");
    }
    if (dist.is_ignorance()) return 0.0;  // vacuous case: no guarantee anywhere
    const double denom = dist.plateau_length() + 2.0 * dist.delta();
    const double offset = denom > 0.0 ? 2.0 * dist.delta() / denom : 0.0;
    return std::max(0.0, dist.grade(x) - offset);
}

Interval alpha_cut(const TrapezoidPossibility& dist, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1]");
    }
    const double reach = dist.delta() * (1.0 - alpha);
    return {dist.a() - reach, dist.b() + reach};
}

DiscreteEvent alpha_cut(const SupportCloud& cloud, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1]");
    }
    DiscreteEvent ev;
    for (int i = 0; i < cloud.size(); ++i) {
        if (cloud.grade(i) >= alpha) ev.indices.push_back(i);
    }
    return ev;
}

SupportCloud min_condition(const SupportCloud& prior, const std::vector<double>& kappa) {
    if (static_cast<int>(kappa.size()) != prior.size()) {
        throw std::invalid_argument("compatibility vector length mismatch");
    }
    std::vector<double> g(kappa.size());
    for (size_t i = 0; i < kappa.size(); ++i) {
        if (!(kappa[i] >= 0.0 && kappa[i] <= 1.0)) {
            throw std::invalid_argument("compatibility values must lie in [0, 1]");
        }
        g[i] = std::min(prior.grade(static_cast<int>(i)), kappa[i]);
    }
    return prior.with_grades(std::move(g)).max_normalized();
}

namespace {

// DFS over the event algebra carrying the running sup of grades inside and
// outside the event.
void width_dfs(const std::vector<double>& g, size_t i, double in_sup, double out_sup,
               bool any_in, bool any_out, double& best) {
    if (i == g.size()) {
        if (any_in && any_out) {
            best = std::max(best, in_sup + out_sup - 1.0);
        }
        return;
    }
    width_dfs(g, i + 1, std::max(in_sup, g[i]), out_sup, true, any_out, best);
    width_dfs(g, i + 1, in_sup, std::max(out_sup, g[i]), any_in, true, best);
}

}  // namespace

double credal_width_exact(const SupportCloud& cloud) {
    if (cloud.size() > 20) {
        throw std::invalid_argument("enumeration limit: cloud too large");
    }
    // Pi(A) - N(A) = Pi(A) + Pi(complement) - 1; empty and full events give 0.
    double best = 0.0;
    width_dfs(cloud.grades(), 0, 0.0, 0.0, false, false, best);
    return std::max(0.0, best);
}

}  // namespace credal
