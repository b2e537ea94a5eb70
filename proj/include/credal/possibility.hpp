#ifndef CREDAL_POSSIBILITY_HPP
#define CREDAL_POSSIBILITY_HPP

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace credal {

/// Closed real interval [lo, hi]. Empty when lo > hi.
struct Interval {
    double lo;
    double hi;

    bool empty() const { return lo > hi; }
    double length() const { return empty() ? 0.0 : hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Event on a finite support cloud: a set of point indices.
struct DiscreteEvent {
    std::vector<int> indices;

    bool empty() const { return indices.empty(); }
};

/// Analytic 1-D consonant possibility distribution with a unit plateau on
/// [a, b] and linear ramps of width delta on both sides, evaluated against a
/// bounded reference domain [domain_lo, domain_hi].
///
/// Invariants enforced at construction:
///   a <= b, delta >= 0, [a - delta, b + delta] inside the domain.
/// The distribution is normalized (sup = 1) and consonant: its alpha-cuts
/// are nested closed intervals.
class TrapezoidPossibility {
  public:
    TrapezoidPossibility(double a, double b, double delta,
                         double domain_lo, double domain_hi);

    /// Vacuous distribution: grade 1 everywhere on [lo, hi].
    static TrapezoidPossibility ignorance(double lo, double hi);

    double a() const { return a_; }
    double b() const { return b_; }
    double delta() const { return delta_; }
    double domain_lo() const { return domain_lo_; }
    double domain_hi() const { return domain_hi_; }

    /// Plateau length b - a.
    double plateau_length() const { return b_ - a_; }
    /// Reference-measure mass of the whole domain.
    double domain_length() const { return domain_hi_ - domain_lo_; }
    /// Support interval [a - delta, b + delta].
    Interval support() const { return {a_ - delta_, b_ + delta_}; }
    /// True when the plateau spans the entire domain (vacuous information).
    bool is_ignorance() const { return a_ == domain_lo_ && b_ == domain_hi_; }

    /// Grade pi(x). Zero outside the support.
    double grade(double x) const;

    /// sup of pi over the closed interval [seg.lo, seg.hi].
    double sup_over(const Interval& seg) const;

  private:
    double a_;
    double b_;
    double delta_;
    double domain_lo_;
    double domain_hi_;
};

/// Finite set of n-dimensional support points with possibility grades in
/// [0, 1]. The cloud is treated as the entire discrete state space.
///
/// A cloud may be held in an unnormalized state (max grade < 1) between a
/// conditioning step and the explicit max-normalization that follows it;
/// is_max_normalized() tells the two apart.
class SupportCloud {
  public:
    SupportCloud(std::vector<Eigen::VectorXd> points, std::vector<double> grades);

    /// Builds a cloud while merging points that coincide within `merge_tol`
    /// (relative to the largest coordinate magnitude), keeping the larger
    /// grade of any merged pair.
    static SupportCloud merged(std::vector<Eigen::VectorXd> points,
                               std::vector<double> grades,
                               double merge_tol = kDefaultMergeTol);

    int size() const { return static_cast<int>(points_.size()); }
    int dim() const { return dim_; }
    const Eigen::VectorXd& point(int i) const { return points_[static_cast<size_t>(i)]; }
    double grade(int i) const { return grades_[static_cast<size_t>(i)]; }
    const std::vector<Eigen::VectorXd>& points() const { return points_; }
    const std::vector<double>& grades() const { return grades_; }

    double max_grade() const;
    bool is_max_normalized(double tol = 1e-12) const;

    /// Divides all grades by the current maximum. Throws
    /// std::runtime_error("total incompatibility") when every grade is zero.
    SupportCloud max_normalized() const;

    /// Indices whose grade is exactly zero (retained but prunable).
    std::vector<int> zero_grade_indices() const;

    /// Cloud with given indices removed.
    SupportCloud without(const std::vector<int>& drop) const;

    SupportCloud with_grades(std::vector<double> grades) const;

    static constexpr double kDefaultMergeTol = 1e-9;

  private:
    std::vector<Eigen::VectorXd> points_;
    std::vector<double> grades_;
    int dim_;
};

// --- possibility / necessity measures -------------------------------------

/// Pi(A) = sup of pi over the event. An empty event is an error unless
/// `allow_empty` is set, in which case Pi(empty) = 0.
double possibility_of(const TrapezoidPossibility& dist, const Interval& event,
                      bool allow_empty = false);
double possibility_of(const SupportCloud& cloud, const DiscreteEvent& event,
                      bool allow_empty = false);

/// N(A) = 1 - Pi(complement of A), with the complement taken inside the
/// bounded domain (closed-interval evaluation for the trapezoid).
double necessity_of(const TrapezoidPossibility& dist, const Interval& event,
                    bool allow_empty = false);
double necessity_of(const SupportCloud& cloud, const DiscreteEvent& event,
                    bool allow_empty = false);

/// Pointwise necessity kernel of the trapezoid family:
///   n(x) = max(0, pi(x) - 2*delta / (l + 2*delta)),    l = b - a.
/// For the vacuous distribution the kernel is identically zero.
double necessity_kernel_trapezoid(const TrapezoidPossibility& dist, double x);

/// {x : pi(x) >= alpha} for alpha in (0, 1]. Nested in alpha.
Interval alpha_cut(const TrapezoidPossibility& dist, double alpha);
DiscreteEvent alpha_cut(const SupportCloud& cloud, double alpha);

/// Grade-wise min with the compatibility vector `kappa`, then
/// max-normalization. Zero-grade points are retained (see
/// SupportCloud::zero_grade_indices). Throws when all grades vanish.
SupportCloud min_condition(const SupportCloud& prior, const std::vector<double>& kappa);

/// Exact sup over all events A of Pi(A) - N(A), by enumeration of the
/// 2^n event algebra. Requires size <= 20. Equals the total-variation
/// diameter of the induced credal polytope.
double credal_width_exact(const SupportCloud& cloud);

}  // namespace credal

#endif
