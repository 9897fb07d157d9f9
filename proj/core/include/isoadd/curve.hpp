#ifndef ISOADD_CURVE_HPP
#define ISOADD_CURVE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "isoadd/representations.hpp"

namespace isoadd {

/// The elliptic curve w^2 = u(u - m)(u - n) = u^3 + a2 u^2 + a1 u for a pair
/// of distinct nonzero rationals; the three roots 0, m, n are distinct, so
/// the curve is non-singular.
struct Curve {
  Rat m;
  Rat n;
  Rat a2;  // -(m + n)
  Rat a1;  // m * n

  explicit Curve(const PairMN& pair);
  Curve(const Rat& m_in, const Rat& n_in) : Curve(PairMN(m_in, n_in)) {}

  PairMN pair() const { return PairMN(m, n); }
};

/// Affine rational point or the single point at infinity (the identity).
class CurvePoint {
 public:
  CurvePoint() : infinity_(true) {}
  CurvePoint(Rat u, Rat w) : infinity_(false), u_(std::move(u)), w_(std::move(w)) {}

  static CurvePoint at_infinity() { return CurvePoint(); }

  bool is_infinity() const { return infinity_; }
  const Rat& u() const { return u_; }
  const Rat& w() const { return w_; }

  CurvePoint operator-() const {
    return infinity_ ? *this : CurvePoint(u_, -w_);
  }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
    return a.u_ == b.u_ && a.w_ == b.w_;
  }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) {
    return !(a == b);
  }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity_ != b.infinity_) return a.infinity_;  // infinity sorts first
    if (a.infinity_) return false;
    if (a.u_ != b.u_) return a.u_ < b.u_;
    return a.w_ < b.w_;
  }

  std::string str() const;

 private:
  bool infinity_;
  Rat u_;
  Rat w_;
};

/// The straight line w = nu + lambda * u through the points of an addition.
struct Line {
  Rat lambda;
  Rat nu;

  friend bool operator==(const Line& a, const Line& b) {
    return a.lambda == b.lambda && a.nu == b.nu;
  }
};

CurvePoint two_torsion_t(const Curve& c);  // (0, 0)
CurvePoint two_torsion_m(const Curve& c);  // (m, 0)
CurvePoint two_torsion_n(const Curve& c);  // (n, 0)

bool on_curve(const Curve& c, const CurvePoint& p);

struct AddResult {
  CurvePoint sum;
  /// The chord (or tangent) through p, q and -(p+q); absent for the
  /// vertical and identity cases.
  std::optional<Line> line;
};

/// Chord-tangent addition; throws NotOnCurve.
AddResult add(const Curve& c, const CurvePoint& p, const CurvePoint& q);

/// Tangent doubling; w = 0 doubles to the point at infinity.
CurvePoint double_point(const Curve& c, const CurvePoint& p);

/// k-fold sum of p (k >= 0).
CurvePoint multiply(const Curve& c, int k, const CurvePoint& p);

/// Image of a solution (x, y): u = xy, w = (m/x - y)xy. The equivalent form
/// (n/y - x)xy is computed too and must agree. Throws NotASolution.
CurvePoint to_curve_point(const Curve& c, const Solution& sol);

/// The four labelled points attached to a solution's orbit:
///   P1 = (xy,        (m/x - y) xy)
///   P2 = (x n/y,     (x - y) x n/y)
///   P3 = (m/x y,     (x - y) m/x y)
///   P4 = (mn/(xy),   (m/x - y) mn/(xy))
/// These satisfy the chord identities below; their negatives complete the
/// point set of the orbit.
std::array<CurvePoint, 4> labelled_points(const Curve& c, const Solution& sol);

/// {+-P1, ..., +-P4}, deduplicated in label order.
std::vector<CurvePoint> orbit_points(const Curve& c, const Solution& sol);

struct IdentityResult {
  std::string id;
  bool holds = false;
  std::optional<Line> expected_line;  // only the six chord identities carry one
  std::optional<Line> computed_line;
  CurvePoint expected;
  CurvePoint computed;
};

/// The six chord identities of the labelled points, with closed-form line
/// coefficients:
///   P1+P4 = T (lambda = m/x - y, nu = 0)      P2+P3 = T (x - y, 0)
///   P1+P3 = M (-y, m y)                       P2+P4 = M (n/y, -mn/y)
///   P1-P2 = N (-x, n x)                       P3-P4 = N (-m/x, mn/x)
/// Both the resulting point and the line are compared. Throws NotASolution.
std::vector<IdentityResult> check_addition_identities(const Curve& c,
                                                      const Solution& sol);

/// Closed-form duplication of P_j from the solution data alone:
///   [2]P_j = ((z/2)^2, t_j (z/2)(z/2 - x)(z/2 - y)),  t_{1,2} = -1, t_{3,4} = +1,
/// where z = x + m/x. Must agree with tangent doubling of the labelled point.
CurvePoint double_from_solution(const Curve& c, const Solution& sol, int j);

struct DerivedChecksReport {
  /// P_j as (sign) fixed point + two-torsion translate: 16 identities.
  std::vector<IdentityResult> translations;
  /// Even and odd multiples tied back to multiples of P1, k = 1..3.
  std::vector<IdentityResult> multiples;
  /// Pairwise sums expressed through [2]P1: 6 identities.
  std::vector<IdentityResult> double_shifts;
  bool all_hold = true;
};

/// Verifies the identities that follow from the chord table. Throws
/// NotASolution.
DerivedChecksReport check_derived_identities(const Curve& c, const Solution& sol);

/// Least k in 1..12 with [k]p = infinity, if any (finite rational torsion
/// orders cannot exceed 12 by Mazur's theorem, so the cutoff is exact).
struct TorsionReport {
  CurvePoint point;
  std::optional<int> order;          // nullopt = infinite
  std::vector<CurvePoint> multiples; // [1]p .. [k]p for the k tested
};

TorsionReport torsion_order(const Curve& c, const CurvePoint& p);

/// Where the double of the base point lands, which decides whether the
/// orbit point set together with the two-torsion closes into a group of
/// order eight with every orbit point of order four.
enum class Closure { DoublesToT, DoublesToM, DoublesToN, NotClosed };

struct Classification {
  Closure closure = Closure::NotClosed;
  CurvePoint double_p1;
  /// When closed: the four distinct orbit points, the 8 group element
  /// labels, the 8x8 addition table (labels), and order-4 certificates.
  std::vector<CurvePoint> orbit;
  std::vector<std::string> labels;
  std::vector<CurvePoint> elements;
  std::vector<std::vector<std::string>> table;
  std::vector<TorsionReport> order_certificates;
  /// When not closed: whether [2]P1 coincides with an orbit point, a case
  /// the three handled closures do not cover.
  bool double_in_orbit = false;
};

Classification classify_group_closure(const Curve& c, const Solution& sol);

/// All torsion points of an integral curve (m, n integers), by the
/// Nagell-Lutz bound: candidates have w = 0 or w^2 dividing
/// m^2 n^2 (m-n)^2, and integer coordinates; candidates of infinite order
/// are filtered out with torsion_order. Includes the point at infinity.
/// Throws NonIntegralCurve.
std::vector<CurvePoint> nagell_lutz_torsion(const Curve& c);

}  // namespace isoadd

#endif  // ISOADD_CURVE_HPP
