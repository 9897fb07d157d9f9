#ifndef ISOADD_SOLVER_HPP
#define ISOADD_SOLVER_HPP

#include <optional>
#include <vector>

#include "isoadd/representations.hpp"

namespace isoadd {

/// Bounded-height search space: a rational p/q in lowest terms is admissible
/// when max(|p|, q) <= height_bound.
struct SearchConfig {
  long long height_bound = 100;

  explicit SearchConfig(long long h) : height_bound(h) {
    if (h < 1) throw Error(ErrorKind::Unsupported, "height bound must be >= 1");
  }
};

/// Discriminant data of the quadratic in y probed at a fixed x.
///
/// d_y = x^4 + 2(m - 2n)x^2 + m^2 decides whether the quadratic
/// x*y^2 - (x^2 + m)*y + n*x = 0 has rational roots; t is its exact square
/// root when one exists. d_x = 4n(n - m) + d_y is the discriminant of the
/// quartic in x obtained by eliminating y, with s its root when square.
struct QuadDiscriminants {
  Rat d_y;
  std::optional<Rat> t;
  Rat d_x;
  std::optional<Rat> s;
};

QuadDiscriminants discriminants_at(const PairMN& pair, const Rat& x);

/// All rational y with x + m/x = y + n/y, via the quadratic in y:
/// y = (x^2 + m +- t) / (2x). Returns 0, 1 or 2 values, ascending.
/// Throws ZeroX.
std::vector<Rat> solve_for_y(const PairMN& pair, const Rat& x);

/// Every solution (x, y) whose x has height <= cfg.height_bound, both signs
/// of x, sorted by (x, y). y is exact and not constrained by the bound.
std::vector<Solution> search_solutions(const PairMN& pair, const SearchConfig& cfg);

/// Number of essentially different representations carried by a solution
/// list: two per solution orbit (the orbit and its global sign flip), i.e.
/// twice the number of distinct squared factor sums. No bound is enforced.
int count_rep_classes(const PairMN& pair, const std::vector<Solution>& sols);

/// Number of essentially different representations among the solutions the
/// bounded search finds: a lower bound for the true count. Throws
/// RepBoundExceeded when more than four are found. Beware: such pairs
/// exist — (30, 42) already carries 3x10/6x7, 2x15/3x14 and
/// 12x(5/2)/4x(21/2) below height 12 — so callers wanting the plain count
/// should use count_rep_classes on a search result instead.
int rho_within_height(const PairMN& pair, const SearchConfig& cfg);

/// Bound-checked variant of count_rep_classes (this is what
/// rho_within_height applies to its search result).
int rho_from_solutions(const PairMN& pair, const std::vector<Solution>& sols);

}  // namespace isoadd

#endif  // ISOADD_SOLVER_HPP
