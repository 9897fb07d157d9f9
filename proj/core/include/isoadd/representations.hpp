#ifndef ISOADD_REPRESENTATIONS_HPP
#define ISOADD_REPRESENTATIONS_HPP

#include <vector>

#include "isoadd/rat.hpp"

namespace isoadd {

/// A pair of distinct non-zero rationals whose factorizations we study.
struct PairMN {
  Rat m;
  Rat n;

  PairMN(Rat m_in, Rat n_in);

  friend bool operator==(const PairMN& a, const PairMN& b) {
    return a.m == b.m && a.n == b.n;
  }
};

/// One solution (x, y) of x + m/x = y + n/y; the cofactors m/x and n/y are
/// implicit given the pair.
struct Solution {
  Rat x;
  Rat y;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Solution& a, const Solution& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

/// An iso-additive representation of (m, n): factorizations m = m1*m2 and
/// n = n1*n2 with equal factor sums z = m1+m2 = n1+n2 and m1*m2 != n1*n2.
struct IsoRep {
  Rat m1, m2;
  Rat n1, n2;
  Rat z;

  Rat m() const { return m1 * m2; }
  Rat n() const { return n1 * n2; }

  friend bool operator==(const IsoRep& a, const IsoRep& b) {
    return a.m1 == b.m1 && a.m2 == b.m2 && a.n1 == b.n1 && a.n2 == b.n2;
  }
  friend bool operator<(const IsoRep& a, const IsoRep& b);
};

/// The solutions generated from one base solution by swapping each
/// coordinate with its cofactor and by negating both coordinates.
/// In general 8 elements; 4 when x or y coincides with its own cofactor
/// (m = x^2 or n = y^2), flagged as degenerate.
struct Orbit {
  std::vector<Solution> elements;
  bool degenerate = false;
};

/// (t, r, s) with t^2 - r^2 = m and t^2 - s^2 = n, r != s.
struct DiffSquaresForm {
  Rat t, r, s;
};

/// True iff (x, y) satisfies x + m/x = y + n/y with x, y nonzero, x != y.
bool is_solution(const PairMN& pair, const Solution& sol);

/// Validates the four factors and builds the representation.
/// Throws ZeroFactor, SumMismatch (m1+m2 != n1+n2) or EqualProducts (the
/// products agree, i.e. the pair would have m = n).
IsoRep make_iso_rep(const Rat& m1, const Rat& m2, const Rat& n1, const Rat& n2);

/// The representation induced by a solution: m = x * (m/x), n = y * (n/y).
IsoRep induced_rep(const PairMN& pair, const Solution& sol);

/// Orbit of a solution under cofactor swaps and global sign flip,
/// deduplicated; throws NotASolution.
Orbit orbit(const Solution& sol, const PairMN& pair);

/// Canonical representative of the class of a representation under
/// reordering within each factor pair: factors sorted ascending by value.
/// Sign-negated representations stay distinct (z flips sign).
IsoRep canonical_rep(const IsoRep& rep);

/// Canonicalizes and deduplicates; throws MixedPairs unless all inputs
/// factor the same (m, n).
///
/// Note: a representation with factor sum z = 0 has the shape
/// m = x * (-x), n = y * (-y) and is structurally identical to its own
/// sign negation, so it appears once here even though the two signed
/// solution classes behind it are counted separately by rho.
std::vector<IsoRep> essentially_different(const std::vector<IsoRep>& reps);

/// (t, r, s) = (z/2, (z-2x)/2, (z-2y)/2); throws NotASolution.
DiffSquaresForm to_diff_squares(const Solution& sol, const PairMN& pair);

/// All structural invariants hold and the derived solution (m1, n1)
/// satisfies x/y = (xy - m)/(xy - n).
bool verify_iso_rep(const IsoRep& rep);

}  // namespace isoadd

#endif  // ISOADD_REPRESENTATIONS_HPP
