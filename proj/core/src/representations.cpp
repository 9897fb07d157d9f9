#include "isoadd/representations.hpp"

#include <algorithm>
#include <utility>

namespace isoadd {

PairMN::PairMN(Rat m_in, Rat n_in) : m(std::move(m_in)), n(std::move(n_in)) {
  if (m.is_zero() || n.is_zero()) {
    throw Error(ErrorKind::InvalidPair, "pair requires nonzero m and n");
  }
  if (m == n) {
    throw Error(ErrorKind::InvalidPair, "pair requires m != n");
  }
}

bool operator<(const IsoRep& a, const IsoRep& b) {
  if (a.m1 != b.m1) return a.m1 < b.m1;
  if (a.m2 != b.m2) return a.m2 < b.m2;
  if (a.n1 != b.n1) return a.n1 < b.n1;
  return a.n2 < b.n2;
}

bool is_solution(const PairMN& pair, const Solution& sol) {
  if (sol.x.is_zero() || sol.y.is_zero() || sol.x == sol.y) return false;
  return sol.x + pair.m / sol.x == sol.y + pair.n / sol.y;
}

IsoRep make_iso_rep(const Rat& m1, const Rat& m2, const Rat& n1, const Rat& n2) {
  if (m1.is_zero() || m2.is_zero() || n1.is_zero() || n2.is_zero()) {
    throw Error(ErrorKind::ZeroFactor, "all four factors must be nonzero");
  }
  Rat z = m1 + m2;
  if (z != n1 + n2) {
    throw Error(ErrorKind::SumMismatch,
                "factor sums differ: " + z.str() + " vs " + (n1 + n2).str());
  }
  if (m1 * m2 == n1 * n2) {
    throw Error(ErrorKind::EqualProducts,
                "products coincide (" + (m1 * m2).str() + "); m must differ from n");
  }
  return IsoRep{m1, m2, n1, n2, z};
}

IsoRep induced_rep(const PairMN& pair, const Solution& sol) {
  return make_iso_rep(sol.x, pair.m / sol.x, sol.y, pair.n / sol.y);
}

Orbit orbit(const Solution& sol, const PairMN& pair) {
  if (!is_solution(pair, sol)) {
    throw Error(ErrorKind::NotASolution,
                "(" + sol.x.str() + ", " + sol.y.str() + ") does not solve the pair");
  }
  Rat xc = pair.m / sol.x;  // cofactor of x
  Rat yc = pair.n / sol.y;  // cofactor of y
  Orbit out;
  out.degenerate = (sol.x == xc) || (sol.y == yc);
  Solution base[4] = {{sol.x, sol.y}, {sol.x, yc}, {xc, sol.y}, {xc, yc}};
  auto push_unique = [&out](const Solution& s) {
    if (std::find(out.elements.begin(), out.elements.end(), s) == out.elements.end()) {
      out.elements.push_back(s);
    }
  };
  for (const Solution& s : base) push_unique(s);
  for (const Solution& s : base) push_unique(Solution{-s.x, -s.y});
  return out;
}

IsoRep canonical_rep(const IsoRep& rep) {
  IsoRep out = rep;
  if (out.m2 < out.m1) std::swap(out.m1, out.m2);
  if (out.n2 < out.n1) std::swap(out.n1, out.n2);
  return out;
}

std::vector<IsoRep> essentially_different(const std::vector<IsoRep>& reps) {
  std::vector<IsoRep> out;
  for (const IsoRep& rep : reps) {
    if (!reps.empty() && (rep.m() != reps.front().m() || rep.n() != reps.front().n())) {
      throw Error(ErrorKind::MixedPairs,
                  "representations do not all factor the same pair");
    }
    out.push_back(canonical_rep(rep));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DiffSquaresForm to_diff_squares(const Solution& sol, const PairMN& pair) {
  if (!is_solution(pair, sol)) {
    throw Error(ErrorKind::NotASolution, "not a solution of the pair");
  }
  Rat z = sol.x + pair.m / sol.x;
  Rat half(1, 2);
  return DiffSquaresForm{z * half, (z - sol.x - sol.x) * half,
                         (z - sol.y - sol.y) * half};
}

bool verify_iso_rep(const IsoRep& rep) {
  if (rep.m1.is_zero() || rep.m2.is_zero() || rep.n1.is_zero() || rep.n2.is_zero()) {
    return false;
  }
  if (rep.m1 + rep.m2 != rep.z || rep.n1 + rep.n2 != rep.z) return false;
  Rat m = rep.m();
  Rat n = rep.n();
  if (m == n) return false;
  // x/y = (xy - m)/(xy - n) with (x, y) = (m1, n1).
  Rat xy = rep.m1 * rep.n1;
  if (xy == n) return false;  // would make the right side undefined
  return rep.m1 * (xy - n) == rep.n1 * (xy - m);
}

}  // namespace isoadd
