#include "isoadd/solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "isoadd/scan.hpp"

namespace isoadd {

QuadDiscriminants discriminants_at(const PairMN& pair, const Rat& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroX, "x must be nonzero");
  Rat x2 = x.squared();
  Rat d_y = x2.squared() + Rat(2) * (pair.m - Rat(2) * pair.n) * x2 + pair.m.squared();
  QuadDiscriminants out;
  out.d_y = d_y;
  out.t = sqrt_exact(d_y);
  out.d_x = Rat(4) * pair.n * (pair.n - pair.m) + d_y;
  out.s = sqrt_exact(out.d_x);
  return out;
}

std::vector<Rat> solve_for_y(const PairMN& pair, const Rat& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroX, "x must be nonzero");
  Rat x2 = x.squared();
  Rat d_y = x2.squared() + Rat(2) * (pair.m - Rat(2) * pair.n) * x2 + pair.m.squared();
  auto t = sqrt_exact(d_y);
  if (!t) return {};
  Rat twox = x + x;
  std::vector<Rat> ys;
  ys.push_back((x2 + pair.m + *t) / twox);
  if (!t->is_zero()) ys.push_back((x2 + pair.m - *t) / twox);
  // y = 0 and y = x cannot actually be roots for a valid pair; guard anyway.
  std::erase_if(ys, [&x](const Rat& y) { return y.is_zero() || y == x; });
  std::sort(ys.begin(), ys.end());
  return ys;
}

namespace {

std::vector<Solution> generic_search(const PairMN& pair, long long height) {
  std::vector<Solution> out;
  for (long long q = 1; q <= height; ++q) {
    for (long long p = 1; p <= height; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rat x(p, q);
      for (const Rat& y : solve_for_y(pair, x)) {
        out.push_back(Solution{x, y});
        out.push_back(Solution{-x, -y});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Solution> search_solutions(const PairMN& pair, const SearchConfig& cfg) {
  if (fast_search_applicable(pair, cfg.height_bound)) {
    return fast_search_integral(static_cast<long long>(pair.m.num()),
                                static_cast<long long>(pair.n.num()),
                                cfg.height_bound);
  }
  return generic_search(pair, cfg.height_bound);
}

int count_rep_classes(const PairMN& pair, const std::vector<Solution>& sols) {
  // Solutions with the same squared factor sum z^2 form one orbit; each
  // orbit carries exactly two essentially different representations (the
  // orbit and its global sign flip).
  std::set<Rat> classes;
  for (const Solution& sol : sols) {
    Rat z = sol.x + pair.m / sol.x;
    classes.insert(z.squared());
  }
  return 2 * static_cast<int>(classes.size());
}

int rho_from_solutions(const PairMN& pair, const std::vector<Solution>& sols) {
  int rho = count_rep_classes(pair, sols);
  if (rho > 4) {
    throw Error(ErrorKind::RepBoundExceeded,
                "found " + std::to_string(rho) +
                    " essentially different representations of (" + pair.m.str() +
                    ", " + pair.n.str() + "); the four-representation bound fails");
  }
  return rho;
}

int rho_within_height(const PairMN& pair, const SearchConfig& cfg) {
  return rho_from_solutions(pair, search_solutions(pair, cfg));
}

}  // namespace isoadd
