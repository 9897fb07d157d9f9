#ifndef ISOADD_FAMILIES_HPP
#define ISOADD_FAMILIES_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "isoadd/representations.hpp"

namespace isoadd {

/// The five parametric families that generate every pair (m, n) carrying at
/// least one equal-sum factorization, each with the factors and sums in
/// closed form. (A sixth case of the underlying derivation reproduces C1
/// solution for solution and is exposed only as an alias.)
enum class CaseId { C1, C311, C312, C32, C33 };

const char* case_name(CaseId id);
CaseId parse_case_id(const std::string& text, bool* c1_alias = nullptr);

/// One generated witness: the pair, the solutions guaranteed by the chosen
/// parameters, and their factor sums (z values, aligned with solutions).
struct FamilyInstance {
  CaseId case_id = CaseId::C1;
  std::vector<std::pair<std::string, Rat>> params;
  PairMN pair{Rat(1), Rat(2)};
  std::vector<Solution> solutions;
  std::vector<Rat> sums;
  /// 2 x (number of distinct squared sums among the solutions); C311 aims
  /// for 4 but can collapse to 2 when its two solution classes land in the
  /// same orbit.
  int rho = 0;
  bool collapsed = false;
};

/// m = 2n - l^2/2 with solutions (+-l, +-2n/l) and sums +-(2n/l + l/2).
/// Excluded: l = 0, n = 0, n = l^2/2 (m would equal n), n = l^2/4 (m = 0).
FamilyInstance case1(const Rat& l, const Rat& n);

/// Two solution classes X = +-l1 and X = +-l2 over coprime integers a, b
/// with a != +-b:
///   m = -((a-b)/(a+b) l1^2 + (a+b)/(a-b) l2^2) / 2
///   n = b/2 (l1^2/(a+b) - l2^2/(a-b))
/// Excluded: l1 = l2 (see case312), (l1/l2)^2 = (a+b)/(a-b) (n = 0) and
/// (l1/l2)^2 = -(a+b)/(a-b) (m = n). The two classes can still fall into
/// one orbit; the instance reports the measured count.
FamilyInstance case311(long long a, long long b, const Rat& l1, const Rat& l2);

/// The l1 = l2 = l specialization:
///   m = -(a^2+b^2)/(a^2-b^2) l^2,  n = -b^2/(a^2-b^2) l^2,
/// solutions (+-l, -+b l/(a-b)).
FamilyInstance case312(long long a, long long b, const Rat& l);

/// m = (a+b)/b n - a l^2/(a+b) with solutions (+-l, +-(a+b)n/(bl)).
/// Excluded: n = a b l^2/(a+b)^2 (m = 0) and n = b l^2/(a+b) (m = n).
FamilyInstance case32(long long a, long long b, const Rat& l, const Rat& n);

/// m = -((a-b)/b n + a l^2/(a-b)) with solutions (+-l, -+b l/(a-b)).
/// Excluded: n = -a b l^2/(a-b)^2 (m = 0) and n = -b l^2/(a-b) (m = n).
FamilyInstance case33(long long a, long long b, const Rat& l, const Rat& n);

/// Re-derives the instance from its parameters and checks every solution,
/// sum, and the pair itself.
bool verify_family(const FamilyInstance& inst);

/// Deterministic pseudo-random valid instance of the given case (rejection
/// sampling over small parameters).
FamilyInstance draw_random_instance(CaseId id, std::mt19937_64& rng);

}  // namespace isoadd

#endif  // ISOADD_FAMILIES_HPP
