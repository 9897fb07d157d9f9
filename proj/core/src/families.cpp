#include "isoadd/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace isoadd {

namespace {

void require_nonzero(const Rat& v, const char* name) {
  if (v.is_zero()) {
    throw Error(ErrorKind::ExclusionViolated, std::string(name) + " must be nonzero");
  }
}

/// Coprime nonzero (a, b), sign-normalized so a > 0 (the formulas only
/// depend on the ratios a/b and b/a, which a joint sign flip preserves).
std::pair<long long, long long> normalize_ab(long long a, long long b,
                                             bool forbid_equal_magnitude) {
  if (a == 0 || b == 0) {
    throw Error(ErrorKind::ExclusionViolated, "a and b must be nonzero");
  }
  if (std::gcd(a, b) != 1) {
    throw Error(ErrorKind::NotCoprime,
                "a and b must be coprime, got gcd = " +
                    std::to_string(std::gcd(a, b)));
  }
  if (forbid_equal_magnitude && (a == b || a == -b)) {
    throw Error(ErrorKind::ExclusionViolated,
                "a = +-b is excluded (that regime is case c1)");
  }
  if (a < 0) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

void finalize(FamilyInstance& inst) {
  std::set<Rat> classes;
  for (std::size_t i = 0; i < inst.solutions.size(); ++i) {
    Rat z = inst.solutions[i].x + inst.pair.m / inst.solutions[i].x;
    if (z != inst.sums[i]) {
      throw std::logic_error("generated sum disagrees with x + m/x");
    }
    if (!is_solution(inst.pair, inst.solutions[i])) {
      throw std::logic_error("generated point is not a solution");
    }
    classes.insert(z.squared());
  }
  inst.rho = 2 * static_cast<int>(classes.size());
  inst.collapsed = inst.solutions.size() == 4 && classes.size() == 1;
}

}  // namespace

const char* case_name(CaseId id) {
  switch (id) {
    case CaseId::C1: return "c1";
    case CaseId::C311: return "c311";
    case CaseId::C312: return "c312";
    case CaseId::C32: return "c32";
    case CaseId::C33: return "c33";
  }
  return "?";
}

CaseId parse_case_id(const std::string& text, bool* c1_alias) {
  if (c1_alias) *c1_alias = false;
  if (text == "c1" || text == "C1") return CaseId::C1;
  if (text == "c2" || text == "C2") {
    // The a = -b branch of the derivation; it yields the same solutions as
    // c1 and is kept as an alias rather than a second generator.
    if (c1_alias) *c1_alias = true;
    return CaseId::C1;
  }
  if (text == "c311" || text == "C311") return CaseId::C311;
  if (text == "c312" || text == "C312") return CaseId::C312;
  if (text == "c32" || text == "C32") return CaseId::C32;
  if (text == "c33" || text == "C33") return CaseId::C33;
  throw Error(ErrorKind::ParseError, "unknown family case: " + text);
}

FamilyInstance case1(const Rat& l, const Rat& n) {
  require_nonzero(l, "l");
  require_nonzero(n, "n");
  Rat l2 = l.squared();
  if (n == l2 / Rat(2)) {
    throw Error(ErrorKind::ExclusionViolated, "n = l^2/2 excluded (m would equal n)");
  }
  if (n == l2 / Rat(4)) {
    throw Error(ErrorKind::ExclusionViolated, "n = l^2/4 excluded (m would be zero)");
  }
  Rat m = Rat(2) * n - l2 / Rat(2);
  FamilyInstance inst;
  inst.case_id = CaseId::C1;
  inst.params = {{"l", l}, {"n", n}};
  inst.pair = PairMN(m, n);
  Rat y = Rat(2) * n / l;
  inst.solutions = {Solution{l, y}, Solution{-l, -y}};
  Rat z = y + l / Rat(2);
  inst.sums = {z, -z};
  finalize(inst);
  return inst;
}

FamilyInstance case311(long long a_in, long long b_in, const Rat& l1, const Rat& l2) {
  auto [a, b] = normalize_ab(a_in, b_in, true);
  require_nonzero(l1, "l1");
  require_nonzero(l2, "l2");
  if (l1 == l2) {
    throw Error(ErrorKind::ExclusionViolated, "l1 = l2 belongs to case c312");
  }
  Rat apb = Rat(a) + Rat(b);
  Rat amb = Rat(a) - Rat(b);
  Rat ratio2 = (l1 / l2).squared();
  if (ratio2 == apb / amb) {
    throw Error(ErrorKind::ExclusionViolated,
                "(l1/l2)^2 = (a+b)/(a-b) excluded (n would be zero)");
  }
  if (ratio2 == -(apb / amb)) {
    throw Error(ErrorKind::ExclusionViolated,
                "(l1/l2)^2 = -(a+b)/(a-b) excluded (m would equal n)");
  }
  Rat l1s = l1.squared();
  Rat l2s = l2.squared();
  Rat m = -(amb / apb * l1s + apb / amb * l2s) / Rat(2);
  Rat n = Rat(b) / Rat(2) * (l1s / apb - l2s / amb);
  FamilyInstance inst;
  inst.case_id = CaseId::C311;
  inst.params = {{"a", Rat(a)}, {"b", Rat(b)}, {"l1", l1}, {"l2", l2}};
  inst.pair = PairMN(m, n);
  Rat y1 = (amb * l1s - apb * l2s) / (Rat(2) * amb * l1);
  Rat y2 = -(Rat(b) * l2) / amb;
  inst.solutions = {Solution{l1, y1}, Solution{-l1, -y1}, Solution{l2, y2},
                    Solution{-l2, -y2}};
  Rat z1 = l1 + m / l1;
  Rat z2 = l2 + m / l2;
  inst.sums = {z1, -z1, z2, -z2};
  finalize(inst);
  return inst;
}

FamilyInstance case312(long long a_in, long long b_in, const Rat& l) {
  auto [a, b] = normalize_ab(a_in, b_in, true);
  require_nonzero(l, "l");
  Rat l2 = l.squared();
  Rat as = Rat(a).squared();
  Rat bs = Rat(b).squared();
  Rat denom = as - bs;
  Rat m = -(as + bs) / denom * l2;
  Rat n = -bs / denom * l2;
  FamilyInstance inst;
  inst.case_id = CaseId::C312;
  inst.params = {{"a", Rat(a)}, {"b", Rat(b)}, {"l", l}};
  inst.pair = PairMN(m, n);
  Rat y = -(Rat(b) * l) / (Rat(a) - Rat(b));
  inst.solutions = {Solution{l, y}, Solution{-l, -y}};
  Rat z = l + m / l;
  inst.sums = {z, -z};
  finalize(inst);
  return inst;
}

FamilyInstance case32(long long a_in, long long b_in, const Rat& l, const Rat& n) {
  auto [a, b] = normalize_ab(a_in, b_in, true);
  require_nonzero(l, "l");
  require_nonzero(n, "n");
  Rat apb = Rat(a) + Rat(b);
  Rat l2 = l.squared();
  if (n == Rat(a) * Rat(b) * l2 / apb.squared()) {
    throw Error(ErrorKind::ExclusionViolated,
                "n = a*b*l^2/(a+b)^2 excluded (m would be zero)");
  }
  if (n == Rat(b) * l2 / apb) {
    throw Error(ErrorKind::ExclusionViolated,
                "n = b*l^2/(a+b) excluded (m would equal n)");
  }
  Rat m = apb / Rat(b) * n - Rat(a) * l2 / apb;
  FamilyInstance inst;
  inst.case_id = CaseId::C32;
  inst.params = {{"a", Rat(a)}, {"b", Rat(b)}, {"l", l}, {"n", n}};
  inst.pair = PairMN(m, n);
  Rat y = apb * n / (Rat(b) * l);
  inst.solutions = {Solution{l, y}, Solution{-l, -y}};
  Rat z = l + m / l;
  inst.sums = {z, -z};
  finalize(inst);
  return inst;
}

FamilyInstance case33(long long a_in, long long b_in, const Rat& l, const Rat& n) {
  auto [a, b] = normalize_ab(a_in, b_in, true);
  require_nonzero(l, "l");
  require_nonzero(n, "n");
  Rat amb = Rat(a) - Rat(b);
  Rat l2 = l.squared();
  if (n == -(Rat(a) * Rat(b) * l2 / amb.squared())) {
    throw Error(ErrorKind::ExclusionViolated,
                "n = -a*b*l^2/(a-b)^2 excluded (m would be zero)");
  }
  if (n == -(Rat(b) * l2 / amb)) {
    throw Error(ErrorKind::ExclusionViolated,
                "n = -b*l^2/(a-b) excluded (m would equal n)");
  }
  Rat m = -(amb / Rat(b) * n + Rat(a) * l2 / amb);
  FamilyInstance inst;
  inst.case_id = CaseId::C33;
  inst.params = {{"a", Rat(a)}, {"b", Rat(b)}, {"l", l}, {"n", n}};
  inst.pair = PairMN(m, n);
  Rat y = -(Rat(b) * l) / amb;
  inst.solutions = {Solution{l, y}, Solution{-l, -y}};
  Rat z = l + m / l;
  inst.sums = {z, -z};
  finalize(inst);
  return inst;
}

bool verify_family(const FamilyInstance& inst) {
  auto param = [&inst](const char* name) -> const Rat& {
    for (const auto& [key, value] : inst.params) {
      if (key == name) return value;
    }
    throw Error(ErrorKind::ParseError,
                std::string("missing family parameter: ") + name);
  };
  auto int_param = [&param](const char* name) {
    const Rat& v = param(name);
    if (!v.is_integer()) {
      throw Error(ErrorKind::ParseError, std::string(name) + " must be an integer");
    }
    return static_cast<long long>(v.num());
  };
  try {
    FamilyInstance fresh;
    switch (inst.case_id) {
      case CaseId::C1:
        fresh = case1(param("l"), param("n"));
        break;
      case CaseId::C311:
        fresh = case311(int_param("a"), int_param("b"), param("l1"), param("l2"));
        break;
      case CaseId::C312:
        fresh = case312(int_param("a"), int_param("b"), param("l"));
        break;
      case CaseId::C32:
        fresh = case32(int_param("a"), int_param("b"), param("l"), param("n"));
        break;
      case CaseId::C33:
        fresh = case33(int_param("a"), int_param("b"), param("l"), param("n"));
        break;
    }
    if (!(fresh.pair == inst.pair) || fresh.solutions != inst.solutions ||
        fresh.sums != inst.sums) {
      return false;
    }
  } catch (const Error&) {
    return false;
  }
  for (std::size_t i = 0; i < inst.solutions.size(); ++i) {
    if (!is_solution(inst.pair, inst.solutions[i])) return false;
    if (inst.solutions[i].x + inst.pair.m / inst.solutions[i].x != inst.sums[i]) {
      return false;
    }
  }
  return true;
}

FamilyInstance draw_random_instance(CaseId id, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-12, 12);
  std::uniform_int_distribution<long long> den(1, 8);
  std::uniform_int_distribution<long long> small(-9, 9);
  auto rand_rat = [&]() { return Rat(num(rng), den(rng)); };
  for (;;) {
    try {
      switch (id) {
        case CaseId::C1: {
          Rat l = rand_rat(), n = rand_rat();
          if (l.is_zero() || n.is_zero()) continue;
          return case1(l, n);
        }
        case CaseId::C311: {
          long long a = small(rng), b = small(rng);
          Rat l1 = rand_rat(), l2 = rand_rat();
          if (a == 0 || b == 0 || l1.is_zero() || l2.is_zero()) continue;
          return case311(a, b, l1, l2);
        }
        case CaseId::C312: {
          long long a = small(rng), b = small(rng);
          Rat l = rand_rat();
          if (a == 0 || b == 0 || l.is_zero()) continue;
          return case312(a, b, l);
        }
        case CaseId::C32: {
          long long a = small(rng), b = small(rng);
          Rat l = rand_rat(), n = rand_rat();
          if (a == 0 || b == 0 || l.is_zero() || n.is_zero()) continue;
          return case32(a, b, l, n);
        }
        case CaseId::C33: {
          long long a = small(rng), b = small(rng);
          Rat l = rand_rat(), n = rand_rat();
          if (a == 0 || b == 0 || l.is_zero() || n.is_zero()) continue;
          return case33(a, b, l, n);
        }
      }
    } catch (const Error&) {
      continue;  // excluded parameters: redraw
    }
  }
}

}  // namespace isoadd
