#include "isoadd/curve.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace isoadd {

Curve::Curve(const PairMN& pair)
    : m(pair.m), n(pair.n), a2(-(pair.m + pair.n)), a1(pair.m * pair.n) {}

std::string CurvePoint::str() const {
  if (infinity_) return "infinity";
  return "(" + u_.str() + ", " + w_.str() + ")";
}

CurvePoint two_torsion_t(const Curve&) { return CurvePoint(Rat(0), Rat(0)); }
CurvePoint two_torsion_m(const Curve& c) { return CurvePoint(c.m, Rat(0)); }
CurvePoint two_torsion_n(const Curve& c) { return CurvePoint(c.n, Rat(0)); }

bool on_curve(const Curve& c, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  return p.w().squared() == p.u() * (p.u() - c.m) * (p.u() - c.n);
}

namespace {

void require_on_curve(const Curve& c, const CurvePoint& p) {
  if (!on_curve(c, p)) {
    throw Error(ErrorKind::NotOnCurve, p.str() + " is not on the curve");
  }
}

}  // namespace

AddResult add(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
  require_on_curve(c, p);
  require_on_curve(c, q);
  if (p.is_infinity()) return {q, std::nullopt};
  if (q.is_infinity()) return {p, std::nullopt};
  if (p.u() == q.u() && p.w() == -q.w()) {
    // Vertical chord (covers doubling a point with w = 0).
    return {CurvePoint::at_infinity(), std::nullopt};
  }
  Rat lambda;
  if (p.u() == q.u()) {
    // p == q with w != 0: tangent slope from implicit differentiation.
    lambda = (Rat(3) * p.u().squared() + Rat(2) * c.a2 * p.u() + c.a1) /
             (p.w() + p.w());
  } else {
    lambda = (q.w() - p.w()) / (q.u() - p.u());
  }
  Rat nu = p.w() - lambda * p.u();
  Rat u3 = lambda.squared() - c.a2 - p.u() - q.u();
  Rat w3 = -(nu + lambda * u3);
  return {CurvePoint(u3, w3), Line{lambda, nu}};
}

CurvePoint double_point(const Curve& c, const CurvePoint& p) {
  return add(c, p, p).sum;
}

CurvePoint multiply(const Curve& c, int k, const CurvePoint& p) {
  require_on_curve(c, p);
  CurvePoint acc = CurvePoint::at_infinity();
  for (int i = 0; i < k; ++i) acc = add(c, acc, p).sum;
  return acc;
}

namespace {

void require_solution(const Curve& c, const Solution& sol) {
  if (!is_solution(c.pair(), sol)) {
    throw Error(ErrorKind::NotASolution,
                "(" + sol.x.str() + ", " + sol.y.str() +
                    ") does not solve x + m/x = y + n/y for this curve");
  }
}

}  // namespace

CurvePoint to_curve_point(const Curve& c, const Solution& sol) {
  require_solution(c, sol);
  Rat u = sol.x * sol.y;
  Rat w = (c.m / sol.x - sol.y) * u;
  Rat w_alt = (c.n / sol.y - sol.x) * u;
  if (w != w_alt) {
    throw std::logic_error("the two w formulas disagree on a valid solution");
  }
  CurvePoint p(u, w);
  if (!on_curve(c, p)) {
    throw std::logic_error("solution image missed the curve");
  }
  return p;
}

std::array<CurvePoint, 4> labelled_points(const Curve& c, const Solution& sol) {
  require_solution(c, sol);
  const Rat& x = sol.x;
  const Rat& y = sol.y;
  Rat xc = c.m / x;  // m/x
  Rat yc = c.n / y;  // n/y
  Rat u1 = x * y, u2 = x * yc, u3 = xc * y, u4 = xc * yc;
  std::array<CurvePoint, 4> pts = {
      CurvePoint(u1, (xc - y) * u1),
      CurvePoint(u2, (x - y) * u2),
      CurvePoint(u3, (x - y) * u3),
      CurvePoint(u4, (xc - y) * u4),
  };
  for (const CurvePoint& p : pts) {
    if (!on_curve(c, p)) {
      throw std::logic_error("labelled point missed the curve");
    }
  }
  return pts;
}

std::vector<CurvePoint> orbit_points(const Curve& c, const Solution& sol) {
  auto pts = labelled_points(c, sol);
  std::vector<CurvePoint> out;
  auto push_unique = [&out](const CurvePoint& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (const CurvePoint& p : pts) {
    push_unique(p);
    push_unique(-p);
  }
  return out;
}

std::vector<IdentityResult> check_addition_identities(const Curve& c,
                                                      const Solution& sol) {
  auto pts = labelled_points(c, sol);
  const CurvePoint &p1 = pts[0], &p2 = pts[1], &p3 = pts[2], &p4 = pts[3];
  const Rat& x = sol.x;
  const Rat& y = sol.y;
  Rat xc = c.m / x;
  Rat yc = c.n / y;

  struct Spec {
    const char* id;
    CurvePoint lhs_a, lhs_b;
    CurvePoint rhs;
    Line line;
  };
  const Spec specs[6] = {
      {"P1+P4=T", p1, p4, two_torsion_t(c), Line{xc - y, Rat(0)}},
      {"P2+P3=T", p2, p3, two_torsion_t(c), Line{x - y, Rat(0)}},
      {"P1+P3=M", p1, p3, two_torsion_m(c), Line{-y, c.m * y}},
      {"P2+P4=M", p2, p4, two_torsion_m(c), Line{yc, -(c.m * c.n) / y}},
      {"P1-P2=N", p1, -p2, two_torsion_n(c), Line{-x, c.n * x}},
      {"P3-P4=N", p3, -p4, two_torsion_n(c), Line{-xc, (c.m * c.n) / x}},
  };

  std::vector<IdentityResult> out;
  out.reserve(6);
  for (const Spec& s : specs) {
    AddResult res = add(c, s.lhs_a, s.lhs_b);
    IdentityResult r;
    r.id = s.id;
    r.expected = s.rhs;
    r.computed = res.sum;
    r.expected_line = s.line;
    r.computed_line = res.line;
    r.holds = (res.sum == s.rhs) && res.line && (*res.line == s.line);
    out.push_back(std::move(r));
  }
  return out;
}

CurvePoint double_from_solution(const Curve& c, const Solution& sol, int j) {
  require_solution(c, sol);
  if (j < 1 || j > 4) {
    throw Error(ErrorKind::Unsupported, "label index must be 1..4");
  }
  Rat z = sol.x + c.m / sol.x;
  Rat half = z / Rat(2);
  Rat u = half.squared();
  Rat w = half * (half - sol.x) * (half - sol.y);
  if (j <= 2) w = -w;
  return CurvePoint(u, w);
}

DerivedChecksReport check_derived_identities(const Curve& c, const Solution& sol) {
  auto pts = labelled_points(c, sol);
  const CurvePoint t = two_torsion_t(c);
  const CurvePoint m = two_torsion_m(c);
  const CurvePoint n = two_torsion_n(c);
  const CurvePoint o = CurvePoint::at_infinity();

  DerivedChecksReport report;
  auto check = [&c, &report](std::vector<IdentityResult>& sink, std::string id,
                             const CurvePoint& lhs_a, const CurvePoint& lhs_b,
                             const CurvePoint& rhs) {
    IdentityResult r;
    r.id = std::move(id);
    r.computed = add(c, lhs_a, lhs_b).sum;
    r.expected = rhs;
    r.holds = r.computed == r.expected;
    report.all_hold = report.all_hold && r.holds;
    sink.push_back(std::move(r));
  };

  // Each P_j as (+-fixed point) + (two-torsion or identity), for every
  // choice of fixed point.
  const CurvePoint* shift[4][4] = {
      {&o, &n, &m, &t},  // fixed P1: P1=P1+O, P2=P1+N, P3=-P1+M, P4=-P1+T
      {&n, &o, &t, &m},  // fixed P2
      {&m, &t, &o, &n},  // fixed P3
      {&t, &m, &n, &o},  // fixed P4
  };
  const bool negate[4][4] = {
      {false, false, true, true},
      {false, false, true, true},
      {true, true, false, false},
      {true, true, false, false},
  };
  const char* names[4] = {"P1", "P2", "P3", "P4"};
  const char* shift_names[4][4] = {
      {"O", "N", "M", "T"},
      {"N", "O", "T", "M"},
      {"M", "T", "O", "N"},
      {"T", "M", "N", "O"},
  };
  for (int fixed = 0; fixed < 4; ++fixed) {
    for (int target = 0; target < 4; ++target) {
      CurvePoint base = negate[fixed][target] ? -pts[fixed] : pts[fixed];
      std::string id = std::string(names[target]) + "=" +
                       (negate[fixed][target] ? "-" : "") + names[fixed] + "+" +
                       shift_names[fixed][target];
      check(report.translations, std::move(id), base, *shift[fixed][target],
            pts[target]);
    }
  }

  // Multiples tied back to multiples of P1, k = 1..3.
  for (int k = 1; k <= 3; ++k) {
    CurvePoint even = multiply(c, 2 * k, pts[0]);
    std::string kk = std::to_string(2 * k);
    check(report.multiples, "[" + kk + "]P2=[" + kk + "]P1",
          multiply(c, 2 * k - 1, pts[1]), pts[1], even);
    check(report.multiples, "[" + kk + "]P3=-[" + kk + "]P1",
          multiply(c, 2 * k - 1, pts[2]), pts[2], -even);
    check(report.multiples, "[" + kk + "]P4=-[" + kk + "]P1",
          multiply(c, 2 * k - 1, pts[3]), pts[3], -even);
    CurvePoint odd = multiply(c, 2 * k + 1, pts[0]);
    std::string hh = std::to_string(2 * k + 1);
    check(report.multiples, "[" + hh + "]P2=[" + hh + "]P1+N",
          multiply(c, 2 * k, pts[1]), pts[1], add(c, odd, n).sum);
    check(report.multiples, "[" + hh + "]P3=-[" + hh + "]P1+M",
          multiply(c, 2 * k, pts[2]), pts[2], add(c, -odd, m).sum);
    check(report.multiples, "[" + hh + "]P4=-[" + hh + "]P1+T",
          multiply(c, 2 * k, pts[3]), pts[3], add(c, -odd, t).sum);
  }

  // Pairwise sums expressed through the double of P1.
  CurvePoint d = double_point(c, pts[0]);
  check(report.double_shifts, "P1+P2=N+[2]P1", pts[0], pts[1], add(c, n, d).sum);
  check(report.double_shifts, "P3+P4=N-[2]P1", pts[2], pts[3], add(c, n, -d).sum);
  check(report.double_shifts, "P1-P3=M+[2]P1", pts[0], -pts[2], add(c, m, d).sum);
  check(report.double_shifts, "P2-P4=M+[2]P1", pts[1], -pts[3], add(c, m, d).sum);
  check(report.double_shifts, "P1-P4=T+[2]P1", pts[0], -pts[3], add(c, t, d).sum);
  check(report.double_shifts, "P2-P3=T+[2]P1", pts[1], -pts[2], add(c, t, d).sum);
  return report;
}

TorsionReport torsion_order(const Curve& c, const CurvePoint& p) {
  require_on_curve(c, p);
  TorsionReport report;
  report.point = p;
  if (p.is_infinity()) {
    report.order = 1;
    report.multiples.push_back(p);
    return report;
  }
  CurvePoint acc = p;
  for (int k = 1; k <= 12; ++k) {
    report.multiples.push_back(acc);
    if (acc.is_infinity()) {
      report.order = k;
      return report;
    }
    acc = add(c, acc, p).sum;
  }
  return report;  // no order within Mazur's bound: infinite order
}

Classification classify_group_closure(const Curve& c, const Solution& sol) {
  auto pts = labelled_points(c, sol);
  Classification out;
  out.double_p1 = double_point(c, pts[0]);

  const CurvePoint t = two_torsion_t(c);
  const CurvePoint m = two_torsion_m(c);
  const CurvePoint n = two_torsion_n(c);
  if (out.double_p1 == t) {
    out.closure = Closure::DoublesToT;
  } else if (out.double_p1 == m) {
    out.closure = Closure::DoublesToM;
  } else if (out.double_p1 == n) {
    out.closure = Closure::DoublesToN;
  } else {
    out.closure = Closure::NotClosed;
    auto all = orbit_points(c, sol);
    out.double_in_orbit =
        std::find(all.begin(), all.end(), out.double_p1) != all.end();
    return out;
  }

  // Collapse the labelled points (they coincide two by two here).
  std::vector<std::string> orbit_labels;
  const char* names[4] = {"P1", "P2", "P3", "P4"};
  for (int j = 0; j < 4; ++j) {
    if (std::find(out.orbit.begin(), out.orbit.end(), pts[j]) != out.orbit.end())
      continue;
    if (std::find(out.orbit.begin(), out.orbit.end(), -pts[j]) != out.orbit.end())
      continue;
    out.orbit.push_back(pts[j]);
    orbit_labels.emplace_back(names[j]);
    out.orbit.push_back(-pts[j]);
    orbit_labels.emplace_back(std::string("-") + names[j]);
  }
  if (out.orbit.size() != 4) {
    throw std::logic_error("expected exactly four distinct orbit points");
  }

  out.elements = {CurvePoint::at_infinity(), t, m, n};
  out.labels = {"O", "T", "M", "N"};
  for (std::size_t i = 0; i < out.orbit.size(); ++i) {
    out.elements.push_back(out.orbit[i]);
    out.labels.push_back(orbit_labels[i]);
  }

  out.table.assign(8, std::vector<std::string>(8));
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      CurvePoint sum = add(c, out.elements[i], out.elements[j]).sum;
      auto it = std::find(out.elements.begin(), out.elements.end(), sum);
      if (it == out.elements.end()) {
        throw std::logic_error("closure table fell outside the eight elements");
      }
      out.table[i][j] = out.labels[static_cast<std::size_t>(
          std::distance(out.elements.begin(), it))];
    }
  }

  for (const CurvePoint& p : out.orbit) {
    TorsionReport cert = torsion_order(c, p);
    if (!cert.order || *cert.order != 4) {
      throw std::logic_error("orbit point is not of order four in a closed case");
    }
    out.order_certificates.push_back(std::move(cert));
  }
  return out;
}

namespace {

using u128_alias = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<u128_alias>(a) * b % mod);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, mod);
    base = mulmod_u64(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (v % p == 0) return v == p;
  }
  std::uint64_t d = v - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Deterministic Miller-Rabin witnesses for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, v);
      if (x == v - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t pollard_rho(std::uint64_t v) {
  if ((v & 1) == 0) return 2;
  std::uint64_t c = 1;
  while (true) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [v, c](std::uint64_t t) { return (mulmod_u64(t, t, v) + c) % v; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      std::uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, v);
    }
    if (d != v) return d;
    ++c;
  }
}

void factor_u64(std::uint64_t v, std::map<std::uint64_t, int>& out) {
  if (v == 1) return;
  if (is_prime_u64(v)) {
    ++out[v];
    return;
  }
  std::uint64_t d = pollard_rho(v);
  factor_u64(d, out);
  factor_u64(v / d, out);
}

std::vector<std::uint64_t> divisors_from_factors(
    const std::map<std::uint64_t, int>& factors, int power) {
  std::vector<std::uint64_t> divs = {1};
  for (const auto& [prime, mult] : factors) {
    std::size_t before = divs.size();
    u128_alias pk = 1;
    for (int e = 1; e <= mult * power; ++e) {
      pk *= prime;
      if (pk > UINT64_MAX) break;
      for (std::size_t i = 0; i < before; ++i) {
        u128_alias d = static_cast<u128_alias>(divs[i]) * pk;
        if (d <= UINT64_MAX) divs.push_back(static_cast<std::uint64_t>(d));
      }
    }
  }
  return divs;
}

}  // namespace

std::vector<CurvePoint> nagell_lutz_torsion(const Curve& c) {
  if (!c.m.is_integer() || !c.n.is_integer()) {
    throw Error(ErrorKind::NonIntegralCurve,
                "torsion enumeration requires integer m and n");
  }
  Int k_big = boost::multiprecision::abs(c.m.num() * c.n.num() *
                                         (c.m.num() - c.n.num()));
  if (k_big > UINT64_MAX) {
    throw Error(ErrorKind::Unsupported,
                "|m n (m - n)| too large for the divisor scan");
  }
  auto k = static_cast<std::uint64_t>(k_big);

  std::vector<CurvePoint> candidates = {CurvePoint(Rat(0), Rat(0)),
                                        CurvePoint(c.m, Rat(0)),
                                        CurvePoint(c.n, Rat(0))};
  std::map<std::uint64_t, int> factors;
  factor_u64(k, factors);
  // w ranges over divisors of |m n (m-n)| (w^2 divides its square); any
  // nonzero u with u(u-m)(u-n) = w^2 must divide w^2.
  for (std::uint64_t w : divisors_from_factors(factors, 1)) {
    std::map<std::uint64_t, int> w_factors;
    factor_u64(w, w_factors);
    Rat w_rat{Int(w)};
    Rat w2 = w_rat.squared();
    for (std::uint64_t du : divisors_from_factors(w_factors, 2)) {
      for (int sign : {1, -1}) {
        Rat u(Int(du) * sign);
        if (u * (u - c.m) * (u - c.n) == w2) {
          candidates.emplace_back(u, w_rat);
          candidates.emplace_back(u, -w_rat);
        }
      }
    }
  }

  std::vector<CurvePoint> torsion = {CurvePoint::at_infinity()};
  for (const CurvePoint& p : candidates) {
    if (std::find(torsion.begin(), torsion.end(), p) != torsion.end()) continue;
    if (torsion_order(c, p).order) torsion.push_back(p);
  }
  std::sort(torsion.begin(), torsion.end());
  return torsion;
}

}  // namespace isoadd
