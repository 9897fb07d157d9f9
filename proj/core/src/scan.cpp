#include "isoadd/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace isoadd {

namespace {

Int int_from_i128(i128 v) {
  bool neg = v < 0;
  u128 a = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
  Int out = static_cast<std::uint64_t>(a >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(a);
  return neg ? -out : out;
}

template <int Mod>
std::array<bool, Mod> square_residues() {
  std::array<bool, Mod> table{};
  for (int k = 0; k < Mod; ++k) table[static_cast<std::size_t>(k * k % Mod)] = true;
  return table;
}

const std::array<bool, 64> kSq64 = square_residues<64>();

}  // namespace

std::uint64_t isqrt_u128(u128 v) {
  if (v == 0) return 0;
  std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
  long double approx = static_cast<long double>(hi) * 18446744073709551616.0L +
                       static_cast<long double>(static_cast<std::uint64_t>(v));
  auto s = static_cast<std::uint64_t>(sqrtl(approx));
  while (s > 0 && static_cast<u128>(s) * s > v) --s;
  while (static_cast<u128>(s + 1) * (s + 1) <= v) ++s;
  return s;
}

std::optional<std::uint64_t> perfect_square_root_u128(u128 v) {
  if (!kSq64[static_cast<std::uint64_t>(v) & 63]) return std::nullopt;
  std::uint64_t s = isqrt_u128(v);
  if (static_cast<u128>(s) * s == v) return s;
  return std::nullopt;
}

bool fast_search_applicable(const PairMN& pair, long long height) {
  if (!pair.m.is_integer() || !pair.n.is_integer()) return false;
  const Int bound63 = Int(1) << 62;
  if (boost::multiprecision::abs(pair.m.num()) >= bound63) return false;
  if (boost::multiprecision::abs(pair.n.num()) >= bound63) return false;
  if (height > 100000) return false;
  auto m = static_cast<long long>(pair.m.num());
  auto n = static_cast<long long>(pair.n.num());
  i128 h2 = static_cast<i128>(height) * height;
  // |C| = |p^2 + m q^2| <= (1 + |m|) H^2 must square inside 128 bits, and
  // the subtracted 4|n| (pq)^2 term must too.
  i128 cmax = (static_cast<i128>(std::llabs(m)) + 1) * h2;
  if (cmax >= static_cast<i128>(1) << 62) return false;
  i128 nterm_limit = (static_cast<i128>(1) << 124) / (4 * h2) / h2;
  return static_cast<i128>(std::llabs(n)) < nterm_limit;
}

std::vector<Solution> fast_search_integral(long long m, long long n, long long height) {
  std::vector<Solution> out;
  for (long long q = 1; q <= height; ++q) {
    const i128 q2 = static_cast<i128>(q) * q;
    for (long long p = 1; p <= height; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const i128 c = static_cast<i128>(p) * p + m * q2;
      const long long pq = p * q;
      const i128 s4n = 4 * static_cast<i128>(n) * pq * pq;
      const i128 d = c * c - s4n;
      if (d < 0) continue;
      auto t = perfect_square_root_u128(static_cast<u128>(d));
      if (!t) continue;
      const i128 tt = static_cast<i128>(*t);
      const Rat x(p, q);
      const Rat y_plus(int_from_i128(c + tt), Int(2 * pq));
      out.push_back(Solution{x, y_plus});
      out.push_back(Solution{-x, -y_plus});
      if (tt != 0) {
        const Rat y_minus(int_from_i128(c - tt), Int(2 * pq));
        out.push_back(Solution{x, y_minus});
        out.push_back(Solution{-x, -y_minus});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// One found orbit class for a pair: |z| = zn/zd in lowest terms plus the
// first witness (x = p/q, with c = numerator of z * pq and t = sqrt of the
// discriminant) in (q, p) scan order.
struct ClassHit {
  long long zn, zd;
  long long p, q, c, t;
};

struct PairClasses {
  std::array<ClassHit, 16> hits;
  std::uint8_t count = 0;
  bool overflow = false;
};

inline int pair_index(int m, int n) {
  int mi = m < 0 ? m + 50 : m + 49;
  int ni = n < 0 ? n + 50 : n + 49;
  return mi * 100 + ni;
}

inline bool witness_before(const ClassHit& a, const ClassHit& b) {
  return a.q != b.q ? a.q < b.q : a.p < b.p;
}

void record_hit(PairClasses& cell, long long p, long long q, long long c,
                long long t) {
  long long pq = p * q;
  long long g = std::gcd(c < 0 ? -c : c, pq);
  ClassHit hit{(c < 0 ? -c : c) / g, pq / g, p, q, c, t};
  for (std::uint8_t i = 0; i < cell.count; ++i) {
    if (cell.hits[i].zn == hit.zn && cell.hits[i].zd == hit.zd) {
      if (witness_before(hit, cell.hits[i])) cell.hits[i] = hit;
      return;
    }
  }
  if (cell.count < cell.hits.size()) {
    cell.hits[cell.count++] = hit;
  } else {
    cell.overflow = true;
  }
}

constexpr std::uint64_t pow2_64_mod(std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  for (int i = 0; i < 64; ++i) r = (r * 2) % mod;
  return r;
}

// Residue screen for one modulus: d = c^2 -+ 4 n (pq)^2 can only be a
// square if d mod `mod` is a square residue. For fixed g = 4 (pq)^2 mod
// `mod`, whether that holds depends only on (c^2 mod `mod`, n), so one u64
// row per (g, c^2 residue) screens all n = 1..50 at once. rows_pos serves
// n > 0 (subtracted term), rows_neg serves n < 0.
struct ModScreen {
  int mod;
  std::uint64_t fold;  // 2^64 mod `mod`
  std::vector<std::uint64_t> rows_pos;
  std::vector<std::uint64_t> rows_neg;

  ModScreen(int mod_in, int nbits) : mod(mod_in), fold(pow2_64_mod(mod_in)) {
    std::vector<bool> is_square(static_cast<std::size_t>(mod), false);
    for (int k = 0; k < mod; ++k) {
      is_square[static_cast<std::size_t>(k * k % mod)] = true;
    }
    rows_pos.assign(static_cast<std::size_t>(mod) * mod, 0);
    rows_neg.assign(static_cast<std::size_t>(mod) * mod, 0);
    for (int g = 0; g < mod; ++g) {
      for (int n = 1; n <= nbits; ++n) {
        const std::uint64_t bit = 1ULL << (n - 1);
        const int f = static_cast<int>(
            (static_cast<long long>(n) * g) % mod);
        for (int r = 0; r < mod; ++r) {
          if (is_square[static_cast<std::size_t>(((r - f) % mod + mod) % mod)]) {
            rows_pos[static_cast<std::size_t>(g) * mod + r] |= bit;
          }
          if (is_square[static_cast<std::size_t>((r + f) % mod)]) {
            rows_neg[static_cast<std::size_t>(g) * mod + r] |= bit;
          }
        }
      }
    }
  }
};

// Pairwise coprime moduli; 64 also validates the low bits, 63 = 9*7 and
// 65 = 5*13 pack two primes each.
constexpr int kScreenMods[] = {64, 63, 65, 11, 17, 19, 23, 29};
constexpr int kNumScreens = 8;

// The hot loop visits (6/pi^2) height^2 coprime candidates x = p/q and, for
// each, every pair (m, n) in the box. Screening happens per candidate with
// one AND chain per m over precomputed rows, so only a tiny fraction of
// (m, n) combinations reach the exact 128-bit square test. With
// |m|,|n| <= 50 and height <= 2*10^4, |c| <= 2.05e10 keeps c^2 < 2^69 and
// the high limb of c^2 folds into the residues with one multiply.
void scan_worker(long long max_abs, long long height,
                 const std::vector<ModScreen>& screens,
                 std::atomic<long long>& next_q, std::vector<PairClasses>& grid) {
  const int mm = static_cast<int>(max_abs);
  std::vector<std::uint64_t> four_ns(static_cast<std::size_t>(mm) + 1);
  const std::uint64_t all_n = (1ULL << mm) - 1;

  const std::uint64_t* rp[kNumScreens];
  const std::uint64_t* rn[kNumScreens];

  for (long long q; (q = next_q.fetch_add(1)) <= height;) {
    const long long q2 = q * q;
    for (long long p = 1; p <= height; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const long long p2 = p * p;
      const long long pq = p * q;
      const std::uint64_t s = static_cast<std::uint64_t>(pq) *
                              static_cast<std::uint64_t>(pq);
      for (int n = 1; n <= mm; ++n) {
        four_ns[static_cast<std::size_t>(n)] = 4ULL * static_cast<unsigned>(n) * s;
      }
      const std::uint64_t s4 = 4ULL * s;
      for (int k = 0; k < kNumScreens; ++k) {
        const ModScreen& sc = screens[static_cast<std::size_t>(k)];
        const auto g = static_cast<std::size_t>(
            s4 % static_cast<std::uint64_t>(sc.mod));
        rp[k] = &sc.rows_pos[g * static_cast<std::size_t>(sc.mod)];
        rn[k] = &sc.rows_neg[g * static_cast<std::size_t>(sc.mod)];
      }
      for (int m = -mm; m <= mm; ++m) {
        if (m == 0) continue;
        const long long c = p2 + m * q2;
        const u128 c2 = static_cast<u128>(static_cast<i128>(c) * c);
        const std::uint64_t c2lo = static_cast<std::uint64_t>(c2);
        const std::uint64_t c2hi = static_cast<std::uint64_t>(c2 >> 64);
        // Largest n > 0 keeping the discriminant non-negative.
        int nmax = 0;
        {
          int lo_i = 1, hi_i = mm;
          while (lo_i <= hi_i) {
            int mid = (lo_i + hi_i) / 2;
            if (static_cast<u128>(four_ns[static_cast<std::size_t>(mid)]) <= c2) {
              nmax = mid;
              lo_i = mid + 1;
            } else {
              hi_i = mid - 1;
            }
          }
        }
        std::uint64_t mask_pos =
            nmax >= 64 ? ~0ULL : (1ULL << nmax) - 1;
        std::uint64_t mask_neg = all_n;
        if (m > 0) {
          mask_pos &= ~(1ULL << (m - 1));
        } else {
          mask_neg &= ~(1ULL << (-m - 1));
        }
        for (int k = 0; k < kNumScreens && (mask_pos | mask_neg); ++k) {
          const auto mod = static_cast<std::uint64_t>(
              screens[static_cast<std::size_t>(k)].mod);
          std::uint64_t r =
              c2hi * screens[static_cast<std::size_t>(k)].fold + c2lo % mod;
          while (r >= mod) r -= mod;
          mask_pos &= rp[k][r];
          mask_neg &= rn[k][r];
        }
        while (mask_pos) {
          const int n = __builtin_ctzll(mask_pos) + 1;
          mask_pos &= mask_pos - 1;
          const u128 d = c2 - four_ns[static_cast<std::size_t>(n)];
          const std::uint64_t root = isqrt_u128(d);
          if (static_cast<u128>(root) * root != d) continue;
          record_hit(grid[static_cast<std::size_t>(pair_index(m, n))], p, q, c,
                     static_cast<long long>(root));
        }
        while (mask_neg) {
          const int n = -(__builtin_ctzll(mask_neg) + 1);
          mask_neg &= mask_neg - 1;
          const u128 d = c2 + four_ns[static_cast<std::size_t>(-n)];
          const std::uint64_t root = isqrt_u128(d);
          if (static_cast<u128>(root) * root != d) continue;
          record_hit(grid[static_cast<std::size_t>(pair_index(m, n))], p, q, c,
                     static_cast<long long>(root));
        }
      }
    }
  }
}

}  // namespace

std::vector<PairScanResult> scan_integer_box(long long max_abs, long long height,
                                             unsigned threads) {
  if (max_abs < 1 || max_abs > 50 || height < 1 || height > 20000) {
    throw Error(ErrorKind::Unsupported,
                "box scan is tuned for |m|,|n| <= 50 and height <= 20000");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<ModScreen> screens;
  screens.reserve(kNumScreens);
  for (int mod : kScreenMods) screens.emplace_back(mod, static_cast<int>(max_abs));

  std::vector<std::vector<PairClasses>> grids(
      threads, std::vector<PairClasses>(100 * 100));
  std::atomic<long long> next_q{1};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) {
    pool.emplace_back(scan_worker, max_abs, height, std::cref(screens),
                      std::ref(next_q), std::ref(grids[i]));
  }
  for (auto& th : pool) th.join();

  std::vector<PairScanResult> results;
  for (int m = -static_cast<int>(max_abs); m <= static_cast<int>(max_abs); ++m) {
    if (m == 0) continue;
    for (int n = -static_cast<int>(max_abs); n <= static_cast<int>(max_abs); ++n) {
      if (n == 0 || n == m) continue;
      PairClasses merged;
      bool overflow = false;
      for (const auto& grid : grids) {
        const PairClasses& cell = grid[static_cast<std::size_t>(pair_index(m, n))];
        overflow |= cell.overflow;
        for (std::uint8_t i = 0; i < cell.count; ++i) {
          record_hit(merged, cell.hits[i].p, cell.hits[i].q, cell.hits[i].c,
                     cell.hits[i].t);
        }
      }
      PairScanResult res;
      res.m = m;
      res.n = n;
      res.rho = 2 * merged.count;
      res.saturated = overflow || merged.overflow;
      std::array<ClassHit, 16> ordered = merged.hits;
      std::sort(ordered.begin(), ordered.begin() + merged.count,
                [](const ClassHit& a, const ClassHit& b) {
                  return static_cast<i128>(a.zn) * b.zd <
                         static_cast<i128>(b.zn) * a.zd;
                });
      for (std::uint8_t i = 0; i < merged.count; ++i) {
        const ClassHit& hit = ordered[i];
        Rat x(hit.p, hit.q);
        Rat y(Int(hit.c + hit.t), Int(2 * hit.p * hit.q));
        res.witnesses.push_back(Solution{x, y});
      }
      results.push_back(std::move(res));
    }
  }
  return results;
}

}  // namespace isoadd
