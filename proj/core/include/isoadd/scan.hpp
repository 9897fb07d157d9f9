#ifndef ISOADD_SCAN_HPP
#define ISOADD_SCAN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "isoadd/representations.hpp"

namespace isoadd {

using u128 = unsigned __int128;
using i128 = __int128;

/// Floor square root of a 128-bit value.
std::uint64_t isqrt_u128(u128 v);

/// Exact square root if v is a perfect square.
std::optional<std::uint64_t> perfect_square_root_u128(u128 v);

/// True when the all-integer search kernel can handle (m, n, height)
/// without overflowing 128-bit intermediates.
bool fast_search_applicable(const PairMN& pair, long long height);

/// Complete bounded-height search for integral pairs; identical output
/// contract to the generic search (used behind it when applicable).
std::vector<Solution> fast_search_integral(long long m, long long n, long long height);

/// Outcome of scanning one integral pair: the number of essentially
/// different representations found below the height bound (two per solution
/// orbit; pairs can and do exceed four), with one witness solution per
/// orbit.
struct PairScanResult {
  long long m = 0;
  long long n = 0;
  int rho = 0;
  std::vector<Solution> witnesses;
  /// More orbits were found than the per-pair class store holds (16); rho
  /// is then a saturated lower bound.
  bool saturated = false;
};

/// Scans every ordered integral pair (m, n) with 1 <= |m|,|n| <= max_abs and
/// m != n at the given height bound. Requires max_abs <= 50 and
/// height <= 20000 (the all-int64/int128 kernel is tuned and overflow-checked
/// for that box). Results are ordered by (m, n); work is split across
/// threads with a deterministic merge. Never throws on high counts: the
/// caller decides what bound to enforce.
std::vector<PairScanResult> scan_integer_box(long long max_abs, long long height,
                                             unsigned threads = 0);

}  // namespace isoadd

#endif  // ISOADD_SCAN_HPP
