#include "isoadd/rat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>

namespace isoadd {

namespace mp = boost::multiprecision;

Rat::Rat(const Int& num, const Int& den) {
  if (den.is_zero()) {
    throw Error(ErrorKind::ParseError, "rational with zero denominator");
  }
  // cpp_rational reduces to lowest terms but requires a positive denominator.
  if (den < 0) {
    value_ = mp::cpp_rational(-num, -den);
  } else {
    value_ = mp::cpp_rational(num, den);
  }
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) {
    throw Error(ErrorKind::ZeroFactor, "division by zero rational");
  }
  value_ /= o.value_;
  return *this;
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.value_ = -r.value_;
  return r;
}

Rat Rat::reciprocal() const {
  if (is_zero()) {
    throw Error(ErrorKind::ZeroFactor, "reciprocal of zero");
  }
  return Rat(den(), num());
}

Int Rat::height() const {
  Int n = mp::abs(num());
  Int d = den();
  return n > d ? n : d;
}

std::string Rat::str() const {
  std::string s = num().str();
  if (!is_integer()) {
    s += "/";
    s += den().str();
  }
  return s;
}

Rat Rat::parse(std::string_view text) {
  auto fail = [&text]() -> Rat {
    throw Error(ErrorKind::ParseError,
                "cannot parse rational: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) return fail();
  Int num(std::string(text.substr(num_start, i - num_start)));
  Int den = 1;
  if (i < text.size()) {
    if (text[i] != '/') return fail();
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) return fail();
    den = Int(std::string(text.substr(den_start)));
    if (den.is_zero()) return fail();
  }
  if (neg) num = -num;
  return Rat(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::optional<Int> perfect_square_root(const Int& v) {
  if (v < 0) return std::nullopt;
  if (v.is_zero()) return Int(0);
  // Squares end in 0,1,4,9,16,17,25,33,36,41,49,57 mod 64; cheap reject first.
  static constexpr bool kSquareMod64[64] = {
      true,  true,  false, false, true,  false, false, false,
      false, true,  false, false, false, false, false, false,
      true,  true,  false, false, false, false, false, false,
      false, true,  false, false, false, false, false, false,
      false, true,  false, false, true,  false, false, false,
      false, true,  false, false, false, false, false, false,
      false, true,  false, false, false, false, false, false,
      false, true,  false, false, false, false, false, false};
  if (!kSquareMod64[static_cast<unsigned>(v & 63)]) return std::nullopt;
  Int r = mp::sqrt(v);
  if (r * r == v) return r;
  return std::nullopt;
}

std::optional<Rat> sqrt_exact(const Rat& q) {
  if (q.is_negative()) return std::nullopt;
  auto rn = perfect_square_root(q.num());
  if (!rn) return std::nullopt;
  auto rd = perfect_square_root(q.den());
  if (!rd) return std::nullopt;
  return Rat(*rn, *rd);
}

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroFactor: return "ZeroFactor";
    case ErrorKind::SumMismatch: return "SumMismatch";
    case ErrorKind::EqualProducts: return "EqualProducts";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::MixedPairs: return "MixedPairs";
    case ErrorKind::ZeroX: return "ZeroX";
    case ErrorKind::ExclusionViolated: return "ExclusionViolated";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::NonIntegralCurve: return "NonIntegralCurve";
    case ErrorKind::RepBoundExceeded: return "RepBoundExceeded";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace isoadd
