#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nccert {

using BigInt = boost::multiprecision::cpp_int;
/// Exact fraction; always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

namespace detail {
// The rational backend rejects negative denominators, so move the sign first.
inline Rational ratio(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}
}  // namespace detail

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  return detail::ratio(BigInt(num), BigInt(den));
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p", "p/q" or "-p/q" with decimal integers.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos ||
        s.find_first_of("0123456789") == std::string::npos)
      throw std::invalid_argument("malformed rational '" + text + "'");
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return detail::ratio(parse_int(text.substr(0, slash)), den);
}

/// Least common multiple of the denominators.
inline BigInt common_denominator(const std::vector<Rational>& xs) {
  BigInt l = 1;
  for (const auto& x : xs) {
    BigInt d = boost::multiprecision::denominator(x);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  return l;
}

}  // namespace nccert
