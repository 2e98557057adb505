#ifndef BORWEIN_BIG_INT_HPP
#define BORWEIN_BIG_INT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>

namespace borwein {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/* base^exp with exact integer arithmetic, exp >= 0. */
inline BigInt big_pow(const BigInt& base, std::int64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    for (std::int64_t e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

/* Exact comparison x <= y between a double and a BigInt.  Every finite
 * double is a dyadic rational, so the comparison can be made in
 * BigRational with no rounding at all. */
inline bool exact_leq(double x, const BigInt& y) {
    if (std::isnan(x)) return false;
    if (std::isinf(x)) return x < 0;
    return BigRational(x) <= BigRational(y);
}

/* Natural log of a positive BigInt, accurate to ~1 ulp even when the
 * value overflows double.  Uses the top bits plus the discarded
 * bit-length. */
inline double big_log(const BigInt& x) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 1000) return std::log(x.convert_to<double>());
    const std::size_t shift = bits - 64;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

} // namespace borwein

#endif
