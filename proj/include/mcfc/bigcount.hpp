#ifndef MCFC_BIGCOUNT_HPP
#define MCFC_BIGCOUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace mcfc {

// Exact colouring counts. F(G;k) can reach s^{e(G)}, far beyond 64 bits,
// so every count in the toolkit is an arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

// log2 of a positive integer; exact enough (<1e-15 rel.) for reporting.
// The integer itself stays authoritative for every comparison.
inline double big_log2(const BigInt& v) {
    if (v <= 0) return 0.0;
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 62) return std::log2(v.convert_to<double>());
    const unsigned shift = bits - 62;
    const BigInt top = v >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

// Exact count plus its log2 view. log2 is a derived convenience and is
// never used for equality checks; value==0 is reported as "zero", not
// via the log.
struct BigCount {
    BigInt value;

    bool is_zero() const { return value == 0; }
    double log2() const { return big_log2(value); }
    std::string str() const { return value.str(); }
};

}  // namespace mcfc

#endif
