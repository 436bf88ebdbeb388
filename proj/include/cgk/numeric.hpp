#ifndef CGK_NUMERIC_HPP
#define CGK_NUMERIC_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (n - k < k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Remainder in [0, m), m > 0.
inline Int floor_mod(const Int& a, const Int& m) {
    if (m <= 0) throw std::invalid_argument("floor_mod: modulus must be positive");
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int exact_div(const Int& a, const Int& b, const char* what) {
    if (b == 0 || a % b != 0) throw std::logic_error(std::string("exact_div: not divisible in ") + what);
    return a / b;
}

inline long long to_i64(const Int& a, const char* what = "value") {
    if (a > std::numeric_limits<long long>::max() || a < std::numeric_limits<long long>::min())
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<long long>(a);
}

} // namespace cgk

#endif
