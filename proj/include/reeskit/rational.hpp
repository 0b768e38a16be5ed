#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace reeskit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// floor(p/q) with q > 0
inline Int rat_floor(const Rational& r) {
    Int p = rat_num(r), q = rat_den(r);
    if (p >= 0) return p / q;
    return -((-p + q - 1) / q);
}

inline Int rat_ceil(const Rational& r) { return -rat_floor(-r); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Renders "p/q", or just "p" when the value is integral.
inline std::string rational_to_string(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p", "p/q", and optional leading '-'.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + text + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int p(text.substr(0, slash));
        Int q(text.substr(slash + 1));
        if (q <= 0) bad();
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational();  // unreachable
}

class cap_exceeded_error : public std::runtime_error {
public:
    explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long kDefaultEnumerationCap = 1000000;

}  // namespace reeskit
