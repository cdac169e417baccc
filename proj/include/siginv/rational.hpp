#ifndef SIGINV_RATIONAL_HPP
#define SIGINV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace siginv {

// exact coefficients: basis identities must hold exactly, not to tolerance
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// "3/2", "-1"; denominator omitted when 1
inline std::string rational_to_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) out += "/" + denominator(r).str();
    return out;
}

// accepts "p", "p/q", optional leading sign; throws std::invalid_argument
inline Rational rational_from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    try {
        size_t slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(boost::multiprecision::cpp_int(std::string(text)));
        boost::multiprecision::cpp_int num{std::string(text.substr(0, slash))};
        boost::multiprecision::cpp_int den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational '" + std::string(text) + "': " + e.what());
    }
}

}  // namespace siginv

#endif
