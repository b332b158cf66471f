#ifndef TORELL_RATIONAL_HPP
#define TORELL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace torell {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::rational<Integer>;

inline double to_double(const Rational& r)
{
    return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

// Parses "p/q" or "p" with optional sign.
inline Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("rational with zero denominator: " + s);
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline std::string to_string(const Rational& r)
{
    if (r.denominator() == 1) {
        return r.numerator().str();
    }
    return r.numerator().str() + "/" + r.denominator().str();
}

} // namespace torell

#endif
