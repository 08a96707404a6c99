#pragma once

// Scalar backends for the coefficient field: exact rationals (no rounding)
// and complex doubles with tolerance-based equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace bqm {

using Rat = boost::multiprecision::cpp_rational;
using Cx = std::complex<double>;

struct Tolerance {
    double atol = 1e-12;
    double rtol = 1e-9;
};

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Cx& z) { return std::abs(z); }

// Parses "p", "-p/q" or a decimal literal into an exact rational.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(boost::multiprecision::cpp_int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    boost::multiprecision::cpp_int num(digits);
    boost::multiprecision::cpp_int den = 1;
    for (std::size_t i = 0; i < s.size() - dot - 1; ++i) den *= 10;
    return Rat(num, den);
}

template <class R>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool is_exact = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return a == 0; }
    static bool eq(const Rat& a, const Rat& b, const Tolerance& = {}) { return a == b; }
    static double mag(const Rat& a) { return std::abs(to_double(a)); }
    static Rat inv(const Rat& a) {
        if (a == 0) throw std::domain_error("division by zero (exact backend)");
        return Rat(1) / a;
    }
    static Rat from_rat(const Rat& a) { return a; }
};

template <>
struct scalar_traits<Cx> {
    static constexpr bool is_exact = false;
    static Cx zero() { return Cx(0.0, 0.0); }
    static Cx one() { return Cx(1.0, 0.0); }
    static bool is_zero(const Cx& a) { return a == Cx(0.0, 0.0); }
    static bool eq(const Cx& a, const Cx& b, const Tolerance& tol = {}) {
        return std::abs(a - b) <= tol.atol + tol.rtol * std::max(std::abs(a), std::abs(b));
    }
    static double mag(const Cx& a) { return std::abs(a); }
    static Cx inv(const Cx& a) {
        if (a == Cx(0.0, 0.0)) throw std::domain_error("division by zero (numeric backend)");
        return 1.0 / a;
    }
    static Cx from_rat(const Rat& a) { return Cx(to_double(a), 0.0); }
};

template <class R>
R pow_int(const R& base, long e) {
    if (e == 0) return scalar_traits<R>::one();
    R b = e < 0 ? scalar_traits<R>::inv(base) : base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    R acc = scalar_traits<R>::one();
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

// Sample points with moduli in [0.4, 2.5], kept off the unit circle.
inline Cx sample_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> arg(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> mod(0.4, 2.5);
    double r = mod(rng);
    while (std::abs(r - 1.0) < 0.05) r = mod(rng);
    return std::polar(r, arg(rng));
}

inline Rat sample_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-23, 23);
    std::uniform_int_distribution<int> den(2, 17);
    Rat r;
    do {
        r = Rat(num(rng), den(rng));
    } while (r == 0 || r == 1 || r == -1);
    return r;
}

}  // namespace bqm
