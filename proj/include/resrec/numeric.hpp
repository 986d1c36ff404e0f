#pragma once

// Exact and high-precision numeric kernel.
//
// BigInt / BigRat are GMP-backed (canonical rationals: positive denominator,
// reduced). Real is an MPFR float whose decimal precision is set at runtime;
// Complex is a minimal complex type over Real, enough for root finding and
// dense linear solves.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace resrec {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;
using Real   = boost::multiprecision::mpfr_float;

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Canonical rational from any numerator/denominator pair.
/// (The raw two-argument BigRat constructor requires pre-canonical input.)
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw error("make_rat: zero denominator");
    return BigRat(num) / BigRat(den);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// "p/q" with the "/q" omitted for integers, e.g. "-8/7", "5".
inline std::string to_decimal(const BigRat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

/// Sets the default decimal precision for newly created Real values and
/// restores the previous default on destruction.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10)
        : previous_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(previous_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned previous_;
};

inline Real pow10(long e) { return pow(Real(10), e); }

// abs/max that return plain Real values (boost's expression templates do
// not play well with std::max deduction)
inline Real rabs(const Real& x) { return x < 0 ? Real(-x) : x; }
inline Real rmax(const Real& a, const Real& b) { return a < b ? b : a; }

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }

inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }

inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return sqrt(norm(a)); }

inline Complex operator/(const Complex& a, const Complex& b) {
    Real n = norm(b);
    if (n == 0) throw error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

inline bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
}

/// a^n for integer n >= 0 by binary exponentiation (exact in the rounding
/// sense: no exp/log branch cuts).
inline Complex pow_int(Complex a, unsigned long n) {
    Complex result(Real(1));
    while (n) {
        if (n & 1) result *= a;
        a *= a;
        n >>= 1;
    }
    return result;
}

/// a^n for any integer n (negative exponents via one division).
inline Complex pow_int(const Complex& a, long n) {
    if (n >= 0) return pow_int(a, static_cast<unsigned long>(n));
    return Complex(Real(1)) / pow_int(a, static_cast<unsigned long>(-n));
}

}  // namespace resrec
