#pragma once

// Dense univariate polynomials with exact integer coefficients, stored
// ascending by degree. The same type serves two formal variables: the
// backward-shift operator y (determinant identities across family sizes)
// and the characteristic variable X (recurrences). Degrees stay small, so
// dense storage and classical O(n^2) arithmetic are deliberate.

#include "resrec/numeric.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace resrec {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { normalize(); }
    IntPoly(std::initializer_list<long> ascending) {
        for (long v : ascending) c_.emplace_back(v);
        normalize();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(BigInt v) {
        IntPoly p;
        p.c_.push_back(std::move(v));
        p.normalize();
        return p;
    }
    /// c * x^k
    static IntPoly monomial(BigInt coeff, int k) {
        IntPoly p;
        p.c_.assign(static_cast<size_t>(k) + 1, BigInt(0));
        p.c_.back() = std::move(coeff);
        p.normalize();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& operator[](size_t i) const {
        static const BigInt kZero{0};
        return i < c_.size() ? c_[i] : kZero;
    }
    const BigInt& leading() const {
        if (c_.empty()) throw error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.normalize();
        return r;
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        IntPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }

    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    template <typename T>
    T eval(const T& x) const {
        T acc{};
        for (size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + T(c_[i]);
        }
        return acc;
    }

    IntPoly derivative() const {
        IntPoly r;
        for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * static_cast<long>(i));
        r.normalize();
        return r;
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) g = gcd(g, v);
        return g;
    }

    /// "5X^4 - 3X^2 + 1" style rendering, highest degree first.
    std::string to_string(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            const BigInt& v = c_[i];
            if (v == 0) continue;
            const BigInt a = abs(v);
            if (out.empty()) {
                if (v < 0) out += "-";
            } else {
                out += (v < 0) ? " - " : " + ";
            }
            const bool unit = (a == 1) && i > 0;
            if (!unit) out += a.str();
            if (i >= 1) out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;  // ascending; empty <=> zero, else back() != 0
};

/// Normal form used to compare characteristic polynomials bit-exactly:
/// common powers of the variable stripped, integer content removed, and the
/// lowest-degree surviving coefficient made positive.
inline IntPoly poly_primitive(const IntPoly& p) {
    if (p.is_zero()) throw error("poly_primitive: zero input");
    std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
    size_t shift = 0;
    while (c[shift] == 0) ++shift;
    c.erase(c.begin(), c.begin() + static_cast<long>(shift));
    BigInt g = 0;
    for (const auto& v : c) g = gcd(g, v);
    if (c.front() < 0) g = -g;
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

/// As poly_primitive but signs the highest-degree coefficient positive
/// (the convention for polynomials in X, where "monic-like" reads best).
inline IntPoly poly_primitive_monic_sign(const IntPoly& p) {
    if (p.is_zero()) throw error("poly_primitive: zero input");
    std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
    size_t shift = 0;
    while (c[shift] == 0) ++shift;
    c.erase(c.begin(), c.begin() + static_cast<long>(shift));
    BigInt g = 0;
    for (const auto& v : c) g = gcd(g, v);
    if (c.back() < 0) g = -g;
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

/// Exact quotient a / b over Z[x]; throws if b does not divide a.
inline IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw error("poly_divexact: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw error("poly_divexact: not divisible (degree)");
    std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<BigInt> q(static_cast<size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    const auto& bc = b.coeffs();
    for (size_t qi = q.size(); qi-- > 0;) {
        BigInt& top = rem[qi + bc.size() - 1];
        if (top == 0) continue;
        BigInt step = top / b.leading();
        if (step * b.leading() != top) throw error("poly_divexact: not divisible");
        for (size_t j = 0; j < bc.size(); ++j) rem[qi + j] -= step * bc[j];
        q[qi] = std::move(step);
    }
    for (const auto& v : rem)
        if (v != 0) throw error("poly_divexact: nonzero remainder");
    return IntPoly(std::move(q));
}

inline bool poly_divides(const IntPoly& b, const IntPoly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero() || a.degree() < b.degree()) return false;
    try {
        (void)poly_divexact(a, b);
        return true;
    } catch (const error&) {
        return false;
    }
}

namespace detail {

/// Pseudo-remainder of a by b (b nonzero, deg a >= deg b).
inline IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        const BigInt lead = a.leading();
        std::vector<BigInt> scaled(a.coeffs().begin(), a.coeffs().end());
        for (auto& v : scaled) v *= b.leading();
        for (int j = 0; j <= db; ++j) scaled[static_cast<size_t>(shift + j)] -= lead * b[static_cast<size_t>(j)];
        a = IntPoly(std::move(scaled));
        if (a.degree() >= db + shift) throw error("pseudo_rem: degree did not drop");
    }
    return a;
}

}  // namespace detail

/// Primitive gcd over Z[x] (primitive pseudo-remainder sequence).
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : poly_primitive_monic_sign(b);
    if (b.is_zero()) return poly_primitive_monic_sign(a);
    a = poly_primitive_monic_sign(a);
    b = poly_primitive_monic_sign(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = detail::pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPoly() : poly_primitive_monic_sign(r);
    }
    return a;
}

namespace detail {

// Small rational-coefficient polynomials, used only inside Yun's algorithm
// where exact division over a field keeps the bookkeeping honest.
using RatPoly = std::vector<BigRat>;  // ascending; trailing zeros trimmed

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline RatPoly rp_from(const IntPoly& p) {
    RatPoly r;
    for (const auto& c : p.coeffs()) r.emplace_back(BigRat(c));
    return r;
}
inline RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), BigRat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    rp_trim(r);
    return r;
}
inline RatPoly rp_derivative(const RatPoly& a) {
    RatPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
    rp_trim(r);
    return r;
}
/// Remainder of a mod b over Q.
inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    rp_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigRat q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        rp_trim(a);
    }
    return a;
}
/// Exact quotient over Q (throws if remainder nonzero).
inline RatPoly rp_divexact(RatPoly a, const RatPoly& b) {
    rp_trim(a);
    if (a.empty()) return {};
    if (a.size() < b.size()) throw error("rp_divexact: not divisible");
    RatPoly q(a.size() - b.size() + 1, BigRat(0));
    while (a.size() >= b.size() && !a.empty()) {
        BigRat step = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = step;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= step * b[i];
        rp_trim(a);
    }
    if (!a.empty()) throw error("rp_divexact: nonzero remainder");
    return q;
}
inline RatPoly rp_monic(RatPoly a) {
    rp_trim(a);
    if (a.empty()) return a;
    BigRat lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}
inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RatPoly r = rp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rp_monic(a);
}
inline IntPoly rp_to_primitive(const RatPoly& p) {
    BigInt lcm = 1;
    for (const auto& c : p) lcm = lcm / gcd(lcm, denominator(c)) * denominator(c);
    std::vector<BigInt> ic;
    ic.reserve(p.size());
    for (const auto& c : p) ic.push_back(numerator(c) * (lcm / denominator(c)));
    return poly_primitive_monic_sign(IntPoly(std::move(ic)));
}

}  // namespace detail

/// Square-free decomposition (Yun, over Q): returns (factor, multiplicity)
/// pairs with multiplicities ascending. Each factor is primitive over Z with
/// positive leading coefficient; the product of factor^multiplicity equals p
/// up to a rational unit.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    using namespace detail;
    if (p.is_zero()) throw error("squarefree_decomposition: zero input");
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() == 0) return out;
    RatPoly f = rp_from(p);
    RatPoly df = rp_derivative(f);
    RatPoly u = rp_gcd(f, df);
    RatPoly v = rp_divexact(f, u);
    RatPoly w = rp_divexact(df, u);
    int mult = 1;
    while (v.size() > 1) {
        RatPoly h = rp_sub(w, rp_derivative(v));
        RatPoly g = rp_gcd(v, h);
        if (g.size() > 1) out.emplace_back(rp_to_primitive(g), mult);
        v = rp_divexact(v, g);
        w = rp_divexact(h, g);
        ++mult;
        if (mult > p.degree() + 1) throw error("squarefree_decomposition: did not terminate");
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

}  // namespace resrec
