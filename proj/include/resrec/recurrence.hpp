#pragma once

// From determinant identities to recurrences.
//
// eliminate() reduces an equation system to a single annihilator p(y) with
// p * Det(seed) = 0, computed as the fraction-free determinant of I - A(y)
// over Z[y]; the adjugate identity gives the same annihilation guarantee as
// the substitution process. minimal_polynomial() extracts the least-degree
// annihilator of an oracle window (Berlekamp-Massey over Q), detect_cutoff()
// finds where it starts to hold, and extend_backward() builds the doubly
// infinite sister sequence.

#include "resrec/expander.hpp"
#include "resrec/graphfam.hpp"
#include "resrec/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace resrec {

namespace detail {

/// Fraction-free determinant of a square matrix of integer polynomials.
/// Every division is exact in Z[y] (Sylvester identity), so no rational
/// coefficients ever appear.
inline IntPoly det_poly_matrix(std::vector<std::vector<IntPoly>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw error("det_poly_matrix: not square");
    if (n == 0) return IntPoly::constant(1);
    IntPoly prev = IntPoly::constant(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return IntPoly();  // zero column: determinant vanishes
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = poly_divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = IntPoly();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace detail

/// Annihilator of the seed family: the primitive part of det(I - A(y)),
/// where A is the coefficient matrix of the identities. Throws
/// "degenerate system" when the determinant vanishes identically.
inline IntPoly eliminate(const EquationSystem& system) {
    const size_t n = system.families.size();
    if (system.equations.size() != n) throw error("eliminate: system not closed");
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = IntPoly::constant(1);
    for (const auto& eq : system.equations) {
        for (const auto& [coeff, gid] : eq.rhs) {
            m[static_cast<size_t>(eq.lhs)][static_cast<size_t>(gid)] -= coeff;
        }
    }
    IntPoly det = detail::det_poly_matrix(std::move(m));
    if (det.is_zero()) throw error("degenerate system");
    return poly_primitive(det);
}

/// Reads an annihilator in the backward shift y as a characteristic
/// polynomial in X: sum c_i y^i kills s  <=>  sum c_i X^{d-i} = 0, i.e. the
/// coefficient list reverses. Sign-normalized to a positive leading
/// coefficient; powers of y (index shifts) drop out as trailing zeros.
inline IntPoly y_to_X(const IntPoly& p) {
    if (p.is_zero()) throw error("y_to_X: zero polynomial");
    std::vector<BigInt> rev(p.coeffs().rbegin(), p.coeffs().rend());
    return poly_primitive_monic_sign(IntPoly(std::move(rev)));
}

/// Least-degree monic-primitive annihilator of the supplied window
/// (Berlekamp-Massey over exact rationals). The window must be long enough
/// to certify its own answer: 2*order + 2 terms.
inline IntPoly minimal_polynomial(const DetSequence& seq) {
    const auto& s = seq.terms;
    const size_t N = s.size();
    if (N < 2) throw error("minimal_polynomial: insufficient terms");

    std::vector<BigRat> C{BigRat(1)}, B{BigRat(1)};
    size_t L = 0, m = 1;
    BigRat b(1);
    for (size_t n = 0; n < N; ++n) {
        BigRat delta(s[n]);
        for (size_t i = 1; i <= L; ++i) delta += C[i] * BigRat(s[n - i]);
        if (delta == 0) {
            ++m;
            continue;
        }
        const BigRat factor = delta / b;
        if (2 * L <= n) {
            std::vector<BigRat> T = C;
            if (C.size() < B.size() + m) C.resize(B.size() + m, BigRat(0));
            for (size_t i = 0; i < B.size(); ++i) C[i + m] -= factor * B[i];
            L = n + 1 - L;
            B = std::move(T);
            b = delta;
            m = 1;
        } else {
            if (C.size() < B.size() + m) C.resize(B.size() + m, BigRat(0));
            for (size_t i = 0; i < B.size(); ++i) C[i + m] -= factor * B[i];
            ++m;
        }
    }
    if (L == 0) return IntPoly::constant(1);  // all-zero window
    if (N < 2 * L + 2) throw error("minimal_polynomial: insufficient terms");

    // characteristic polynomial X^L + C_1 X^{L-1} + ... + C_L, cleared to
    // primitive integer coefficients
    BigInt lcm = 1;
    for (size_t i = 0; i <= L; ++i) {
        const BigRat& c = i < C.size() ? C[i] : BigRat(0);
        lcm = lcm / gcd(lcm, denominator(c)) * denominator(c);
    }
    std::vector<BigInt> asc(L + 1);
    for (size_t i = 0; i <= L; ++i) {
        const BigRat c = i < C.size() ? C[i] : BigRat(0);
        asc[L - i] = numerator(c) * (lcm / denominator(c));
    }
    return poly_primitive_monic_sign(IntPoly(std::move(asc)));
}

/// True iff sum_i p_i s(base+i) == 0.
inline bool recurrence_holds_at(const DetSequence& seq, const IntPoly& p, long base) {
    BigInt acc = 0;
    for (int i = 0; i <= p.degree(); ++i) acc += p[static_cast<size_t>(i)] * seq.at(base + i);
    return acc == 0;
}

/// Smallest index from which p annihilates every available window of seq.
/// Returns seq.end()+1 when no window holds.
inline long detect_cutoff(const DetSequence& seq, const IntPoly& p) {
    const long last_base = seq.end() - p.degree();
    long cutoff = last_base + 1;
    for (long base = last_base; base >= seq.start; --base) {
        if (!recurrence_holds_at(seq, p, base)) break;
        cutoff = base;
    }
    return cutoff;
}

struct LinearRecurrence {
    IntPoly char_X;               // monic-primitive characteristic polynomial
    int order = 0;                // degree of char_X
    long cutoff = 0;              // smallest index from which the recurrence holds
    std::vector<BigInt> initial;  // `order` exact terms anchored at cutoff
    long verified_hi = 0;         // last index covered by oracle verification

    std::string label;
};

/// Couples a sequence window with its minimal polynomial and detected cutoff.
inline LinearRecurrence make_recurrence(const DetSequence& seq, const IntPoly& char_X) {
    LinearRecurrence rec;
    rec.char_X = char_X;
    rec.order = char_X.degree();
    rec.cutoff = detect_cutoff(seq, char_X);
    if (rec.cutoff > seq.end() - rec.order)
        throw error("make_recurrence: recurrence never holds on the window");
    rec.initial.reserve(static_cast<size_t>(rec.order));
    for (int i = 0; i < rec.order; ++i) rec.initial.push_back(seq.at(rec.cutoff + i));
    rec.verified_hi = seq.end();
    rec.label = seq.label;
    return rec;
}

/// Doubly infinite extension of a recurrent sequence; stored terms always
/// satisfy the recurrence, and agree with the originating oracle sequence
/// from the cutoff on.
struct SisterSequence {
    LinearRecurrence rec;
    std::map<long, BigInt> terms;

    long lo() const { return terms.empty() ? 0 : terms.begin()->first; }
    long hi() const { return terms.empty() ? -1 : terms.rbegin()->first; }
    const BigInt& at(long idx) const {
        auto it = terms.find(idx);
        if (it == terms.end())
            throw error("SisterSequence: index " + std::to_string(idx) + " not stored");
        return it->second;
    }
};

/// Runs the recurrence backward `count` steps from the cutoff. Every
/// backward step must divide exactly over the integers; re-running forward
/// across the extension must reproduce the anchors bit-exactly.
inline SisterSequence extend_backward(const DetSequence& seq, const LinearRecurrence& rec,
                                      int count) {
    const int d = rec.order;
    const IntPoly& p = rec.char_X;
    if (seq.end() < rec.cutoff + d - 1)
        throw error("extend_backward: need at least `order` terms beyond the cutoff");
    SisterSequence sister;
    sister.rec = rec;
    for (long idx = std::max(rec.cutoff, seq.start); idx <= seq.end(); ++idx)
        sister.terms[idx] = seq.at(idx);
    for (int step = 0; step < count; ++step) {
        const long m = sister.lo() - 1;
        BigInt acc = 0;
        for (int i = 1; i <= d; ++i) acc += p[static_cast<size_t>(i)] * sister.at(m + i);
        acc = -acc;
        const BigInt& p0 = p[0];
        if (p0 == 0 || acc % p0 != 0)
            throw error("sequence not backward-extendable over the integers");
        sister.terms[m] = acc / p0;
    }
    // forward round-trip over the extension
    for (long m = sister.lo(); m + d <= rec.cutoff + d - 1; ++m) {
        BigInt acc = 0;
        for (int i = 0; i <= d; ++i) acc += p[static_cast<size_t>(i)] * sister.at(m + i);
        if (acc != 0) throw error("extend_backward: forward replay failed");
    }
    return sister;
}

/// (C applied to x) at index m, with X read as the forward shift:
/// (Cx)(m) = sum c_i x(m+i).
inline BigInt apply_poly(const IntPoly& C, const SisterSequence& x, long m) {
    BigInt acc = 0;
    for (int i = 0; i <= C.degree(); ++i) acc += C[static_cast<size_t>(i)] * x.at(m + i);
    return acc;
}

/// Proposition-style factor test: given A = B*C with A annihilating x on all
/// stored windows, C annihilates x everywhere iff (Cx) vanishes on deg(B)
/// consecutive indices starting at n1.
inline bool factor_annihilates(const IntPoly& A, const IntPoly& B, const IntPoly& C,
                               const SisterSequence& x, long n1) {
    if (B * C != A) throw error("not a factorization");
    for (long m = x.lo(); m + A.degree() <= x.hi(); ++m) {
        if (apply_poly(A, x, m) != 0)
            throw error("factor_annihilates: A does not annihilate the stored window");
    }
    for (long m = n1; m < n1 + B.degree(); ++m) {
        if (apply_poly(C, x, m) != 0) return false;
    }
    return true;
}

}  // namespace resrec
