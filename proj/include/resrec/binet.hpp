#pragma once

// Binet closed forms: s(m) = sum_i c_i(m) * r_i^m over the roots of the
// characteristic polynomial, with polynomial coefficients c_i of degree
// below the root multiplicity.
//
// Multiplicities come from the exact square-free decomposition, never from
// numeric clustering. Root values are found per square-free factor by
// simultaneous (Durand-Kerner) iteration and polished by Newton steps at the
// working precision; conjugate symmetry is enforced explicitly so real
// sequences evaluate with vanishing imaginary residue.

#include "resrec/graphfam.hpp"
#include "resrec/numeric.hpp"
#include "resrec/poly.hpp"
#include "resrec/recurrence.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace resrec {

struct Root {
    Complex value;
    int multiplicity = 1;
};

namespace detail {

inline std::vector<Real> to_real_coeffs(const IntPoly& p) {
    std::vector<Real> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return c;
}

inline Complex horner(const std::vector<Real>& c, const Complex& z) {
    Complex acc;
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + Complex(c[i]);
    return acc;
}

/// All roots of a square-free polynomial by Durand-Kerner iteration.
inline std::vector<Complex> durand_kerner(const IntPoly& q, unsigned digits) {
    const int d = q.degree();
    std::vector<Real> monic = to_real_coeffs(q);
    for (auto& c : monic) c /= Real(q.leading());

    Real radius = 1;
    for (int i = 0; i < d; ++i) radius = rmax(radius, Real(1) + rabs(monic[static_cast<size_t>(i)]));
    std::vector<Complex> z(static_cast<size_t>(d));
    const Real pi = atan(Real(1)) * 4;
    for (int j = 0; j < d; ++j) {
        Real angle = (2 * pi * j) / d + Real(1) / 4;  // offset keeps the start asymmetric
        z[static_cast<size_t>(j)] = Complex(radius * cos(angle), radius * sin(angle));
    }

    const Real tol = pow10(-static_cast<long>(digits) - 5);
    for (int iter = 0; iter < 2000; ++iter) {
        Real worst = 0;
        for (int j = 0; j < d; ++j) {
            Complex& zj = z[static_cast<size_t>(j)];
            Complex denom(Real(1));
            for (int l = 0; l < d; ++l)
                if (l != j) denom *= (zj - z[static_cast<size_t>(l)]);
            Complex step = horner(monic, zj) / denom;
            zj -= step;
            worst = rmax(worst, abs(step) / rmax(Real(1), abs(zj)));
        }
        if (worst < tol) return z;
    }
    throw error("find_roots: no convergence at requested precision");
}

}  // namespace detail

/// Roots with exact multiplicities, polished to the working precision.
/// Result order is deterministic: by magnitude, then real part, then
/// imaginary part.
inline std::vector<Root> find_roots(const IntPoly& p, unsigned digits) {
    if (p.is_zero()) throw error("find_roots: zero polynomial");
    PrecisionGuard guard(digits + 15);

    std::vector<Root> roots;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        std::vector<Complex> zs = detail::durand_kerner(factor, digits);
        // Newton polish on the square-free factor
        std::vector<Real> fc = detail::to_real_coeffs(factor);
        std::vector<Real> dc = detail::to_real_coeffs(factor.derivative());
        for (auto& z : zs)
            for (int it = 0; it < 8; ++it) z -= detail::horner(fc, z) / detail::horner(dc, z);

        // collapse numerically-real roots, enforce conjugate pairing
        const Real real_tol = pow10(-(2 * static_cast<long>(digits)) / 3);
        std::vector<Complex> upper, lower;
        for (auto& z : zs) {
            if (rabs(z.im) < real_tol * rmax(Real(1), rabs(z.re)))
                roots.push_back({Complex(z.re), mult});
            else if (z.im > 0)
                upper.push_back(z);
            else
                lower.push_back(z);
        }
        if (upper.size() != lower.size()) throw error("find_roots: conjugate pairing failed");
        for (const auto& u : upper) {
            size_t best = 0;
            Real best_dist = -1;
            for (size_t i = 0; i < lower.size(); ++i) {
                Real dist = abs(u - conj(lower[i]));
                if (best_dist < 0 || dist < best_dist) { best_dist = dist; best = i; }
            }
            if (best_dist > pow10(-static_cast<long>(digits) / 2) * rmax(Real(1), abs(u)))
                throw error("find_roots: conjugate pairing failed");
            Complex mean = (u + conj(lower[best])) * Complex(Real(1) / 2);
            lower.erase(lower.begin() + static_cast<long>(best));
            roots.push_back({mean, mult});
            roots.push_back({conj(mean), mult});
        }

        // residual certification on the square-free factor
        const Real bound = pow10(1 - static_cast<long>(digits));
        for (size_t i = roots.size() - zs.size(); i < roots.size(); ++i) {
            Real scale = 0, power = 1;
            for (const auto& c : fc) {
                scale += rabs(c) * power;
                power *= abs(roots[i].value);
            }
            if (abs(detail::horner(fc, roots[i].value)) >= bound * scale)
                throw error("find_roots: no convergence at requested precision");
        }
    }

    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        Real ma = abs(a.value), mb = abs(b.value);
        if (ma != mb) return ma < mb;
        if (a.value.re != b.value.re) return a.value.re < b.value.re;
        return a.value.im < b.value.im;
    });
    return roots;
}

struct BinetTerm {
    Complex root;
    int multiplicity = 1;
    std::vector<Complex> coeff;  // index-polynomial coefficients, ascending, size == multiplicity
};

struct BinetForm {
    std::vector<BinetTerm> terms;
    unsigned precision = 50;
    long anchor_lo = 0;  // anchor window the fit interpolates
    long anchor_hi = -1;

    int order() const {
        int d = 0;
        for (const auto& t : terms) d += t.multiplicity;
        return d;
    }
};

/// Solves the confluent Vandermonde system through `order` consecutive
/// anchors starting at anchors.start. Residuals beyond the precision budget
/// mean the requested precision cannot support the fit.
inline BinetForm fit_binet(const LinearRecurrence& rec, const DetSequence& anchors,
                           unsigned digits) {
    const int d = rec.order;
    if (static_cast<int>(anchors.terms.size()) < d)
        throw error("fit_binet: need at least `order` consecutive anchors");
    PrecisionGuard guard(digits + 15);

    std::vector<Root> roots = find_roots(rec.char_X, digits);
    BinetForm form;
    form.precision = digits;
    form.anchor_lo = anchors.start;
    form.anchor_hi = anchors.start + d - 1;
    for (const auto& r : roots) form.terms.push_back({r.value, r.multiplicity, {}});

    // columns: for each root, powers m^0..m^{mult-1} times root^m
    std::vector<std::vector<Complex>> a(static_cast<size_t>(d),
                                        std::vector<Complex>(static_cast<size_t>(d)));
    std::vector<Complex> b(static_cast<size_t>(d));
    for (int row = 0; row < d; ++row) {
        const long m = anchors.start + row;
        int col = 0;
        for (const auto& t : form.terms) {
            Complex rpow = pow_int(t.root, m);
            Complex mono(Real(1));
            for (int pw = 0; pw < t.multiplicity; ++pw) {
                a[static_cast<size_t>(row)][static_cast<size_t>(col++)] = mono * rpow;
                mono *= Complex(Real(m));
            }
        }
        b[static_cast<size_t>(row)] = Complex(Real(anchors.at(m)));
    }

    // Gaussian elimination with partial pivoting
    std::vector<Complex> x = b;
    for (int k = 0; k < d; ++k) {
        int pivot = k;
        Real best = norm(a[static_cast<size_t>(k)][static_cast<size_t>(k)]);
        for (int r = k + 1; r < d; ++r) {
            Real cand = norm(a[static_cast<size_t>(r)][static_cast<size_t>(k)]);
            if (cand > best) { best = cand; pivot = r; }
        }
        if (best == 0) throw error("fit_binet: singular anchor system");
        std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot)]);
        std::swap(x[static_cast<size_t>(k)], x[static_cast<size_t>(pivot)]);
        for (int r = k + 1; r < d; ++r) {
            Complex f = a[static_cast<size_t>(r)][static_cast<size_t>(k)] / a[static_cast<size_t>(k)][static_cast<size_t>(k)];
            if (f == Complex()) continue;
            for (int c = k; c < d; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] -= f * a[static_cast<size_t>(k)][static_cast<size_t>(c)];
            x[static_cast<size_t>(r)] -= f * x[static_cast<size_t>(k)];
        }
    }
    for (int k = d; k-- > 0;) {
        for (int c = k + 1; c < d; ++c)
            x[static_cast<size_t>(k)] -= a[static_cast<size_t>(k)][static_cast<size_t>(c)] * x[static_cast<size_t>(c)];
        x[static_cast<size_t>(k)] = x[static_cast<size_t>(k)] / a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }

    int col = 0;
    for (auto& t : form.terms)
        for (int pw = 0; pw < t.multiplicity; ++pw) t.coeff.push_back(x[static_cast<size_t>(col++)]);

    // residual gate over the anchors
    Real max_anchor = 1;
    for (int row = 0; row < d; ++row)
        max_anchor = rmax(max_anchor, Real(abs(anchors.at(anchors.start + row))));
    const Real bound = pow10(6 - static_cast<long>(digits)) * max_anchor;
    for (int row = 0; row < d; ++row) {
        const long m = anchors.start + row;
        Complex got;
        for (const auto& t : form.terms) {
            Complex poly;
            Complex mono(Real(1));
            for (const auto& c : t.coeff) {
                poly += c * mono;
                mono *= Complex(Real(m));
            }
            got += poly * pow_int(t.root, m);
        }
        if (abs(got - Complex(Real(anchors.at(m)))) > bound)
            throw error("fit_binet: residual exceeds precision budget; raise precision");
    }
    return form;
}

/// Full complex evaluation (diagnostics and internal use).
inline Complex eval_binet_complex(const BinetForm& form, long m) {
    Complex sum;
    for (const auto& t : form.terms) {
        Complex poly;
        Complex mono(Real(1));
        for (const auto& c : t.coeff) {
            poly += c * mono;
            mono *= Complex(Real(m));
        }
        sum += poly * pow_int(t.root, m);
    }
    return sum;
}

/// Real value of the form at index m. The imaginary residue must stay below
/// 10^{6-precision} relative to the value; beyond that the working precision
/// is exhausted.
inline Real eval_binet(const BinetForm& form, long m) {
    PrecisionGuard guard(form.precision + 15);
    Complex sum = eval_binet_complex(form, m);
    const Real scale = rmax(rabs(sum.re), Real(1));
    if (rabs(sum.im) > pow10(6 - static_cast<long>(form.precision)) * scale)
        throw error("precision exhausted");
    return sum.re;
}

struct RootProfile {
    struct Entry {
        Complex value;
        Real magnitude;
        int multiplicity = 1;
        bool on_unit_circle = false;
        bool inside_disk = false;
    };
    std::vector<Entry> entries;
    int dominant = -1;             // index of the strictly largest magnitude
    Real subdominant_magnitude;    // largest magnitude below the dominant one
};

/// Magnitude classification with the fixed 1e-12 tolerance around the unit
/// circle; identifies the dominant root and the largest sub-dominant
/// magnitude (the geometric error rate of asymptotic formulas).
inline RootProfile classify_roots(const BinetForm& form) {
    RootProfile profile;
    profile.subdominant_magnitude = 0;
    const Real tol = pow10(-12);
    Real best = -1;
    for (const auto& t : form.terms) {
        RootProfile::Entry e;
        e.value = t.root;
        e.magnitude = abs(t.root);
        e.multiplicity = t.multiplicity;
        e.on_unit_circle = rabs(e.magnitude - 1) < tol;
        e.inside_disk = e.magnitude < 1 - tol;
        profile.entries.push_back(e);
        if (e.magnitude > best) {
            best = e.magnitude;
            profile.dominant = static_cast<int>(profile.entries.size()) - 1;
        }
    }
    for (const auto& e : profile.entries) {
        if (e.magnitude < best - tol && e.magnitude > profile.subdominant_magnitude)
            profile.subdominant_magnitude = e.magnitude;
    }
    return profile;
}

}  // namespace resrec
