#pragma once

// End-node resistance of straight linear k-trees, three ways:
//
//   exact       Det(L^n({1,n}|{1,n})) / Det(L^n(1|1))     (dense determinants)
//   recurrence  both determinant sequences advanced by their integer
//               recurrences in O(n) exact steps
//   binet       ratio of fitted closed forms, numerator at index n-2 and
//               denominator at n-1 (minor-size parameterization)
//
// plus the convergence analysis of Delta(n) = R(n+1) - R(n) against 1/14.

#include "resrec/binet.hpp"
#include "resrec/expander.hpp"
#include "resrec/graphfam.hpp"
#include "resrec/recurrence.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace resrec {

/// Exact determinant-ratio resistance between nodes 1 and n.
inline BigRat resistance_exact(int k, int n) {
    if (n < 2) throw error("resistance_exact: need n >= 2");
    BigInt num = oracle_det(FamilySpec{k, Part::numerator}, n);
    BigInt den = oracle_det(FamilySpec{k, Part::denominator}, n);
    if (den == 0) throw error("resistance_exact: zero spanning-tree count");
    return make_rat(num, den);
}

/// Everything the pipeline derives for one determinant family part, indexed
/// by minor size (the numerator minor of L^n has size n-2, the denominator
/// minor size n-1).
struct PartAnalysis {
    FamilySpec spec;
    DetSequence minor_seq;        // minor-size indexed oracle determinants
    EquationSystem system;
    IntPoly annihilator_y;
    IntPoly annihilator_X;
    IntPoly minimal_X;
    LinearRecurrence rec;
    SisterSequence sister;
    BinetForm form;

    // extension of minor_seq by the recurrence, grown on demand
    mutable std::vector<BigInt> extended;
    mutable long extended_hi = -1;

    const BigInt& term(long m) const {
        if (m <= minor_seq.end()) return minor_seq.at(m);
        const int d = rec.order;
        if (extended_hi < minor_seq.end()) {
            extended.assign(minor_seq.terms.end() - d, minor_seq.terms.end());
            extended_hi = minor_seq.end();
        }
        while (extended_hi < m) {
            BigInt acc = 0;
            const size_t sz = extended.size();
            for (int i = 0; i < d; ++i)
                acc += rec.char_X[static_cast<size_t>(i)] * extended[sz - static_cast<size_t>(d - i)];
            acc = -acc;
            if (acc % rec.char_X[static_cast<size_t>(d)] != 0)
                throw error("recurrence step not integral");
            extended.push_back(acc / rec.char_X[static_cast<size_t>(d)]);
            ++extended_hi;
        }
        return extended[extended.size() - static_cast<size_t>(extended_hi - m) - 1];
    }
};

struct ConvergenceRow {
    int n = 0;
    BigRat resistance;  // R(n)
    BigRat delta;       // R(n+1) - R(n)
    BigRat err;         // delta - 1/14
    std::optional<Real> ratio;  // e(n) / e(n-1), absent on the first row or across zero
};

struct ConvergenceReport {
    int k = 3;
    int n_lo = 0;
    int n_hi = 0;
    unsigned precision = 50;
    BigRat reference;             // exact limit the deltas are compared against
    std::vector<ConvergenceRow> rows;
    Real identity_residual;       // | n_{5,1}/(d_5 r_5) - 1/14 |
    Real limit_value;             // Re(n_{5,1}/(d_5 r_5))
    Real dominant_magnitude;      // |r_5|
    Real subdominant_magnitude;   // |r_6|
    Real predicted_rate;          // |r_6| / |r_5|
    Real empirical_tail_rate;     // geometric-mean decay of |e(n)| over the tail
    BigRat final_error;           // |Delta(n_hi) - 1/14|
    bool identity_pass = false;
    bool final_error_pass = false;
    bool tail_rate_pass = false;
    bool pass = false;
};

/// Full analysis of one family part: oracle sequence, expansion system,
/// annihilator, minimal polynomial with detected cutoff, sister sequence,
/// and fitted Binet form.
inline PartAnalysis analyze_part(const FamilySpec& spec, unsigned digits, int rep_size = 10,
                                 int max_families = 200, int lap_lo = 2, int lap_hi = 50) {
    PartAnalysis part;
    part.spec = spec;
    const long shift = (spec.part == Part::numerator) ? -2 : -1;
    part.minor_seq = oracle_sequence(spec, lap_lo, lap_hi).reindexed(shift);
    if (part.minor_seq.terms.size() < 16) throw error("analyze_part: oracle window too short");

    part.system = run_procedure(seed_family(spec, rep_size), max_families, rep_size);
    part.annihilator_y = eliminate(part.system);
    part.annihilator_X = y_to_X(part.annihilator_y);

    // minimal polynomial from a window safely inside the recurrent tail
    DetSequence window;
    window.label = part.minor_seq.label;
    window.start = part.minor_seq.start + 4;
    window.terms.assign(part.minor_seq.terms.begin() + 4, part.minor_seq.terms.end());
    part.minimal_X = minimal_polynomial(window);
    if (!poly_divides(part.minimal_X, part.annihilator_X))
        throw error("analyze_part: annihilator not divisible by the minimal polynomial");

    part.rec = make_recurrence(part.minor_seq, part.minimal_X);
    part.sister = extend_backward(part.minor_seq, part.rec, part.rec.order + 4);

    DetSequence anchors;
    anchors.label = part.minor_seq.label;
    anchors.start = part.rec.cutoff;
    for (int i = 0; i < part.rec.order; ++i)
        anchors.terms.push_back(part.minor_seq.at(part.rec.cutoff + i));
    part.form = fit_binet(part.rec, anchors, digits);
    return part;
}

/// Discovery, recurrence extraction, and Binet fitting for one k, cached so
/// repeated resistance queries stay cheap.
class Pipeline {
public:
    explicit Pipeline(int k = 3, unsigned digits = 50, int rep_size = 10, int max_families = 200,
                      int oracle_hi = 50)
        : k_(k), digits_(digits), rep_size_(rep_size), max_families_(max_families) {
        num_ = analyze_part(FamilySpec{k, Part::numerator}, digits, rep_size, max_families, 2,
                            oracle_hi);
        den_ = analyze_part(FamilySpec{k, Part::denominator}, digits, rep_size, max_families, 2,
                            oracle_hi);
    }

    int bandwidth() const { return k_; }
    unsigned precision() const { return digits_; }
    const PartAnalysis& numerator() const { return num_; }
    const PartAnalysis& denominator() const { return den_; }

    /// Minor-size index of Laplacian size n for each part.
    static long numerator_index(int n) { return n - 2; }
    static long denominator_index(int n) { return n - 1; }

    /// O(n) exact resistance via the two integer recurrences; sizes below
    /// the recurrence cutoffs fall back to the dense determinant ratio.
    BigRat resistance_recurrence(int n) const {
        if (n < 2) throw error("resistance_recurrence: need n >= 2");
        const long mn = numerator_index(n), md = denominator_index(n);
        if (mn < num_.rec.cutoff || md < den_.rec.cutoff) return resistance_exact(k_, n);
        BigInt den_val = den_.term(md);
        if (den_val == 0) throw error("resistance_recurrence: zero denominator term");
        return make_rat(num_.term(mn), den_val);
    }

    /// Closed-form resistance: numerator form at n-2 over denominator form
    /// at n-1.
    Real resistance_binet(int n) const {
        PrecisionGuard guard(digits_ + 15);
        Real den_val = eval_binet(den_.form, denominator_index(n));
        if (den_val == 0) throw error("resistance_binet: zero denominator");
        return eval_binet(num_.form, numerator_index(n)) / den_val;
    }

    struct DominantData {
        Complex r;         // dominant root
        Complex d_top;     // denominator-form coefficient on the dominant root
        Complex n_lin;     // numerator-form linear coefficient on the dominant root
        Complex n_const;   // numerator-form constant coefficient on the dominant root
    };

    DominantData dominant_data() const {
        PrecisionGuard guard(digits_ + 15);
        const RootProfile num_profile = classify_roots(num_.form);
        const BinetTerm& nt = num_.form.terms[static_cast<size_t>(num_profile.dominant)];
        if (nt.multiplicity < 2)
            throw error("dominant numerator root is not confluent");
        const RootProfile den_profile = classify_roots(den_.form);
        const BinetTerm& dt = den_.form.terms[static_cast<size_t>(den_profile.dominant)];
        return {nt.root, dt.coeff[0], nt.coeff[1], nt.coeff[0]};
    }

    /// Single dominant-root approximation of R(n). Its first difference is
    /// the constant n_{5,1} / (d_5 r_5).
    Real asymptotic_R(int n) const {
        PrecisionGuard guard(digits_ + 15);
        DominantData dd = dominant_data();
        const long m = numerator_index(n);
        Complex numer = (dd.n_const + dd.n_lin * Complex(Real(m))) * pow_int(dd.r, m);
        Complex denom = dd.d_top * pow_int(dd.r, static_cast<long>(denominator_index(n)));
        return (numer / denom).re;
    }

    /// The limit of R(n+1) - R(n) predicted by the dominant terms.
    Complex asymptotic_slope() const {
        DominantData dd = dominant_data();
        return dd.n_lin / (dd.d_top * dd.r);
    }

    /// Exact reference value of lim R(n+1) - R(n): 1/14 for the 3-tree,
    /// 1 for the path.
    BigRat reference_limit() const {
        if (k_ == 3) return make_rat(BigInt(1), BigInt(14));
        if (k_ == 1) return BigRat(1);
        throw error("verify_conjecture: reference limit known for k=1 and k=3 only");
    }

    ConvergenceReport verify_conjecture(int n_lo, int n_hi) const {
        if (n_hi <= n_lo) throw error("verify_conjecture: empty range");
        PrecisionGuard guard(digits_ + 15);
        ConvergenceReport report;
        report.k = k_;
        report.n_lo = n_lo;
        report.n_hi = n_hi;
        report.precision = digits_;

        const BigRat limit = reference_limit();
        report.reference = limit;
        BigRat prev_R = resistance_recurrence(n_lo);
        std::optional<BigRat> prev_err;
        for (int n = n_lo; n <= n_hi; ++n) {
            BigRat next_R = resistance_recurrence(n + 1);
            ConvergenceRow row;
            row.n = n;
            row.resistance = prev_R;
            row.delta = next_R - prev_R;
            row.err = row.delta - limit;
            if (prev_err && *prev_err != 0) row.ratio = Real(row.err) / Real(*prev_err);
            report.rows.push_back(row);
            prev_err = row.err;
            prev_R = next_R;
        }

        DominantData dd = dominant_data();
        Complex slope = dd.n_lin / (dd.d_top * dd.r);
        report.identity_residual = abs(slope - Complex(Real(limit)));
        report.limit_value = slope.re;
        report.dominant_magnitude = abs(dd.r);
        const RootProfile profile = classify_roots(num_.form);
        report.subdominant_magnitude = profile.subdominant_magnitude;
        report.predicted_rate = report.subdominant_magnitude / report.dominant_magnitude;

        // geometric-mean decay of |e(n)| over the trailing window
        const int tail = std::min(20, (n_hi - n_lo) / 2);
        report.empirical_tail_rate = Real(0);
        if (tail >= 2) {
            auto err_at = [&](int idx) -> Real {
                return rabs(Real(report.rows[static_cast<size_t>(idx)].err));
            };
            int b = static_cast<int>(report.rows.size()) - 1;
            int a = b - tail;
            while (a > 0 && err_at(a) == 0) --a;
            while (b > a && err_at(b) == 0) --b;
            if (b > a && err_at(a) != 0)
                report.empirical_tail_rate = pow(err_at(b) / err_at(a), Real(1) / (b - a));
        }

        report.final_error = abs(report.rows.back().err);
        report.identity_pass = report.identity_residual < pow10(-20);
        report.final_error_pass = report.final_error < make_rat(BigInt(1), BigInt(1000000));
        report.tail_rate_pass = report.empirical_tail_rate <= Real(6) / 10;
        report.pass = report.identity_pass && report.final_error_pass && report.tail_rate_pass;
        return report;
    }

private:
    int k_;
    unsigned digits_;
    int rep_size_;
    int max_families_;
    PartAnalysis num_;
    PartAnalysis den_;
};

/// Shared default pipeline for the paper's subject (k = 3 at 50 digits).
inline const Pipeline& three_tree_pipeline() {
    static const Pipeline pipeline(3, 50);
    return pipeline;
}

/// Spec-level convenience: O(n) exact resistance of the straight linear
/// 3-tree.
inline BigRat resistance_recurrence(int n) { return three_tree_pipeline().resistance_recurrence(n); }

/// Closed-form 3-tree resistance at the given precision.
inline Real resistance_binet(int n, unsigned digits = 50) {
    if (digits == 50) return three_tree_pipeline().resistance_binet(n);
    Pipeline pipeline(3, digits);
    return pipeline.resistance_binet(n);
}

}  // namespace resrec
