#pragma once

// Straight linear k-tree Laplacians and their standard minors.
//
// The two minors that matter are named for their position in the resistance
// ratio (Bapat):
//
//     R(1,n) = Det(L^n({1,n}|{1,n})) / Det(L^n(1|1))
//
// numerator part    -> rows/columns {1,n} deleted (the end-node minor)
// denominator part  -> row/column 1 deleted (the spanning-tree count)

#include "resrec/matrix.hpp"
#include "resrec/numeric.hpp"

#include <string>
#include <vector>

namespace resrec {

enum class Part { numerator, denominator, custom };

inline const char* to_string(Part p) {
    switch (p) {
        case Part::numerator: return "numerator";
        case Part::denominator: return "denominator";
        case Part::custom: return "custom";
    }
    return "?";
}

struct FamilySpec {
    int k = 3;
    Part part = Part::numerator;
    // Used only when part == custom (1-based; index 0 is a placeholder for n).
    std::vector<int> custom_rows;
    std::vector<int> custom_cols;
};

/// Laplacian of the straight linear k-tree on n vertices: entry (i,j) is -1
/// iff 0 < |i-j| <= k, the diagonal carries the vertex degree.
inline ExactMatrix build_laplacian(int k, int n) {
    if (k < 1) throw error("build_laplacian: bandwidth must be >= 1");
    if (n < 2) throw error("build_laplacian: need at least 2 vertices");
    ExactMatrix L(n, n);
    for (int i = 0; i < n; ++i) {
        long deg = 0;
        for (int j = 0; j < n; ++j) {
            if (i != j && std::abs(i - j) <= k) {
                L(i, j) = -1;
                ++deg;
            }
        }
        L(i, i) = deg;
    }
    return L;
}

/// The 1-based deletion sets a FamilySpec denotes on L^n.
inline std::pair<std::vector<int>, std::vector<int>> deletion_sets(const FamilySpec& spec, int n) {
    switch (spec.part) {
        case Part::numerator: return {{1, n}, {1, n}};
        case Part::denominator: return {{1}, {1}};
        case Part::custom: {
            auto subst = [n](std::vector<int> v) {
                for (int& i : v)
                    if (i == 0) i = n;
                return v;
            };
            return {subst(spec.custom_rows), subst(spec.custom_cols)};
        }
    }
    throw error("deletion_sets: bad part");
}

inline ExactMatrix deleted_laplacian(const FamilySpec& spec, int n) {
    auto [rows, cols] = deletion_sets(spec, n);
    return build_laplacian(spec.k, n).with_deleted(rows, cols);
}

inline BigInt oracle_det(const FamilySpec& spec, int n) {
    return det_fraction_free(deleted_laplacian(spec, n));
}

/// A labelled run of exact determinants with an explicit start index, so
/// cutoff reasoning stays testable.
struct DetSequence {
    std::string label;
    long start = 0;
    std::vector<BigInt> terms;

    long end() const { return start + static_cast<long>(terms.size()) - 1; }
    bool contains(long idx) const { return idx >= start && idx <= end(); }
    const BigInt& at(long idx) const {
        if (!contains(idx)) throw error("DetSequence: index " + std::to_string(idx) + " outside [" +
                                        std::to_string(start) + "," + std::to_string(end()) + "]");
        return terms[static_cast<size_t>(idx - start)];
    }
    /// Same terms, start index shifted by delta.
    DetSequence reindexed(long delta, std::string new_label = {}) const {
        return DetSequence{new_label.empty() ? label : std::move(new_label), start + delta, terms};
    }
};

/// Exact determinants Det(L^n(deletions)) for every Laplacian size n in
/// [n_lo, n_hi], indexed by n.
inline DetSequence oracle_sequence(const FamilySpec& spec, int n_lo, int n_hi) {
    if (n_lo < 2) throw error("oracle_sequence: deletions undefined below n=2");
    if (n_hi < n_lo) throw error("oracle_sequence: empty range");
    DetSequence seq;
    seq.label = std::string(to_string(spec.part)) + "(k=" + std::to_string(spec.k) + ")";
    seq.start = n_lo;
    seq.terms.reserve(static_cast<size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n) seq.terms.push_back(oracle_det(spec, n));
    return seq;
}

}  // namespace resrec
