#pragma once

// The Laplace expansion procedure on matrix families.
//
// Expanding Det(M) along the first row (or first column, whichever holds
// fewer nonzeros) rewrites it as a sum of (+/- entry) * y * Det(minor family)
// terms, y being the backward shift in the family size. Newly seen minor
// families are registered and queued until no unexpanded family remains,
// leaving one determinant identity per family.

#include "resrec/graphfam.hpp"
#include "resrec/poly.hpp"
#include "resrec/stencil.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace resrec {

struct DetIdentity {
    int lhs = -1;
    // Det(lhs) = sum of coeff(y) * Det(family); each coeff is a nonzero
    // integer multiple of y. An empty rhs means Det(lhs) = 0.
    std::vector<std::pair<IntPoly, int>> rhs;
};

struct EquationSystem {
    std::vector<MatrixFamily> families;  // indexed by discovery order; [0] is the seed
    std::vector<DetIdentity> equations;  // one per family, same order
    int seed = 0;
};

namespace detail {

class FamilyRegistry {
public:
    explicit FamilyRegistry(int rep_size) : rep_size_(rep_size) {}

    /// Returns (id, freshly_registered).
    std::pair<int, bool> intern(MatrixFamily f) {
        auto it = index_.find(f.key());
        if (it != index_.end()) return {it->second, false};
        f.id = static_cast<int>(families_.size());
        // key equality is the fast path; the member comparison backs it up
        // the first time a family enters the registry.
        for (const auto& known : families_) {
            if (family_equals(known, f, rep_size_))
                throw error("registry: same family under two canonical keys");
        }
        index_.emplace(f.key(), f.id);
        families_.push_back(std::move(f));
        return {families_.back().id, true};
    }

    const std::vector<MatrixFamily>& families() const { return families_; }

private:
    int rep_size_;
    std::map<std::string, int> index_;
    std::vector<MatrixFamily> families_;
};

}  // namespace detail

/// One Laplace expansion of a canonical family. Minor families are interned
/// through the registry; duplicate minors of the same expansion merge their
/// coefficients (terms that cancel to zero are dropped).
template <typename Intern>
DetIdentity expand_once(const MatrixFamily& f, int f_id, int rep_size, Intern&& intern) {
    const int n = std::max(f.min_size(), rep_size);
    ExactMatrix m = f.member(n);

    std::vector<int> row_support, col_support;
    for (int j = 0; j < n; ++j)
        if (m(0, j) != 0) row_support.push_back(j);
    for (int i = 0; i < n; ++i)
        if (m(i, 0) != 0) col_support.push_back(i);
    const bool along_row = row_support.size() <= col_support.size();
    const auto& support = along_row ? row_support : col_support;

    DetIdentity identity;
    identity.lhs = f_id;
    if (support.empty()) return identity;  // zero first line: Det(f) = 0

    std::vector<int> order;
    std::map<int, BigInt> coeff;
    for (int pos : support) {
        const BigInt& entry = along_row ? m(0, pos) : m(pos, 0);
        const int sign = (pos % 2 == 0) ? 1 : -1;  // (-1)^{j+1}, 1-based j
        MatrixFamily minor =
            along_row ? minor_family_at(f, 1, pos + 1) : minor_family_at(f, pos + 1, 1);
        auto [gid, fresh] = intern(std::move(minor));
        if (coeff.find(gid) == coeff.end()) order.push_back(gid);
        coeff[gid] += sign * entry;
        (void)fresh;
    }
    for (int gid : order) {
        if (coeff[gid] == 0) continue;
        identity.rhs.emplace_back(IntPoly::monomial(coeff[gid], 1), gid);
    }
    return identity;
}

struct ExpansionStep {
    DetIdentity identity;
    std::vector<MatrixFamily> families;  // [0] = the expanded family, minors follow
};

/// A single expansion in isolation: the identity for f plus every distinct
/// minor family it produced, numbered locally from 0 (= f itself).
inline ExpansionStep expand_family(const MatrixFamily& f, int rep_size = 10) {
    detail::FamilyRegistry registry(rep_size);
    MatrixFamily canon = canonicalize(f);
    registry.intern(canon);
    auto intern = [&](MatrixFamily fam) { return registry.intern(std::move(fam)); };
    ExpansionStep step;
    step.identity = expand_once(canon, 0, rep_size, intern);
    step.families = registry.families();
    return step;
}

/// Drives the expansion to its fixed point. Throws once the registry would
/// exceed max_families; the procedure is not guaranteed to terminate in
/// general, so the cap is the failure mode.
inline EquationSystem run_procedure(const MatrixFamily& seed, int max_families = 200,
                                    int rep_size = 10) {
    if (max_families < 1) throw error("run_procedure: max_families must be >= 1");
    detail::FamilyRegistry registry(rep_size);
    std::vector<int> queue;
    auto intern = [&](MatrixFamily fam) {
        auto [gid, fresh] = registry.intern(std::move(fam));
        if (static_cast<int>(registry.families().size()) > max_families)
            throw error("procedure did not terminate within cap");
        if (fresh) queue.push_back(gid);
        return std::pair<int, bool>{gid, fresh};
    };

    EquationSystem system;
    intern(canonicalize(seed));
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const int fid = queue[qi];
        // copy: intern() may grow the registry vector mid-expansion
        MatrixFamily current = registry.families()[static_cast<size_t>(fid)];
        system.equations.push_back(expand_once(current, fid, rep_size, intern));
    }
    system.families = registry.families();
    system.seed = 0;
    return system;
}

/// Substitutes exact member determinants into every identity over a window
/// of sizes. Returns the first violation message, or an empty string.
inline std::string check_soundness(const EquationSystem& system, int window = 6) {
    for (const auto& eq : system.equations) {
        const MatrixFamily& lhs = system.families[static_cast<size_t>(eq.lhs)];
        int lo = lhs.min_size();
        for (const auto& [c, gid] : eq.rhs)
            lo = std::max(lo, system.families[static_cast<size_t>(gid)].min_size() + 1);
        for (int n = lo; n <= lo + window; ++n) {
            BigInt want = det_fraction_free(lhs.member(n));
            BigInt got = 0;
            for (const auto& [c, gid] : eq.rhs) {
                // coefficient c is an integer multiple of y: apply the shift.
                got += c[1] * det_fraction_free(system.families[static_cast<size_t>(gid)].member(n - 1));
            }
            if (want != got)
                return "identity for family " + std::to_string(eq.lhs) + " fails at n=" + std::to_string(n);
        }
    }
    return {};
}

/// Human-readable rendering in the paper's style, one line per identity,
/// e.g. "D(0) = 2 yD(0) + y D(1)".
inline std::string render_identity(const DetIdentity& eq, const std::string& prefix = "D") {
    auto name = [&](int id) { return prefix + "(" + std::to_string(id) + ")"; };
    std::string out = name(eq.lhs) + " = ";
    if (eq.rhs.empty()) return out + "0";
    bool first = true;
    for (const auto& [c, gid] : eq.rhs) {
        const BigInt& v = c[1];
        const BigInt a = abs(v);
        if (first) {
            if (v < 0) out += "- ";
            first = false;
        } else {
            out += (v < 0) ? " - " : " + ";
        }
        if (a == 1)
            out += (v < 0) ? "y" + name(gid) : "y " + name(gid);
        else
            out += a.str() + " y" + name(gid);
    }
    return out;
}

inline std::vector<std::string> render_system(const EquationSystem& system,
                                              const std::string& prefix = "D") {
    std::vector<std::string> lines;
    lines.reserve(system.equations.size());
    for (const auto& eq : system.equations) lines.push_back(render_identity(eq, prefix));
    return lines;
}

}  // namespace resrec
