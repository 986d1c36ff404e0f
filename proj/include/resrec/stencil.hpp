#pragma once

// Boundary-stencil representation of infinite banded matrix families.
//
// member(n) is assembled as: top_block rows (left-anchored), then interior
// rows following a constant band, then bottom_block rows (right-anchored).
// First-row/first-column Laplace minors of such a family are again of this
// shape as long as deletions stay in the top-left boundary region, which is
// what lets the expansion procedure recognize previously seen families.
//
// Canonical form: the top block is the shortest prefix after which every row
// up to the bottom block coincides with (possibly truncated) band
// continuation, and block grids carry no dead zero columns. Minors are
// inferred from two consecutive concrete sizes; disagreement between the two
// inferences means the family escaped the stencil closure.

#include "resrec/graphfam.hpp"
#include "resrec/matrix.hpp"
#include "resrec/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace resrec {

using Band = std::map<int, long>;  // diagonal offset -> constant value, zero entries absent

struct Block {
    // Rectangular grid; rows padded to a common width. Top blocks are
    // left-anchored, bottom blocks right-anchored.
    std::vector<std::vector<long>> rows;

    int height() const { return static_cast<int>(rows.size()); }
    int width() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    bool operator==(const Block&) const = default;
};

enum class Axis { row, column };

class MatrixFamily {
public:
    MatrixFamily() = default;
    MatrixFamily(Block top, Band band, Block bottom)
        : top_(std::move(top)), band_(std::move(band)), bottom_(std::move(bottom)) {
        for (auto it = band_.begin(); it != band_.end();) {
            it = (it->second == 0) ? band_.erase(it) : std::next(it);
        }
        trim_blocks();
    }

    int id = -1;  // discovery index, assigned by the expander registry

    const Block& top() const { return top_; }
    const Block& bottom() const { return bottom_; }
    const Band& band() const { return band_; }

    int band_halfwidth() const {
        int b = 0;
        for (const auto& [off, val] : band_) b = std::max(b, std::abs(off));
        return b;
    }

    /// Smallest n for which member(n) renders without clipping block content.
    int min_size() const {
        return std::max({top_.height() + bottom_.height(), top_.width(), bottom_.width(), 1});
    }

    /// The n-th member of the family.
    ExactMatrix member(int n) const {
        if (n < min_size())
            throw error("member: size " + std::to_string(n) + " below min_size " + std::to_string(min_size()));
        ExactMatrix m(n, n);
        for (int r = 0; r < top_.height(); ++r)
            for (int c = 0; c < top_.width(); ++c) m(r, c) = top_.rows[r][c];
        for (int r = top_.height(); r < n - bottom_.height(); ++r)
            for (const auto& [off, val] : band_) {
                int c = r + off;
                if (c >= 0 && c < n) m(r, c) = val;
            }
        for (int r = 0; r < bottom_.height(); ++r)
            for (int c = 0; c < bottom_.width(); ++c)
                m(n - bottom_.height() + r, n - bottom_.width() + c) = bottom_.rows[r][c];
        return m;
    }

    bool same_stencil(const MatrixFamily& o) const {
        return top_ == o.top_ && band_ == o.band_ && bottom_ == o.bottom_;
    }

    /// Stable serialization of the stencil, usable as a registry key.
    std::string key() const {
        std::string s = "t:";
        for (const auto& r : top_.rows) {
            for (long v : r) s += std::to_string(v) + ",";
            s += ";";
        }
        s += "b:";
        for (const auto& [off, val] : band_) s += std::to_string(off) + "=" + std::to_string(val) + ",";
        s += "u:";
        for (const auto& r : bottom_.rows) {
            for (long v : r) s += std::to_string(v) + ",";
            s += ";";
        }
        return s;
    }

private:
    void trim_blocks() {
        // drop all-zero leading/trailing rows? No: zero rows are meaningful
        // (a zero first row makes the determinant vanish). Only dead columns
        // are trimmed: trailing for the top block, leading for the bottom.
        int w = 0;
        for (const auto& r : top_.rows)
            for (int c = static_cast<int>(r.size()); c-- > 0;)
                if (r[c] != 0) { w = std::max(w, c + 1); break; }
        for (auto& r : top_.rows) r.resize(static_cast<size_t>(w), 0);
        int wb = 0;
        for (const auto& r : bottom_.rows)
            for (int c = 0; c < static_cast<int>(r.size()); ++c)
                if (r[c] != 0) { wb = std::max(wb, static_cast<int>(r.size()) - c); break; }
        for (auto& r : bottom_.rows) r.erase(r.begin(), r.end() - wb);
    }

    Block top_;
    Band band_;
    Block bottom_;
};

namespace detail {

inline bool row_matches_band(const ExactMatrix& m, int r, const Band& band) {
    const int n = m.cols();
    for (int c = 0; c < n; ++c) {
        long expect = 0;
        auto it = band.find(c - r);
        if (it != band.end()) expect = it->second;
        if (m(r, c) != expect) return false;
    }
    return true;
}

/// Reads a canonical stencil off a concrete member, given the interior band.
/// Returns nullopt when no top/band/bottom split reproduces the matrix.
inline std::optional<MatrixFamily> infer_stencil(const ExactMatrix& m, const Band& band) {
    const int n = m.rows();
    int bb = 0;
    while (bb < n && !row_matches_band(m, n - 1 - bb, band)) ++bb;
    int t = 0;
    for (int r = n - bb - 1; r >= 0; --r) {
        if (!row_matches_band(m, r, band)) { t = r + 1; break; }
    }
    Block top, bottom;
    for (int r = 0; r < t; ++r) {
        std::vector<long> row;
        row.reserve(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) row.push_back(static_cast<long>(m(r, c)));
        top.rows.push_back(std::move(row));
    }
    for (int r = n - bb; r < n; ++r) {
        std::vector<long> row;
        for (int c = 0; c < n; ++c) row.push_back(static_cast<long>(m(r, c)));
        bottom.rows.push_back(std::move(row));
    }
    MatrixFamily fam(std::move(top), band, std::move(bottom));
    if (fam.min_size() > n) return std::nullopt;  // blocks would collide at this size
    return fam;
}

}  // namespace detail

/// Canonical representative: re-read the stencil off two fresh members, so
/// absorbable block rows fall back into the band region. Idempotent.
inline MatrixFamily canonicalize(const MatrixFamily& f) {
    const int s0 = f.min_size() + 2 * f.band_halfwidth() + 2;
    auto a = detail::infer_stencil(f.member(s0), f.band());
    auto b = detail::infer_stencil(f.member(s0 + 1), f.band());
    if (!a || !b || !a->same_stencil(*b)) throw error("canonicalize: family is not a boundary stencil");
    return *a;
}

/// Family whose members are the (del_row | del_col) minors of f's members,
/// one size down: member(result, n-1) == delete(member(f, n), del_row, del_col).
/// Deletions must stay in the top-left boundary region.
inline MatrixFamily minor_family_at(const MatrixFamily& f, int del_row, int del_col) {
    const int b = f.band_halfwidth();
    const int boundary = std::max(f.top().height() + b, 2 * b + 1) + 1;
    if (del_row != 1 && del_col != 1) throw error("minor_family: deletion must touch row 1 or column 1");
    if (del_row > boundary || del_col > boundary) throw error("stencil closure violated");

    const int s0 = std::max({f.min_size(), f.top().height() + f.bottom().height() + 2 * b + 4,
                             del_row + b + 2, del_col + b + 2});
    std::optional<MatrixFamily> got;
    for (int s : {s0, s0 + 1}) {
        ExactMatrix cut = f.member(s).with_deleted({del_row}, {del_col});
        auto g = detail::infer_stencil(cut, f.band());
        if (!g) throw error("stencil closure violated");
        if (!got) {
            got = std::move(g);
        } else if (!got->same_stencil(*g)) {
            throw error("stencil closure violated");
        }
    }
    // Expansion happens at the top-left; the bottom block must ride along
    // unchanged (asserted, not assumed).
    if (!(got->bottom() == f.bottom())) throw error("stencil closure violated: bottom block changed");
    return *got;
}

/// Spec-facing signature: expansion along the first row deletes (1 | j),
/// along the first column (j | 1).
inline MatrixFamily minor_family(const MatrixFamily& f, Axis axis, int j) {
    return axis == Axis::row ? minor_family_at(f, 1, j) : minor_family_at(f, j, 1);
}

/// Canonical-stencil equality, double-checked on two concrete members.
inline bool family_equals(const MatrixFamily& f, const MatrixFamily& g, int rep_size = 10) {
    if (!f.same_stencil(g)) return false;
    const int s = std::max({rep_size, f.min_size(), g.min_size()});
    return f.member(s) == g.member(s) && f.member(s + 1) == g.member(s + 1);
}

/// Seed stencil for a k-tree family part, read off a concrete deleted
/// Laplacian large enough to show every feature.
inline MatrixFamily seed_family(const FamilySpec& spec, int rep_size = 10) {
    Band band;
    band[0] = 2L * spec.k;
    for (int o = 1; o <= spec.k; ++o) {
        band[o] = -1;
        band[-o] = -1;
    }
    const int n0 = std::max(rep_size, 3 * spec.k + 5);
    std::optional<MatrixFamily> got;
    for (int n : {n0, n0 + 1}) {
        auto g = detail::infer_stencil(deleted_laplacian(spec, n), band);
        if (!g) throw error("seed_family: not a boundary stencil");
        if (!got)
            got = std::move(g);
        else if (!got->same_stencil(*g))
            throw error("seed_family: stencil not size-stable");
    }
    return *got;
}

}  // namespace resrec
