#pragma once

// Piecewise-linear path model for crystal graphs.
//
// A path is the concatenation of straight segments starting at 0, stored
// as its list of displacement vectors in fundamental coordinates.  The
// parametrization is immaterial: paths are kept in a canonical form (no
// zero displacement, no two consecutive displacements that are positive
// multiples of each other) and compared as displacement lists.
//
// For the root operators, everything is read off the height function
// h_i(t) = <alpha_i^vee, path(t)>, which in fundamental coordinates is
// the running sum of the i-th displacement coordinates.  Let m be its
// minimum over the traversal (an integer for any path reachable from a
// straight dominant path; this is asserted, not assumed):
//
//   eps_i = -m,   phi_i = h_i(end) - m.
//
// f_i is defined iff phi_i >= 1.  With t0 the last time h_i = m and t1
// the first time >= t0 with h_i = m+1, f_i leaves the path unchanged
// before t0, applies the simple reflection s_i to the displacements in
// [t0, t1] (splitting segments exactly at t0 and t1), and leaves the
// rest unchanged, which shifts it by -alpha_i.  e_i is the mirror image
// and is the exact inverse of f_i wherever both are defined.

#include <cstddef>
#include <optional>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/errors.hpp"
#include "crystal/rational.hpp"

namespace crystal {

class PiecewisePath {
public:
    // The zero-length path at the origin (highest path of B(0)).
    explicit PiecewisePath(int rank) : rank_(rank) {}

    // Canonicalizes: drops zero displacements, merges consecutive
    // positively-parallel ones.
    static PiecewisePath from_displacements(int rank, std::vector<Weight> disp) {
        PiecewisePath p(rank);
        for (auto& d : disp) p.append(std::move(d));
        return p;
    }

    int rank() const { return rank_; }
    const std::vector<Weight>& displacements() const { return segments_; }
    std::size_t segment_count() const { return segments_.size(); }

    Weight endpoint() const {
        Weight e = Weight::zero(rank_);
        for (const Weight& d : segments_) e += d;
        return e;
    }

    // Running values of h_i at the breakpoints, including both endpoints.
    std::vector<Rational> heights(int i) const {
        std::vector<Rational> h;
        h.reserve(segments_.size() + 1);
        Rational acc = 0;
        h.push_back(acc);
        for (const Weight& d : segments_) {
            acc += d.coords[i - 1];
            h.push_back(acc);
        }
        return h;
    }

    friend bool operator==(const PiecewisePath& a, const PiecewisePath& b) {
        return a.rank_ == b.rank_ && a.segments_ == b.segments_;
    }
    friend bool operator<(const PiecewisePath& a, const PiecewisePath& b) {
        return std::lexicographical_compare(a.segments_.begin(), a.segments_.end(),
                                            b.segments_.begin(), b.segments_.end());
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t k = 0; k < segments_.size(); ++k) {
            if (k) s += " ";
            s += segments_[k].to_string();
        }
        return s + "]";
    }

private:
    int rank_;
    std::vector<Weight> segments_;

    static bool positively_parallel(const Weight& a, const Weight& b) {
        int k = -1;
        for (int j = 0; j < a.rank(); ++j)
            if (a.coords[j] != 0) { k = j; break; }
        if (k < 0) return false;
        if (a.coords[k] == 0 || b.coords[k] == 0) return false;
        Rational c = b.coords[k] / a.coords[k];
        if (c <= 0) return false;
        for (int j = 0; j < a.rank(); ++j)
            if (b.coords[j] != c * a.coords[j]) return false;
        return true;
    }

    void append(Weight d) {
        if (d.is_zero()) return;
        if (!segments_.empty() && positively_parallel(segments_.back(), d)) {
            segments_.back() += d;
        } else {
            segments_.push_back(std::move(d));
        }
    }
};

inline PiecewisePath straight_path(const CartanMatrix& cm, const Weight& lambda) {
    if (lambda.rank() != cm.rank())
        throw UsageError("weight rank does not match " + cm.type().to_string());
    if (!lambda.is_dominant_integral())
        throw UsageError("straight_path requires a dominant integral weight, got " +
                         lambda.to_string());
    if (lambda.is_zero()) return PiecewisePath(cm.rank());
    return PiecewisePath::from_displacements(cm.rank(), {lambda});
}

// A point along the traversal: segment index (0-based) plus the exact
// fraction traversed within that segment.  Breakpoint k is reported as
// {k, 0} when a segment k exists and as {k-1, 1} at the path end; the
// empty path uses {0, 0}.
struct PathPosition {
    std::size_t segment = 0;
    Rational fraction = 0;

    friend bool operator==(const PathPosition& a, const PathPosition& b) {
        return a.segment == b.segment && a.fraction == b.fraction;
    }
};

struct HeightMin {
    Rational min_value;
    PathPosition first;
    PathPosition last;
};

inline PathPosition breakpoint_position(std::size_t k, std::size_t nsegments) {
    if (k < nsegments) return {k, Rational(0)};
    if (nsegments == 0) return {0, Rational(0)};
    return {nsegments - 1, Rational(1)};
}

// Minimum of h_i over the traversal with its first and last attainment.
// The minimum of a piecewise-linear function is always attained at a
// breakpoint, so the reported fractions are 0 or 1.
inline HeightMin height_min(const PiecewisePath& path, int i) {
    std::vector<Rational> h = path.heights(i);
    std::size_t first = 0, last = 0;
    Rational m = h[0];
    for (std::size_t k = 1; k < h.size(); ++k) {
        if (h[k] < m) { m = h[k]; first = k; last = k; }
        else if (h[k] == m) last = k;
    }
    std::size_t n = path.segment_count();
    return {m, breakpoint_position(first, n), breakpoint_position(last, n)};
}

struct EpsPhi {
    int eps;
    int phi;
};

inline EpsPhi eps_phi(const PiecewisePath& path, int i) {
    std::vector<Rational> h = path.heights(i);
    Rational m = *std::min_element(h.begin(), h.end());
    if (!is_integer(m))
        throw InvariantViolation("non-integral height minimum " + m.str() +
                                 " along direction " + std::to_string(i) + " of path " +
                                 path.to_string());
    Rational eps = -m;
    Rational phi = h.back() - m;
    if (!is_integer(phi))
        throw InvariantViolation("non-integral endpoint height along direction " +
                                 std::to_string(i) + " of path " + path.to_string());
    return {to_int_exact(eps), to_int_exact(phi)};
}

namespace detail {

inline Weight reflect_displacement(const CartanMatrix& cm, int i, const Weight& d) {
    Weight r = d;
    Rational c = d.coords[i - 1];
    if (c != 0)
        for (int k = 1; k <= cm.rank(); ++k) r.coords[k - 1] -= c * cm.entry(k, i);
    return r;
}

} // namespace detail

// Lowering operator.  Undefined (nullopt) iff phi_i = 0.
inline std::optional<PiecewisePath> f_op(const CartanMatrix& cm, const PiecewisePath& path, int i) {
    cm.check_index(i);
    std::vector<Rational> h = path.heights(i);
    Rational m = *std::min_element(h.begin(), h.end());
    if (!is_integer(m))
        throw InvariantViolation("non-integral height minimum in f_op on " + path.to_string());
    if (h.back() - m < 1) return std::nullopt;

    std::size_t t0 = 0; // last breakpoint at the minimum
    for (std::size_t k = 0; k < h.size(); ++k)
        if (h[k] == m) t0 = k;

    // First crossing of level m+1 after t0: inside segment c (0-based),
    // at fraction q of it.
    Rational level = m + 1;
    std::size_t c = t0;
    while (h[c + 1] < level) ++c;
    Rational q = (level - h[c]) / (h[c + 1] - h[c]);

    const auto& seg = path.displacements();
    std::vector<Weight> out;
    out.reserve(seg.size() + 1);
    for (std::size_t k = 0; k < t0; ++k) out.push_back(seg[k]);
    for (std::size_t k = t0; k < c; ++k) out.push_back(detail::reflect_displacement(cm, i, seg[k]));
    if (q == 1) {
        out.push_back(detail::reflect_displacement(cm, i, seg[c]));
    } else {
        out.push_back(detail::reflect_displacement(cm, i, q * seg[c]));
        out.push_back((1 - q) * seg[c]);
    }
    for (std::size_t k = c + 1; k < seg.size(); ++k) out.push_back(seg[k]);
    return PiecewisePath::from_displacements(path.rank(), std::move(out));
}

// Raising operator; exact inverse of f_op wherever either is defined.
// Undefined (nullopt) iff eps_i = 0.
inline std::optional<PiecewisePath> e_op(const CartanMatrix& cm, const PiecewisePath& path, int i) {
    cm.check_index(i);
    std::vector<Rational> h = path.heights(i);
    Rational m = *std::min_element(h.begin(), h.end());
    if (!is_integer(m))
        throw InvariantViolation("non-integral height minimum in e_op on " + path.to_string());
    if (m > -1) return std::nullopt;

    std::size_t t1 = 0; // first breakpoint at the minimum
    while (h[t1] != m) ++t1;

    // Last crossing of level m+1 before t1: inside segment c, leaving the
    // first fraction q of it unreflected.
    Rational level = m + 1;
    std::size_t c = t1 - 1;
    while (h[c] < level) --c;
    Rational q = (h[c] - level) / (h[c] - h[c + 1]);

    const auto& seg = path.displacements();
    std::vector<Weight> out;
    out.reserve(seg.size() + 1);
    for (std::size_t k = 0; k < c; ++k) out.push_back(seg[k]);
    if (q == 0) {
        out.push_back(detail::reflect_displacement(cm, i, seg[c]));
    } else {
        out.push_back(q * seg[c]);
        out.push_back(detail::reflect_displacement(cm, i, (1 - q) * seg[c]));
    }
    for (std::size_t k = c + 1; k < t1; ++k) out.push_back(detail::reflect_displacement(cm, i, seg[k]));
    for (std::size_t k = t1; k < seg.size(); ++k) out.push_back(seg[k]);
    return PiecewisePath::from_displacements(path.rank(), std::move(out));
}

} // namespace crystal
