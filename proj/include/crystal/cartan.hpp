#pragma once

// Cartan data and exact weight arithmetic for the simple Lie types A-G.
//
// Labeling convention (Bourbaki).  Nodes are numbered 1..n; the Dynkin
// diagram edges per family are:
//
//   A_n (n>=1)   1-2-...-n                        all roots one length
//   B_n (n>=2)   1-2-...-(n-1)=>n                 alpha_n short
//   C_n (n>=2)   1-2-...-(n-1)<=n                 alpha_n long
//   D_n (n>=3)   1-2-...-(n-2), with both n-1 and n attached to n-2
//   E_n (n=6,7,8) chain 1-3-4-5-6[-7[-8]] with 2 attached to 4
//   F_4          1-2=>3-4                         alpha_3, alpha_4 short
//   G_2          1<=2 (triple edge)               alpha_1 short
//
// The Cartan matrix is stored with the pairing convention
//   a[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
// and the symmetrizers d_i = (alpha_i, alpha_i)/2 are positive coprime
// integers with d_i a[i][j] = d_j a[j][i].
//
// Weights are stored in fundamental coordinates: coords[i] = <alpha_i^vee, mu>,
// so coroot pairings with simple roots are plain coordinate reads.

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crystal/errors.hpp"
#include "crystal/rational.hpp"

namespace crystal {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
    Family family;
    int rank;

    CartanType(Family f, int n) : family(f), rank(n) { validate(); }

    void validate() const {
        bool ok = false;
        switch (family) {
            case Family::A: ok = rank >= 1; break;
            case Family::B: ok = rank >= 2; break;
            case Family::C: ok = rank >= 2; break;
            case Family::D: ok = rank >= 3; break;
            case Family::E: ok = rank == 6 || rank == 7 || rank == 8; break;
            case Family::F: ok = rank == 4; break;
            case Family::G: ok = rank == 2; break;
        }
        if (!ok)
            throw UsageError("invalid rank " + std::to_string(rank) + " for family " +
                             std::string(1, static_cast<char>(family)));
    }

    std::string to_string() const {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }

    // Parses strings like "G2", "E8", "A12".
    static CartanType parse(std::string_view s) {
        if (s.size() < 2)
            throw UsageError("cannot parse Cartan type '" + std::string(s) + "'");
        Family fam;
        switch (s[0]) {
            case 'A': fam = Family::A; break;
            case 'B': fam = Family::B; break;
            case 'C': fam = Family::C; break;
            case 'D': fam = Family::D; break;
            case 'E': fam = Family::E; break;
            case 'F': fam = Family::F; break;
            case 'G': fam = Family::G; break;
            default:
                throw UsageError("unknown family letter in Cartan type '" + std::string(s) + "'");
        }
        int n = 0;
        for (std::size_t k = 1; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9')
                throw UsageError("cannot parse Cartan type '" + std::string(s) + "'");
            n = n * 10 + (s[k] - '0');
            if (n > 1000)
                throw UsageError("rank too large in '" + std::string(s) + "'");
        }
        return CartanType(fam, n);
    }

    friend bool operator==(const CartanType& x, const CartanType& y) {
        return x.family == y.family && x.rank == y.rank;
    }
};

// A weight in fundamental coordinates.
struct Weight {
    std::vector<Rational> coords;

    Weight() = default;
    explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}

    static Weight zero(int rank) { return Weight(std::vector<Rational>(rank)); }

    int rank() const { return static_cast<int>(coords.size()); }

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
    }
    bool is_integral() const {
        return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return is_integer(c); });
    }
    bool is_dominant_integral() const {
        return std::all_of(coords.begin(), coords.end(),
                           [](const Rational& c) { return c >= 0 && is_integer(c); });
    }

    Weight& operator+=(const Weight& o) {
        for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords[k];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(const Weight& a) {
        Weight r = a;
        for (auto& c : r.coords) c = -c;
        return r;
    }
    friend Weight operator*(const Rational& s, Weight a) {
        for (auto& c : a.coords) c *= s;
        return a;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) {
        return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                            b.coords.begin(), b.coords.end());
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (k) s += ",";
            s += coords[k].str();
        }
        return s + ")";
    }
};

// The same weight written in the simple-root basis: mu = sum coeffs[j] * alpha_j.
struct RootCoords {
    std::vector<Rational> coeffs;

    RootCoords() = default;
    explicit RootCoords(std::vector<Rational> c) : coeffs(std::move(c)) {}

    int rank() const { return static_cast<int>(coeffs.size()); }
    bool is_integral() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return is_integer(c); });
    }

    friend bool operator==(const RootCoords& a, const RootCoords& b) { return a.coeffs == b.coeffs; }
    friend bool operator<(const RootCoords& a, const RootCoords& b) {
        return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(),
                                            b.coeffs.begin(), b.coeffs.end());
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (k) s += ",";
            s += coeffs[k].str();
        }
        return s + ")";
    }
};

class CartanMatrix {
public:
    explicit CartanMatrix(CartanType t) : type_(t), n_(t.rank) {
        build();
    }

    const CartanType& type() const { return type_; }
    int rank() const { return n_; }

    // 1-based indices throughout the public surface, matching the
    // Bourbaki node numbering.
    int entry(int i, int j) const {
        check_index(i);
        check_index(j);
        return a_[i - 1][j - 1];
    }
    int symmetrizer(int i) const {
        check_index(i);
        return d_[i - 1];
    }

    const std::vector<std::vector<int>>& entries() const { return a_; }
    const std::vector<int>& symmetrizers() const { return d_; }

    void check_index(int i) const {
        if (i < 1 || i > n_)
            throw UsageError("index " + std::to_string(i) + " out of range for " + type_.to_string());
    }

private:
    CartanType type_;
    int n_;
    std::vector<std::vector<int>> a_;
    std::vector<int> d_;

    void build() {
        a_.assign(n_, std::vector<int>(n_, 0));
        for (int i = 0; i < n_; ++i) a_[i][i] = 2;
        d_.assign(n_, 1);

        std::vector<std::pair<int, int>> edges; // 1-based node pairs
        switch (type_.family) {
            case Family::A:
                for (int i = 1; i < n_; ++i) edges.push_back({i, i + 1});
                break;
            case Family::B:
                for (int i = 1; i < n_; ++i) edges.push_back({i, i + 1});
                for (int i = 0; i < n_ - 1; ++i) d_[i] = 2;
                d_[n_ - 1] = 1;
                break;
            case Family::C:
                for (int i = 1; i < n_; ++i) edges.push_back({i, i + 1});
                d_[n_ - 1] = 2;
                break;
            case Family::D:
                for (int i = 1; i <= n_ - 2; ++i) edges.push_back({i, i + 1});
                edges.push_back({n_ - 2, n_});
                break;
            case Family::E:
                edges.push_back({1, 3});
                edges.push_back({3, 4});
                edges.push_back({2, 4});
                for (int i = 4; i < n_; ++i) edges.push_back({i, i + 1});
                break;
            case Family::F:
                edges = {{1, 2}, {2, 3}, {3, 4}};
                d_ = {2, 2, 1, 1};
                break;
            case Family::G:
                edges = {{1, 2}};
                d_ = {1, 3};
                break;
        }

        // For adjacent nodes, <alpha_i^vee, alpha_j> = -1 when alpha_i is at
        // least as long as alpha_j, and -d_j/d_i otherwise.
        for (auto [i, j] : edges) {
            a_[i - 1][j - 1] = d_[i - 1] >= d_[j - 1] ? -1 : -(d_[j - 1] / d_[i - 1]);
            a_[j - 1][i - 1] = d_[j - 1] >= d_[i - 1] ? -1 : -(d_[i - 1] / d_[j - 1]);
        }
    }
};

inline CartanMatrix cartan_matrix(CartanType t) { return CartanMatrix(t); }

inline Weight fundamental_weight(const CartanMatrix& cm, int i) {
    cm.check_index(i);
    Weight w = Weight::zero(cm.rank());
    w.coords[i - 1] = 1;
    return w;
}

// alpha_j in fundamental coordinates is the j-th column of the Cartan matrix.
inline Weight simple_root(const CartanMatrix& cm, int j) {
    cm.check_index(j);
    Weight w = Weight::zero(cm.rank());
    for (int i = 1; i <= cm.rank(); ++i) w.coords[i - 1] = cm.entry(i, j);
    return w;
}

inline Weight rho(const CartanMatrix& cm) {
    return Weight(std::vector<Rational>(cm.rank(), 1));
}

// Exact solve of A * coeffs = mu.coords by Gauss-Jordan elimination.
inline RootCoords to_root_coords(const CartanMatrix& cm, const Weight& mu) {
    int n = cm.rank();
    if (mu.rank() != n)
        throw UsageError("weight rank " + std::to_string(mu.rank()) + " does not match " +
                         cm.type().to_string());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = cm.entries()[i][j];
        m[i][n] = mu.coords[i];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0)
            throw InvariantViolation("singular Cartan matrix for " + cm.type().to_string());
        std::swap(m[col], m[pivot]);
        Rational p = m[col][col];
        for (int j = col; j <= n; ++j) m[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<Rational> coeffs(n);
    for (int i = 0; i < n; ++i) coeffs[i] = m[i][n];
    return RootCoords(std::move(coeffs));
}

inline Weight from_root_coords(const CartanMatrix& cm, const RootCoords& rc) {
    int n = cm.rank();
    if (rc.rank() != n)
        throw UsageError("root coords rank does not match " + cm.type().to_string());
    Weight w = Weight::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.coords[i] += Rational(cm.entries()[i][j]) * rc.coeffs[j];
    return w;
}

// Symmetrized invariant form (mu, nu), normalized so d_i = (alpha_i, alpha_i)/2.
// Uses (mu, nu) = sum_i rootcoords(mu)[i] * d_i * nu.coords[i].
inline Rational symmetric_form(const CartanMatrix& cm, const Weight& mu, const Weight& nu) {
    RootCoords rc = to_root_coords(cm, mu);
    Rational s = 0;
    for (int i = 0; i < cm.rank(); ++i)
        s += rc.coeffs[i] * cm.symmetrizers()[i] * nu.coords[i];
    return s;
}

// Classification of mu against 0 in the root partial order, read off the
// signs of its simple-root coordinates.
enum class WeightSign { Zero, Positive, Negative, Incomparable };

inline WeightSign weight_sign(const CartanMatrix& cm, const Weight& mu) {
    RootCoords rc = to_root_coords(cm, mu);
    bool has_pos = false, has_neg = false;
    for (const Rational& c : rc.coeffs) {
        if (c > 0) has_pos = true;
        if (c < 0) has_neg = true;
    }
    if (!has_pos && !has_neg) return WeightSign::Zero;
    if (has_pos && has_neg) return WeightSign::Incomparable;
    return has_pos ? WeightSign::Positive : WeightSign::Negative;
}

inline const char* to_string(WeightSign s) {
    switch (s) {
        case WeightSign::Zero: return "zero";
        case WeightSign::Positive: return "positive";
        case WeightSign::Negative: return "negative";
        case WeightSign::Incomparable: return "incomparable";
    }
    return "?";
}

inline Weight simple_reflection(const CartanMatrix& cm, int i, const Weight& mu) {
    Rational c = mu.coords[i - 1];
    Weight r = mu;
    for (int k = 1; k <= cm.rank(); ++k)
        r.coords[k - 1] -= c * cm.entry(k, i);
    return r;
}

// Closure of {mu} under all simple reflections.  Returned sorted
// lexicographically descending so the result is a deterministic set.
inline std::vector<Weight> weyl_orbit(const CartanMatrix& cm, const Weight& mu,
                                      std::size_t cap = 1u << 22) {
    if (mu.rank() != cm.rank())
        throw UsageError("weight rank does not match " + cm.type().to_string());
    if (!mu.is_integral())
        throw UsageError("weyl_orbit requires an integral weight, got " + mu.to_string());
    std::set<std::vector<Rational>> seen;
    std::vector<Weight> queue{mu};
    seen.insert(mu.coords);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Weight w = queue[head];
        for (int i = 1; i <= cm.rank(); ++i) {
            Weight r = simple_reflection(cm, i, w);
            if (seen.insert(r.coords).second) {
                if (seen.size() > cap)
                    throw NodeCapError("weyl_orbit exceeded cap of " + std::to_string(cap));
                queue.push_back(std::move(r));
            }
        }
    }
    std::sort(queue.begin(), queue.end(), [](const Weight& a, const Weight& b) { return b < a; });
    return queue;
}

struct RootSystemData {
    std::vector<RootCoords> positive_roots; // integer simple-root coordinates
    Weight half_sum;                        // rho = sum of fundamental weights
};

// All positive roots, built by reflection closure from the simple roots.
inline RootSystemData positive_roots(const CartanMatrix& cm) {
    int n = cm.rank();
    std::set<std::vector<Rational>> seen;
    std::vector<std::vector<Rational>> queue;
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> c(n);
        c[j] = 1;
        seen.insert(c);
        queue.push_back(std::move(c));
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<Rational> c = queue[head];
        // <alpha_i^vee, beta> = (A c)_i; the reflection subtracts it from c_i.
        for (int i = 0; i < n; ++i) {
            Rational pairing = 0;
            for (int j = 0; j < n; ++j) pairing += Rational(cm.entries()[i][j]) * c[j];
            std::vector<Rational> r = c;
            r[i] -= pairing;
            if (seen.insert(r).second) queue.push_back(std::move(r));
        }
    }
    RootSystemData data;
    for (const auto& c : queue) {
        bool nonneg = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; });
        if (nonneg) data.positive_roots.push_back(RootCoords(c));
    }
    std::sort(data.positive_roots.begin(), data.positive_roots.end());
    data.half_sum = rho(cm);
    return data;
}

// (beta, beta)/2 for a root given in simple-root coordinates.
inline Rational root_half_square(const CartanMatrix& cm, const RootCoords& beta) {
    Rational s = 0;
    for (int j = 0; j < cm.rank(); ++j)
        for (int k = 0; k < cm.rank(); ++k)
            s += beta.coeffs[j] * beta.coeffs[k] * cm.symmetrizers()[j] * cm.entries()[j][k];
    return s / 2;
}

// <mu, beta^vee> = sum_j c_j d_j mu_j / d_beta.
inline Rational coroot_pairing(const CartanMatrix& cm, const Weight& mu, const RootCoords& beta) {
    Rational num = 0;
    for (int j = 0; j < cm.rank(); ++j)
        num += beta.coeffs[j] * cm.symmetrizers()[j] * mu.coords[j];
    return num / root_half_square(cm, beta);
}

// Weyl dimension formula, evaluated exactly.
inline Integer weyl_dim(const CartanMatrix& cm, const Weight& lambda) {
    if (lambda.rank() != cm.rank())
        throw UsageError("weight rank does not match " + cm.type().to_string());
    if (!lambda.is_dominant_integral())
        throw UsageError("weyl_dim requires a dominant integral weight, got " + lambda.to_string());
    RootSystemData rs = positive_roots(cm);
    Weight lr = lambda + rs.half_sum;
    Rational dim = 1;
    for (const RootCoords& beta : rs.positive_roots) {
        // d_beta cancels between numerator and denominator.
        Rational num = 0, den = 0;
        for (int j = 0; j < cm.rank(); ++j) {
            num += beta.coeffs[j] * cm.symmetrizers()[j] * lr.coords[j];
            den += beta.coeffs[j] * cm.symmetrizers()[j] * rs.half_sum.coords[j];
        }
        dim *= num / den;
    }
    if (!is_integer(dim) || dim <= 0)
        throw InvariantViolation("weyl_dim produced non-integer " + dim.str() + " for " +
                                 lambda.to_string());
    return to_integer(dim);
}

} // namespace crystal
