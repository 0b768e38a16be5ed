#pragma once

#include <algorithm>
#include <cstddef>

#include "reeskit/rational.hpp"

namespace reeskit {

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational dot(const IntVec& a, const RatVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline bool componentwise_leq(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Int gcd_of(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

// Divides a vector (and an attached scalar) by their joint gcd.
inline void make_primitive(IntVec& v) {
    Int g = gcd_of(v);
    if (g > 1)
        for (Int& x : v) x /= g;
}

inline void make_primitive(IntVec& v, Int& c) {
    Int g = int_gcd(gcd_of(v), c);
    if (g > 1) {
        for (Int& x : v) x /= g;
        c /= g;
    }
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline RatVec to_rat_vec(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

// Rank of a set of rational row vectors, by Gaussian elimination.
inline int rank_of(std::vector<RatVec> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows.size() && col < cols; ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline int rank_of_int_rows(const std::vector<IntVec>& rows) {
    std::vector<RatVec> q;
    q.reserve(rows.size());
    for (const auto& r : rows) q.push_back(to_rat_vec(r));
    return rank_of(std::move(q));
}

// Solves the square system M x = rhs exactly; false when M is singular.
inline bool solve_square(std::vector<RatVec> M, RatVec rhs, RatVec& out) {
    std::size_t n = M.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && M[pivot][c] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(M[c], M[pivot]);
        std::swap(rhs[c], rhs[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0) continue;
            Rational f = M[i][c] / M[c][c];
            for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    out.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / M[i][i];
    return true;
}

}  // namespace reeskit
