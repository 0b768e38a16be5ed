#pragma once

#include <stdexcept>

#include "reeskit/linalg.hpp"

namespace reeskit {

// Supporting hyperplane <normal, X> = offset with nonnegative integer normal
// and positive offset. (normal, offset) is kept jointly primitive so that the
// representation is canonical.
struct Hyperplane {
    IntVec normal;
    Int offset;

    Hyperplane(IntVec n, Int c) : normal(std::move(n)), offset(std::move(c)) {
        if (normal.empty() || is_zero(normal))
            throw std::invalid_argument("hyperplane: zero normal");
        for (const Int& h : normal)
            if (h < 0) throw std::invalid_argument("hyperplane: negative normal entry");
        if (offset < 1) throw std::invalid_argument("hyperplane: offset must be positive");
        make_primitive(normal, offset);
    }

    int dim() const { return static_cast<int>(normal.size()); }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.offset < b.offset;
    }
};

// Facet of the convex join: normal (c2*h1, c1*h2), offset c1*c2, reduced.
inline Hyperplane star(const Hyperplane& h1, const Hyperplane& h2) {
    IntVec n;
    n.reserve(h1.normal.size() + h2.normal.size());
    for (const Int& v : h1.normal) n.push_back(h2.offset * v);
    for (const Int& v : h2.normal) n.push_back(h1.offset * v);
    return Hyperplane(std::move(n), h1.offset * h2.offset);
}

}  // namespace reeskit
