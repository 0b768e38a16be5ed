#include "reeskit/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace reeskit {

namespace {

bool is_unit_vector(const IntVec& v, std::size_t pos) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == pos ? v[i] != 1 : v[i] != 0) return false;
    }
    return true;
}

}  // namespace

AffineSemigroup::AffineSemigroup(int rank, std::vector<IntVec> generators)
    : rank_(rank), generators_(std::move(generators)) {
    if (rank < 1) throw std::invalid_argument("semigroup: rank must be positive");
    if (generators_.empty()) throw std::invalid_argument("semigroup: no generators");
    for (const IntVec& g : generators_) {
        if (static_cast<int>(g.size()) != rank)
            throw std::invalid_argument("semigroup: generator dimension mismatch");
        if (is_zero(g)) throw std::invalid_argument("semigroup: zero generator");
        for (const Int& v : g)
            if (v < 0) nonneg_ = false;
    }
    std::sort(generators_.begin(), generators_.end(), lex_less);
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());

    if (rank_of_int_rows(generators_) != rank)
        throw std::invalid_argument("semigroup: cone not full-dimensional");

    // Facet normals of the cone = extreme rays of {f : <g, f> >= 0 for all g}.
    std::vector<IntVec> rays = dual_cone_extreme_rays(generators_);
    if (rank_of_int_rows(rays) != rank)
        throw std::invalid_argument("semigroup: cone not strongly convex");
    std::sort(rays.begin(), rays.end(), lex_less);
    for (IntVec& r : rays) valuations_.push_back(ConeValuation{std::move(r)});

    if (static_cast<int>(generators_.size()) == rank) {
        // Generators are lex-sorted, so the unit vectors appear in reverse.
        standard_orthant_ = true;
        for (std::size_t i = 0; i < generators_.size(); ++i)
            if (!is_unit_vector(generators_[i], generators_.size() - 1 - i))
                standard_orthant_ = false;
    }
}

AffineSemigroup AffineSemigroup::orthant(int rank) {
    if (rank < 1) throw std::invalid_argument("semigroup: rank must be positive");
    std::vector<IntVec> gens;
    for (int i = 0; i < rank; ++i) {
        IntVec e(static_cast<std::size_t>(rank), Int(0));
        e[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(e));
    }
    return AffineSemigroup(rank, std::move(gens));
}

IntVec AffineSemigroup::value_vector(const IntVec& n) const {
    IntVec out;
    out.reserve(valuations_.size());
    for (const ConeValuation& v : valuations_) out.push_back(dot(v.normal, n));
    return out;
}

std::vector<ConeValuation> cone_facet_valuations(const AffineSemigroup& S) {
    return S.cone_valuations();
}

namespace {

bool in_cone(const AffineSemigroup& S, const IntVec& n) {
    for (const ConeValuation& v : S.cone_valuations())
        if (dot(v.normal, n) < 0) return false;
    return true;
}

bool combination_search(const AffineSemigroup& S, IntVec rem, std::size_t start) {
    if (is_zero(rem)) return true;
    const auto& gens = S.generators();
    for (std::size_t i = start; i < gens.size(); ++i) {
        IntVec next = vec_sub(rem, gens[i]);
        if (!in_cone(S, next)) continue;
        if (combination_search(S, std::move(next), i)) return true;
    }
    return false;
}

}  // namespace

bool membership_in_semigroup(const AffineSemigroup& S, const IntVec& n) {
    if (static_cast<int>(n.size()) != S.rank())
        throw std::invalid_argument("semigroup membership: dimension mismatch");
    if (S.is_standard_orthant())
        return std::all_of(n.begin(), n.end(), [](const Int& v) { return v >= 0; });
    if (!in_cone(S, n)) return false;
    return combination_search(S, n, 0);
}

MonomialIdeal::MonomialIdeal(AffineSemigroup semigroup, std::vector<IntVec> exponents)
    : semigroup_(std::move(semigroup)), exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw std::invalid_argument("monomial ideal: no exponents");
    for (const IntVec& a : exponents_) {
        if (static_cast<int>(a.size()) != semigroup_.rank())
            throw std::invalid_argument("monomial ideal: exponent dimension mismatch");
        if (!membership_in_semigroup(semigroup_, a))
            throw std::invalid_argument("monomial ideal: exponent not in the semigroup");
    }
    std::sort(exponents_.begin(), exponents_.end(), lex_less);
    exponents_.erase(std::unique(exponents_.begin(), exponents_.end()), exponents_.end());
    // Minimize under S-divisibility: drop b when some other a has b - a in S.
    for (std::size_t i = 0; i < exponents_.size();) {
        bool redundant = false;
        for (std::size_t j = 0; j < exponents_.size() && !redundant; ++j) {
            if (j == i) continue;
            if (membership_in_semigroup(semigroup_, vec_sub(exponents_[i], exponents_[j])))
                redundant = true;
        }
        if (redundant)
            exponents_.erase(exponents_.begin() + static_cast<long>(i));
        else
            ++i;
    }
}

}  // namespace reeskit
