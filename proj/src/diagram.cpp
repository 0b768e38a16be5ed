#include "reeskit/diagram.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace reeskit {

MatrixFamily MatrixFamily::generic(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("family: sizes must be positive");
    if (m > n) throw std::invalid_argument("family: generic requires m <= n");
    return MatrixFamily{FamilyKind::Generic, m, n};
}

MatrixFamily MatrixFamily::symmetric(int n) {
    if (n < 1) throw std::invalid_argument("family: sizes must be positive");
    return MatrixFamily{FamilyKind::Symmetric, 0, n};
}

MatrixFamily MatrixFamily::pfaffian(int n) {
    if (n < 2) throw std::invalid_argument("family: pfaffian requires n >= 2");
    return MatrixFamily{FamilyKind::Pfaffian, 0, n};
}

MatrixFamily MatrixFamily::hankel(int n) {
    if (n < 1) throw std::invalid_argument("family: sizes must be positive");
    return MatrixFamily{FamilyKind::Hankel, 0, n};
}

int MatrixFamily::gamma_dim() const {
    switch (kind) {
        case FamilyKind::Generic: return m;
        case FamilyKind::Symmetric: return n;
        case FamilyKind::Pfaffian: return n / 2;
        case FamilyKind::Hankel: return (n + 1) / 2;
    }
    return 0;
}

std::string MatrixFamily::kind_name() const {
    switch (kind) {
        case FamilyKind::Generic: return "generic";
        case FamilyKind::Symmetric: return "symmetric";
        case FamilyKind::Pfaffian: return "pfaffian";
        case FamilyKind::Hankel: return "hankel";
    }
    return "";
}

Diagram::Diagram(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int s : parts_)
        if (s < 1) throw std::invalid_argument("diagram: parts must be positive");
}

bool diagram_subseteq(const Diagram& tau, const Diagram& sigma) {
    const auto& t = tau.parts();
    const auto& s = sigma.parts();
    if (t.size() > s.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] > s[i]) return false;
    return true;
}

Int gamma(int t, const Diagram& sigma) {
    if (t < 1) throw std::invalid_argument("gamma: index must be positive");
    Int total = 0;
    for (int s : sigma.parts())
        if (s - t + 1 > 0) total += s - t + 1;
    return total;
}

IntVec gamma_vector(const MatrixFamily& family, const Diagram& sigma) {
    const int d = family.gamma_dim();
    IntVec v(static_cast<std::size_t>(d));
    for (int t = 1; t <= d; ++t) v[static_cast<std::size_t>(t - 1)] = gamma(t, sigma);
    return v;
}

DiagramIdeal::DiagramIdeal(MatrixFamily family, std::vector<Diagram> lambda)
    : family_(family), lambda_(std::move(lambda)) {
    if (lambda_.empty()) throw std::invalid_argument("diagram ideal: empty diagram set");
    const int bound = family_.gamma_dim();
    for (const Diagram& sigma : lambda_) {
        if (sigma.max_part() > bound)
            throw std::invalid_argument("diagram ideal: part exceeds the family bound of " +
                                        std::to_string(bound));
    }
    if (family_.kind == FamilyKind::Hankel && lambda_.size() != 1)
        throw std::invalid_argument(
            "diagram ideal: hankel supports a single product, not a sum; pass exactly one "
            "diagram");
    std::sort(lambda_.begin(), lambda_.end());
    lambda_.erase(std::unique(lambda_.begin(), lambda_.end()), lambda_.end());
    // In a sum of products, sigma containing tau makes the sigma term redundant.
    for (std::size_t i = 0; i < lambda_.size();) {
        bool redundant = false;
        for (std::size_t j = 0; j < lambda_.size() && !redundant; ++j) {
            if (j != i && diagram_subseteq(lambda_[j], lambda_[i])) redundant = true;
        }
        if (redundant)
            lambda_.erase(lambda_.begin() + static_cast<long>(i));
        else
            ++i;
    }
}

Rational det_asymptotic_resurgence(int m, int t) {
    if (m < 1 || t < 1 || t > m)
        throw std::invalid_argument("resurgence: requires 1 <= t <= m");
    return Rational(Int(t) * Int(m - t + 1), Int(m));
}

}  // namespace reeskit
