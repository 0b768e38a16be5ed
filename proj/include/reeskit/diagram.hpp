#pragma once

#include <string>
#include <vector>

#include "reeskit/rational.hpp"

namespace reeskit {

enum class FamilyKind { Generic, Symmetric, Pfaffian, Hankel };

// Matrix family whose minor/Pfaffian ideals the diagrams index. gamma_dim is
// the number of canonical valuations and also the bound on diagram parts.
struct MatrixFamily {
    FamilyKind kind;
    int m = 0;  // rows, generic only
    int n = 0;

    static MatrixFamily generic(int m, int n);
    static MatrixFamily symmetric(int n);
    static MatrixFamily pfaffian(int n);
    static MatrixFamily hankel(int n);

    int gamma_dim() const;
    std::string kind_name() const;

    friend bool operator==(const MatrixFamily& a, const MatrixFamily& b) {
        return a.kind == b.kind && a.m == b.m && a.n == b.n;
    }
};

// Weakly decreasing tuple of positive parts; the empty diagram stands for the
// unit ideal.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    friend bool operator==(const Diagram& a, const Diagram& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Diagram& a, const Diagram& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

// tau contained in sigma: componentwise after padding on the right.
bool diagram_subseteq(const Diagram& tau, const Diagram& sigma);

// sum_i max(0, s_i - t + 1)
Int gamma(int t, const Diagram& sigma);

// (gamma_1(sigma), ..., gamma_d(sigma)) with d = family.gamma_dim().
IntVec gamma_vector(const MatrixFamily& family, const Diagram& sigma);

// Sum (hankel: single product) of products of determinantal/Pfaffian ideals
// indexed by an antichain of diagrams.
class DiagramIdeal {
public:
    DiagramIdeal(MatrixFamily family, std::vector<Diagram> lambda);

    const MatrixFamily& family() const { return family_; }
    const std::vector<Diagram>& lambda() const { return lambda_; }

private:
    MatrixFamily family_;
    std::vector<Diagram> lambda_;
};

// t(m - t + 1)/m, the asymptotic resurgence of the t-minor ideal of a generic
// matrix with m <= n rows.
Rational det_asymptotic_resurgence(int m, int t);

}  // namespace reeskit
