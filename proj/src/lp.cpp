#include "reeskit/lp.hpp"

#include <cstddef>

namespace reeskit {

std::optional<RatVec> lp_feasible_point(std::vector<RatVec> A, RatVec b) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    if (m == 0) return RatVec(n, Rational(0));

    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }
    }

    // Tableau over columns [original | artificial | rhs]; artificial basis.
    const std::size_t cols = n + m + 1;
    std::vector<RatVec> T(m, RatVec(cols, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][cols - 1] = b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced-cost row for minimizing the sum of artificials.
    RatVec cost(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < cols; ++j) cost[j] -= T[i][j];
    for (std::size_t i = 0; i < m; ++i) cost[n + i] = 0;

    for (;;) {
        // Bland: entering column = smallest index with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][cols - 1] / T[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) break;  // unbounded cannot occur in phase one, defensive exit

        Rational piv = T[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) T[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (std::size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    Rational artificial_sum = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) artificial_sum += T[i][cols - 1];
    if (artificial_sum != 0) return std::nullopt;

    RatVec x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = T[i][cols - 1];
    return x;
}

}  // namespace reeskit
