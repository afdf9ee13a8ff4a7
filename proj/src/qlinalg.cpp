#include "frechet/qlinalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace frechet {

namespace {

// Row echelon reduction in place; returns the pivot columns.
std::vector<std::size_t> echelonize(QMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(QMatrix m) {
    return echelonize(m).size();
}

std::optional<QVector> solve_square(QMatrix a, QVector b) {
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (a[r].size() != n) throw Error("solve_square: matrix not square");
        a[r].push_back(b[r]);
    }
    auto pivots = echelonize(a);
    if (pivots.size() != n) return std::nullopt;
    QVector x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = a[r][n];
    return x;
}

std::vector<QVector> nullspace(QMatrix a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    auto pivots = echelonize(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVector v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -a[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BigInt> scale_to_integers(const QVector& v) {
    BigInt lcm_den = 1;
    for (const auto& r : v) {
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(r));
    }
    std::vector<BigInt> out;
    out.reserve(v.size());
    BigInt g = 0;
    for (const auto& r : v) {
        BigInt n = numerator(r) * (lcm_den / denominator(r));
        g = boost::multiprecision::gcd(g, n);
        out.push_back(std::move(n));
    }
    if (g > 1) {
        for (auto& n : out) n /= g;
    }
    return out;
}

}  // namespace frechet
