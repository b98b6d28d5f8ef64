#include "mlcsm/matrix.hpp"

#include <stdexcept>

namespace mlcsm {

RatMatrix::RatMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match rows x cols");
}

RrefResult matrix_rank(const RatMatrix& m) {
    RrefResult res;
    res.rref = m;
    RatMatrix& a = res.rref;
    int pivot_row = 0;
    for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        int sel = -1;
        for (int i = pivot_row; i < a.rows(); ++i) {
            if (a.at(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        for (int j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
        Rational inv = a.at(pivot_row, col);
        for (int j = col; j < a.cols(); ++j) a.at(pivot_row, j) /= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (int j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(pivot_row, j);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

std::vector<Rational> solve_square(const RatMatrix& a, const std::vector<Rational>& b) {
    int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_square needs a square system");
    RatMatrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    RrefResult r = matrix_rank(aug);
    if (r.rank != n || r.pivot_cols.back() == n)
        throw std::invalid_argument("singular system");
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = r.rref.at(i, n);
    return x;
}

std::vector<Integer> nullspace_line(const RatMatrix& m) {
    RrefResult r = matrix_rank(m);
    int n = m.cols();
    if (r.rank != n - 1)
        throw std::invalid_argument("nullspace is not one-dimensional");
    // The single free column parameterizes the kernel.
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rational> v(n);
    v[free_col] = 1;
    for (int i = 0; i < r.rank; ++i)
        v[r.pivot_cols[i]] = -r.rref.at(i, free_col);
    Integer lcm_den = 1;
    for (const Rational& q : v) lcm_den = lcm(lcm_den, denominator(q));
    std::vector<Integer> out(n);
    Integer content = 0;
    for (int i = 0; i < n; ++i) {
        out[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        content = gcd(content, out[i]);
    }
    for (Integer& x : out) x /= content;
    return out;
}

}  // namespace mlcsm
