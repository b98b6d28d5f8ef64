#pragma once

#include "mlcsm/rational.hpp"

#include <vector>

namespace mlcsm {

/// Dense matrix over the rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}
    RatMatrix(int rows, int cols, std::vector<Rational> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const RatMatrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    int rank = 0;
    RatMatrix rref;
    std::vector<int> pivot_cols;
};

/// Reduced row echelon form; canonical for a given row space.
RrefResult matrix_rank(const RatMatrix& m);

/// Unique solution of a square nonsingular system; throws on singular input.
std::vector<Rational> solve_square(const RatMatrix& a, const std::vector<Rational>& b);

/// Primitive integer vector spanning the 1-dimensional nullspace of `m`
/// (rows x cols with rank cols-1). Throws if the nullspace is not a line.
std::vector<Integer> nullspace_line(const RatMatrix& m);

}  // namespace mlcsm
