#ifndef HOMC_MATRIX_HPP
#define HOMC_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "homc/errors.hpp"

namespace homc {

/// Dense row-major matrix of doubles. Multiplication accumulates in
/// ascending index order so results are bit-identical across runs.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), values_(static_cast<std::size_t>(rows * cols), 0.0) {}
    Matrix(std::int64_t rows, std::int64_t cols, std::vector<double> values);

    static Matrix identity(std::int64_t n);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    double& at(std::int64_t r, std::int64_t c) { return values_[static_cast<std::size_t>(r * cols_ + c)]; }
    double at(std::int64_t r, std::int64_t c) const { return values_[static_cast<std::size_t>(r * cols_ + c)]; }

    const std::vector<double>& values() const { return values_; }

    Matrix multiply(const Matrix& rhs) const;
    std::vector<double> multiply(const std::vector<double>& v) const;

    /// max |a - b| over entries; shapes must match.
    double max_abs_diff(const Matrix& other) const;
    double max_entry() const;
    double min_entry() const;

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && values_ == other.values_;
    }

private:
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<double> values_;
};

/// The mode-1 matricization of a tensor: an n x n^{m-1} matrix whose
/// column c is the mode-1 fiber at the multi-index with linear position c.
using Matricization = Matrix;

}  // namespace homc

#endif  // HOMC_MATRIX_HPP
