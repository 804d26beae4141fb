#include "homc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace homc {

Matrix::Matrix(std::int64_t rows, std::int64_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != rows_ * cols_) {
        throw ShapeError("matrix value count " + std::to_string(values_.size()) + " does not match " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

Matrix Matrix::identity(std::int64_t n) {
    Matrix m(n, n);
    for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw ShapeError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " by " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
    Matrix out(rows_, rhs.cols_);
    for (std::int64_t i = 0; i < rows_; ++i) {
        for (std::int64_t k = 0; k < cols_; ++k) {
            const double a = at(i, k);
            if (a == 0.0) continue;
            for (std::int64_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

std::vector<double> Matrix::multiply(const std::vector<double>& v) const {
    if (static_cast<std::int64_t>(v.size()) != cols_) {
        throw ShapeError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " by vector of length " + std::to_string(v.size()));
    }
    std::vector<double> out(static_cast<std::size_t>(rows_), 0.0);
    for (std::int64_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::int64_t k = 0; k < cols_; ++k) s += at(i, k) * v[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

double Matrix::max_abs_diff(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw ShapeError("shape mismatch in matrix comparison");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        d = std::max(d, std::abs(values_[i] - other.values_[i]));
    }
    return d;
}

double Matrix::max_entry() const {
    return *std::max_element(values_.begin(), values_.end());
}

double Matrix::min_entry() const {
    return *std::min_element(values_.begin(), values_.end());
}

}  // namespace homc
