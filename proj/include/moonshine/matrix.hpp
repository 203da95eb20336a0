#pragma once

// Dense integer matrices and symmetric Gram matrices over ExactInt.

#include "moonshine/qseries.hpp"

#include <gmpxx.h>
#include "json.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace moonshine {

using ExactRational = mpq_class;

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool isSquare() const noexcept { return rows_ == cols_; }

    ExactInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const ExactInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<ExactInt> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const ExactInt> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    IntMatrix transposed() const;

    void swapRows(std::size_t a, std::size_t b);
    /// row[target] += factor * row[source]
    void addRowMultiple(std::size_t target, std::size_t source, const ExactInt& factor);
    void negateRow(std::size_t i);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ExactInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by Bareiss fraction-free elimination.
ExactInt determinant(const IntMatrix& m);

/// Exact inverse of a matrix with determinant +1 or -1; nullopt otherwise.
std::optional<IntMatrix> inverseUnimodular(const IntMatrix& m);

/// Solve x * m = target for a row vector x over Q (m square, nonsingular).
std::optional<std::vector<ExactRational>> solveLeft(const IntMatrix& m, std::span<const ExactInt> target);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

/// Symmetric bilinear form on Z^n. Construction rejects non-symmetric input.
class GramMatrix {
  public:
    GramMatrix() = default;
    explicit GramMatrix(IntMatrix entries);
    GramMatrix(std::initializer_list<std::initializer_list<long>> rows) : GramMatrix(IntMatrix(rows)) {}

    std::size_t dim() const noexcept { return entries_.rows(); }
    const IntMatrix& entries() const noexcept { return entries_; }
    const ExactInt& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    bool isEven() const;
    ExactInt determinant() const { return moonshine::determinant(entries_); }

    /// Signature via exact congruent diagonalization over Q.
    Inertia inertia() const;
    bool isPositiveDefinite() const;

    /// x^T G x for an integer coordinate vector.
    ExactInt norm(std::span<const ExactInt> x) const;

    /// T G T^T: the Gram matrix of the basis whose rows are T in current coordinates.
    GramMatrix transformed(const IntMatrix& t) const;

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

  private:
    IntMatrix entries_;
};

/// {"dim": "n", "entries": [["a", ...], ...]} with decimal-string integers.
nlohmann::json toJson(const GramMatrix& g);
GramMatrix gramFromJson(const nlohmann::json& j);

/// Floor and ceiling of a rational.
ExactInt floorOf(const ExactRational& q);
ExactInt ceilOf(const ExactRational& q);

}  // namespace moonshine
