#ifndef PRMFORGE_LINALG_HPP
#define PRMFORGE_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "prmforge/gf.hpp"

namespace prmforge {

/// Dense row-major matrix of encoded field elements.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static Matrix from_rows(const std::vector<std::vector<Element>>& rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Element> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Element> values);

    std::vector<std::vector<Element>> to_rows() const;

    bool operator==(const Matrix&) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

struct EchelonForm {
    Matrix reduced;               // nonzero rows only, fully reduced
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form over GF(q) by Gauss-Jordan elimination.
EchelonForm rref(const Field& field, Matrix m);

std::size_t matrix_rank(const Field& field, const Matrix& m);

/// dst += scale * src, elementwise.
void axpy(const Field& field, Element scale, std::span<const Element> src, std::span<Element> dst) noexcept;

/// Incrementally maintained reduced basis, for span-membership tests while
/// vectors are added one at a time.
class IncrementalBasis {
   public:
    IncrementalBasis(const Field& field, std::size_t dim) : field_(field), dim_(dim) {}

    /// Reduces v against the basis; returns true if v lies in the span.
    bool in_span(std::span<const Element> v) const;
    /// Adds v if independent; returns false (and leaves the basis unchanged)
    /// when v is already in the span.
    bool insert(std::span<const Element> v);
    void pop();
    std::size_t size() const noexcept { return pivots_.size(); }

   private:
    std::vector<Element> reduce(std::span<const Element> v) const;

    Field field_;
    std::size_t dim_;
    std::vector<std::vector<Element>> rows_;  // each row normalized at its pivot
    std::vector<std::size_t> pivots_;
};

}  // namespace prmforge

#endif
