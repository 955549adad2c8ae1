#include "prmforge/linalg.hpp"

#include <algorithm>
#include <utility>

#include "prmforge/error.hpp"

namespace prmforge {

Matrix Matrix::from_rows(const std::vector<std::vector<Element>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void Matrix::append_row(std::span<const Element> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw DimensionMismatch("row length does not match matrix");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

std::vector<std::vector<Element>> Matrix::to_rows() const {
    std::vector<std::vector<Element>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

void axpy(const Field& field, Element scale, std::span<const Element> src, std::span<Element> dst) noexcept {
    if (scale == 0) return;
    if (scale == 1) {
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = field.add(dst[i], src[i]);
        return;
    }
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = field.add(dst[i], field.mul(scale, src[i]));
}

EchelonForm rref(const Field& field, Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t sel = lead;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != lead) {
            auto a = m.row(sel);
            auto b = m.row(lead);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const Element inv = field.inv(m(lead, c));
        for (auto& x : m.row(lead)) x = field.mul(x, inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c) == 0) continue;
            axpy(field, field.neg(m(r, c)), m.row(lead), m.row(r));
        }
        pivots.push_back(c);
        ++lead;
    }
    Matrix reduced(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::copy(m.row(r).begin(), m.row(r).end(), reduced.row(r).begin());
    }
    return {std::move(reduced), std::move(pivots)};
}

std::size_t matrix_rank(const Field& field, const Matrix& m) { return rref(field, m).pivots.size(); }

std::vector<Element> IncrementalBasis::reduce(std::span<const Element> v) const {
    if (v.size() != dim_) throw DimensionMismatch("vector length does not match basis dimension");
    std::vector<Element> w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Element c = w[pivots_[i]];
        if (c != 0) axpy(field_, field_.neg(c), rows_[i], w);
    }
    return w;
}

bool IncrementalBasis::in_span(std::span<const Element> v) const {
    const auto w = reduce(v);
    for (Element x : w) {
        if (x != 0) return false;
    }
    return true;
}

bool IncrementalBasis::insert(std::span<const Element> v) {
    auto w = reduce(v);
    std::size_t piv = 0;
    while (piv < dim_ && w[piv] == 0) ++piv;
    if (piv == dim_) return false;
    const Element inv = field_.inv(w[piv]);
    for (auto& x : w) x = field_.mul(x, inv);
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
}

void IncrementalBasis::pop() {
    rows_.pop_back();
    pivots_.pop_back();
}

}  // namespace prmforge
