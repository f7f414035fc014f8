/*
   Copyright 2026 The fqcurves Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fqc/linalg.hpp"

#include <utility>

namespace fqc {

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) {
    FqMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Field::one();
    return m;
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

void FqMatrix::append_row(const std::vector<FqElem>& row) {
    if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "row length differs from column count");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> row_reduce(FqMatrix& m) {
    const Field& F = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        const FqElem inv = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const FqElem f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const FqMatrix& m) {
    FqMatrix copy = m;
    return row_reduce(copy).size();
}

std::size_t nullity(const FqMatrix& m) { return m.cols() - rank(m); }

std::optional<std::vector<FqElem>> solve(const FqMatrix& m, const std::vector<FqElem>& b) {
    if (b.size() != m.rows()) throw Error(Errc::DimensionMismatch, "right-hand side length differs from row count");
    FqMatrix aug(m.field_ptr(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<FqElem> x(m.cols(), Field::zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

std::vector<FqElem> multiply(const FqMatrix& m, const std::vector<FqElem>& x) {
    if (x.size() != m.cols()) throw Error(Errc::DimensionMismatch, "vector length differs from column count");
    const Field& F = m.field();
    std::vector<FqElem> out(m.rows(), Field::zero());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] = F.add(out[r], F.mul(m.at(r, c), x[c]));
    return out;
}

} // namespace fqc
