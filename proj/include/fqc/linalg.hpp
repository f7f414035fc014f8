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

#ifndef FQC_LINALG_HPP
#define FQC_LINALG_HPP

#include <optional>
#include <vector>

#include "fqc/gf.hpp"

namespace fqc {

// Dense row-major matrix over F_q.
class FqMatrix {
public:
    FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Field::zero()) {}

    static FqMatrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field_ptr() const noexcept { return field_; }
    const Field& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FqElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FqElem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    FqMatrix transposed() const;
    void append_row(const std::vector<FqElem>& row);

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FqElem> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(FqMatrix& m);

std::size_t rank(const FqMatrix& m);
std::size_t nullity(const FqMatrix& m);

// Some x with Mx = b, or nothing if the system is inconsistent.
std::optional<std::vector<FqElem>> solve(const FqMatrix& m, const std::vector<FqElem>& b);

std::vector<FqElem> multiply(const FqMatrix& m, const std::vector<FqElem>& x);

} // namespace fqc

#endif
