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

#include "fqc/scan.hpp"

#include <limits>

namespace fqc::scan {

NormalizedSpace::NormalizedSpace(std::uint32_t q, std::size_t length) : q_(q), length_(length), size_(0) {
    if (q < 2 || length == 0) throw Error(Errc::InvalidArgument, "coefficient space needs q >= 2 and length >= 1");
    block_start_.assign(length, 0);
    std::uint64_t block = 1; // q^{length-1-j}
    for (std::size_t j = length; j-- > 0;) {
        block_start_[j] = size_;
        if (size_ > std::numeric_limits<std::uint64_t>::max() - block)
            throw Error(Errc::BudgetExceeded, "coefficient space does not fit in 64 bits");
        size_ += block;
        if (j > 0) {
            if (block > std::numeric_limits<std::uint64_t>::max() / q)
                throw Error(Errc::BudgetExceeded, "coefficient space does not fit in 64 bits");
            block *= q;
        }
    }
}

void NormalizedSpace::decode(std::uint64_t rank, std::span<std::uint32_t> digits) const {
    if (rank >= size_) throw Error(Errc::InvalidArgument, "rank out of range");
    std::size_t pivot = 0;
    while (block_start_[pivot] > rank) ++pivot;
    std::uint64_t offset = rank - block_start_[pivot];
    std::fill(digits.begin(), digits.end(), 0u);
    digits[pivot] = 1;
    for (std::size_t i = length_; i-- > pivot + 1;) {
        digits[i] = std::uint32_t(offset % q_);
        offset /= q_;
    }
}

std::uint64_t NormalizedSpace::encode(std::span<const std::uint32_t> digits) const {
    std::size_t pivot = 0;
    while (pivot < length_ && digits[pivot] == 0) ++pivot;
    if (pivot == length_ || digits[pivot] != 1)
        throw Error(Errc::InvalidArgument, "vector is not normalized");
    std::uint64_t offset = 0;
    for (std::size_t i = pivot + 1; i < length_; ++i) offset = offset * q_ + digits[i];
    return block_start_[pivot] + offset;
}

EvalTable make_eval_table(const PointSet& points, const std::vector<Monomial>& basis) {
    EvalTable t;
    t.field = points.field_ptr();
    t.points = points.size();
    t.monomials = basis.size();
    t.values.resize(t.points * t.monomials);
    const Field& F = *t.field;
    for (std::size_t p = 0; p < t.points; ++p) {
        const auto& c = points.points()[p].coords;
        for (std::size_t j = 0; j < t.monomials; ++j) {
            FqElem v = Field::one();
            for (std::size_t i = 0; i < c.size(); ++i) v = F.mul(v, F.pow(c[i], basis[j].exps[i]));
            t.values[p * t.monomials + j] = v;
        }
    }
    return t;
}

DeltaTable::DeltaTable(const EvalTable& table) : q_(table.field->q()), points_(table.points) {
    const Field& F = *table.field;
    data_.resize(table.monomials * q_ * points_);
    for (std::size_t j = 0; j < table.monomials; ++j)
        for (std::uint32_t t = 0; t < q_; ++t) {
            const FqElem from{t};
            const FqElem to{t + 1 == q_ ? 0u : t + 1};
            const FqElem delta = F.sub(to, from);
            FqElem* col = data_.data() + (j * q_ + t) * points_;
            for (std::size_t p = 0; p < points_; ++p) col[p] = F.mul(delta, table.at(p, j));
        }
}

} // namespace fqc::scan
