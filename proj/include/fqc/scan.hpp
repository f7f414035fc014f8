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

#ifndef FQC_SCAN_HPP
#define FQC_SCAN_HPP

// Exhaustive evaluation kernels over all forms of a fixed degree.
//
// A form is a coefficient vector over a fixed monomial basis. Only vectors
// whose first nonzero entry is 1 are visited (one per scalar class), in
// lexicographic order; the position in that order is the form's rank.
//
// scan_reference evaluates every candidate from scratch and is the oracle
// for scan_incremental, which walks ranks like an odometer and updates the
// per-point values by one precomputed column per changed digit.
// scan_parallel splits a rank range into blocks, runs scan_incremental on
// each under OpenMP and merges the per-block accumulators in block order.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fqc/mpoly.hpp"
#include "fqc/projspace.hpp"

namespace fqc::scan {

// Nonzero vectors of F_q^length with leading entry 1, ordered
// lexicographically (entry 0 most significant).
class NormalizedSpace {
public:
    NormalizedSpace(std::uint32_t q, std::size_t length);

    std::uint32_t q() const noexcept { return q_; }
    std::size_t length() const noexcept { return length_; }
    std::uint64_t size() const noexcept { return size_; }

    // digits[i] is the canonical index of the i-th coefficient.
    void decode(std::uint64_t rank, std::span<std::uint32_t> digits) const;
    std::uint64_t encode(std::span<const std::uint32_t> digits) const;

private:
    std::uint32_t q_;
    std::size_t length_;
    std::uint64_t size_;
    std::vector<std::uint64_t> block_start_; // by pivot position
};

// values[point * monomials + j] = monomial j evaluated at the point.
struct EvalTable {
    FieldPtr field;
    std::size_t points = 0;
    std::size_t monomials = 0;
    std::vector<FqElem> values;

    FqElem at(std::size_t point, std::size_t mono) const { return values[point * monomials + mono]; }
};

EvalTable make_eval_table(const PointSet& points, const std::vector<Monomial>& basis);

// Visitor: void(std::uint64_t rank, std::span<const std::uint32_t> digits,
//               std::span<const FqElem> values)
template <class Visitor>
void scan_reference(const EvalTable& table, const NormalizedSpace& space, std::uint64_t lo, std::uint64_t hi,
                    Visitor&& visit) {
    const Field& F = *table.field;
    std::vector<std::uint32_t> digits(space.length());
    std::vector<FqElem> values(table.points);
    hi = std::min(hi, space.size());
    for (std::uint64_t r = lo; r < hi; ++r) {
        space.decode(r, digits);
        for (std::size_t p = 0; p < table.points; ++p) {
            FqElem acc = Field::zero();
            for (std::size_t j = 0; j < table.monomials; ++j)
                acc = F.add(acc, F.mul(FqElem{digits[j]}, table.at(p, j)));
            values[p] = acc;
        }
        visit(r, std::span<const std::uint32_t>(digits), std::span<const FqElem>(values));
    }
}

// Columns used by the odometer: for digit position j and transition t
// (index t -> t+1, or q-1 -> 0 for t = q-1), the change of every point value.
class DeltaTable {
public:
    explicit DeltaTable(const EvalTable& table);

    const FqElem* column(std::size_t mono, std::uint32_t transition) const {
        return data_.data() + (std::size_t(mono) * q_ + transition) * points_;
    }

private:
    std::uint32_t q_;
    std::size_t points_;
    std::vector<FqElem> data_;
};

template <class Visitor>
void scan_incremental(const EvalTable& table, const DeltaTable& deltas, const NormalizedSpace& space,
                      std::uint64_t lo, std::uint64_t hi, Visitor&& visit) {
    hi = std::min(hi, space.size());
    if (lo >= hi) return;
    const Field& F = *table.field;
    const std::size_t n = space.length();
    const std::uint32_t q = space.q();
    std::vector<std::uint32_t> digits(n);
    std::vector<FqElem> values(table.points);

    auto full_eval = [&] {
        for (std::size_t p = 0; p < table.points; ++p) {
            FqElem acc = Field::zero();
            for (std::size_t j = 0; j < n; ++j) acc = F.add(acc, F.mul(FqElem{digits[j]}, table.at(p, j)));
            values[p] = acc;
        }
    };
    auto apply = [&](const FqElem* col) {
        for (std::size_t p = 0; p < table.points; ++p) values[p] = F.add(values[p], col[p]);
    };

    space.decode(lo, digits);
    full_eval();
    std::size_t pivot = std::size_t(std::find(digits.begin(), digits.end(), 1u) - digits.begin());
    for (std::uint64_t r = lo;;) {
        visit(r, std::span<const std::uint32_t>(digits), std::span<const FqElem>(values));
        if (++r == hi) break;
        // odometer on positions after the pivot
        std::size_t pos = n;
        while (pos > pivot + 1 && digits[pos - 1] == q - 1) {
            --pos;
            apply(deltas.column(pos, q - 1));
            digits[pos] = 0;
        }
        if (pos > pivot + 1) {
            --pos;
            apply(deltas.column(pos, digits[pos]));
            ++digits[pos];
        } else {
            // tail exhausted: next rank starts the block of the previous pivot
            space.decode(r, digits);
            pivot = std::size_t(std::find(digits.begin(), digits.end(), 1u) - digits.begin());
            full_eval();
        }
    }
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Acc: default constructible through `make()`, with
//   void visit(std::uint64_t, std::span<const std::uint32_t>, std::span<const FqElem>)
//   void merge(const Acc&)
template <class Acc, class Make>
Acc scan_parallel(const EvalTable& table, const NormalizedSpace& space, std::uint64_t lo, std::uint64_t hi,
                  Make&& make, std::uint64_t min_block = 1u << 14) {
    hi = std::min(hi, space.size());
    Acc total = make();
    if (lo >= hi) return total;
    const DeltaTable deltas(table);
    const std::uint64_t len = hi - lo;
    const std::uint64_t want = std::uint64_t(max_threads()) * 8;
    const std::uint64_t nblocks = std::max<std::uint64_t>(1, std::min(want, (len + min_block - 1) / min_block));
    std::vector<Acc> partial;
    partial.reserve(nblocks);
    for (std::uint64_t b = 0; b < nblocks; ++b) partial.push_back(make());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < std::int64_t(nblocks); ++b) {
        const std::uint64_t blo = lo + len * std::uint64_t(b) / nblocks;
        const std::uint64_t bhi = lo + len * std::uint64_t(b + 1) / nblocks;
        Acc& acc = partial[std::size_t(b)];
        scan_incremental(table, deltas, space, blo, bhi,
                         [&acc](std::uint64_t r, std::span<const std::uint32_t> d, std::span<const FqElem> v) {
                             acc.visit(r, d, v);
                         });
    }
    for (const auto& acc : partial) total.merge(acc);
    return total;
}

} // namespace fqc::scan

#endif
