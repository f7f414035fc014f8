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

#include "fqc/projspace.hpp"

#include <algorithm>
#include <iterator>

#include "fqc/linalg.hpp"

namespace fqc {

std::uint64_t theta(std::uint64_t q, unsigned n) {
    std::uint64_t sum = 0, pw = 1;
    for (unsigned i = 0; i <= n; ++i) {
        sum += pw;
        pw *= q;
    }
    return sum;
}

PointSet::PointSet(FieldPtr field, unsigned n, std::vector<ProjPoint> points)
    : field_(std::move(field)), n_(n), points_(std::move(points)) {
    for (const auto& p : points_)
        if (p.size() != n_ + 1) throw Error(Errc::ArityMismatch, "point dimension differs from ambient space");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const ProjPoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::minus(const PointSet& other) const {
    std::vector<ProjPoint> out;
    std::set_difference(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                        std::back_inserter(out));
    return PointSet(field_, n_, std::move(out));
}

PointSet PointSet::united(const PointSet& other) const {
    std::vector<ProjPoint> out;
    std::set_union(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                   std::back_inserter(out));
    return PointSet(field_, n_, std::move(out));
}

PointSet enumerate_proj(const FieldPtr& field, unsigned n) {
    const std::uint32_t q = field->q();
    std::vector<ProjPoint> pts;
    pts.reserve(theta(q, n));
    // pivot position j holds 1, earlier coordinates 0, later ones free
    for (unsigned j = 0; j <= n; ++j) {
        const unsigned free = n - j;
        std::vector<std::uint32_t> digits(free, 0);
        for (;;) {
            ProjPoint p{std::vector<FqElem>(n + 1, Field::zero())};
            p.coords[j] = Field::one();
            for (unsigned i = 0; i < free; ++i) p.coords[j + 1 + i] = FqElem{digits[i]};
            pts.push_back(std::move(p));
            unsigned pos = free;
            while (pos > 0 && ++digits[pos - 1] == q) digits[--pos] = 0;
            if (pos == 0) break;
        }
    }
    return PointSet(field, n, std::move(pts));
}

PointSet linear_subspace_points(const FieldPtr& field, unsigned n, unsigned k) {
    if (k < 1 || k > n) throw Error(Errc::BadK, "need 1 <= k <= n");
    std::vector<ProjPoint> out;
    for (const auto& p : enumerate_proj(field, k - 1)) {
        ProjPoint ext{p.coords};
        ext.coords.resize(n + 1, Field::zero());
        out.push_back(std::move(ext));
    }
    return PointSet(field, n, std::move(out));
}

std::vector<Poly> enumerate_lines_p2(const FieldPtr& field) {
    std::vector<Poly> out;
    for (const auto& p : enumerate_proj(field, 2)) out.push_back(Poly::linear(field, p.coords));
    return out;
}

PointSet line_points(const Poly& linear_form) {
    const FieldPtr& field = linear_form.field_ptr();
    std::vector<ProjPoint> out;
    for (const auto& p : enumerate_proj(field, 2))
        if (linear_form.eval(p).is_zero()) out.push_back(p);
    return PointSet(field, 2, std::move(out));
}

PointSet affine_points(const FieldPtr& field, unsigned n) {
    std::vector<ProjPoint> out;
    for (const auto& p : enumerate_proj(field, n))
        if (!p.coords[n].is_zero()) out.push_back(p);
    return PointSet(field, n, std::move(out));
}

bool collinear(const PointSet& points) {
    if (points.ambient_dim() != 2) throw Error(Errc::InvalidArgument, "collinearity is defined in P^2");
    if (points.size() <= 2) return true;
    FqMatrix m(points.field_ptr(), 3, points.size());
    for (std::size_t c = 0; c < points.size(); ++c)
        for (std::size_t r = 0; r < 3; ++r) m.at(r, c) = points.points()[c].coords[r];
    return rank(m) <= 2;
}

} // namespace fqc
