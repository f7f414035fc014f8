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

#ifndef FQC_PROJSPACE_HPP
#define FQC_PROJSPACE_HPP

#include <cstdint>
#include <vector>

#include "fqc/gf.hpp"
#include "fqc/mpoly.hpp"
#include "fqc/point.hpp"

namespace fqc {

// theta_q(n) = |P^n(F_q)| = (q^{n+1} - 1) / (q - 1).
std::uint64_t theta(std::uint64_t q, unsigned n);

// Finite subset of P^n(F_q), kept sorted and duplicate free.
class PointSet {
public:
    PointSet(FieldPtr field, unsigned n, std::vector<ProjPoint> points = {});

    const FieldPtr& field_ptr() const noexcept { return field_; }
    unsigned ambient_dim() const noexcept { return n_; }
    const std::vector<ProjPoint>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    bool contains(const ProjPoint& p) const;
    PointSet minus(const PointSet& other) const;
    PointSet united(const PointSet& other) const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.n_ == b.n_ && a.points_ == b.points_;
    }

private:
    FieldPtr field_;
    unsigned n_;
    std::vector<ProjPoint> points_;
};

PointSet enumerate_proj(const FieldPtr& field, unsigned n);

// The theta_q(k-1) points with x_k = ... = x_n = 0. Throws BadK unless 1 <= k <= n.
PointSet linear_subspace_points(const FieldPtr& field, unsigned n, unsigned k);

// One canonical linear form per line of P^2(F_q).
std::vector<Poly> enumerate_lines_p2(const FieldPtr& field);

// Points of P^2(F_q) on {L = 0}.
PointSet line_points(const Poly& linear_form);

// The q^n points with x_n != 0.
PointSet affine_points(const FieldPtr& field, unsigned n);

// All points of a subset of P^2 on one line (rank of coordinates <= 2).
bool collinear(const PointSet& points);

} // namespace fqc

#endif
