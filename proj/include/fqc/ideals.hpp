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

#ifndef FQC_IDEALS_HPP
#define FQC_IDEALS_HPP

#include <string>
#include <vector>

#include "fqc/mpoly.hpp"
#include "fqc/projspace.hpp"

namespace fqc {

struct LabeledPoly {
    std::string label;
    Poly poly;
};

// Homogeneous, nonzero generators of an ideal of F_q[x_0..x_n].
class GeneratorSet {
public:
    GeneratorSet(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

    // Throws NotHomogeneous for mixed-degree or zero input.
    void add(std::string label, Poly poly);
    GeneratorSet without(std::size_t index) const;

    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<LabeledPoly>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    unsigned max_degree() const;
    unsigned min_degree() const;

private:
    FieldPtr field_;
    std::size_t nvars_;
    std::vector<LabeledPoly> gens_;
};

// x_i^q x_j - x_i x_j^q for 0 <= i < j <= n.
GeneratorSet gens_full_projective(const FieldPtr& field, unsigned n);

// The binomials plus x_s * prod_{i=k}^{n} (x_i^{q-1} - x_s^{q-1}), s = 0..k-1.
GeneratorSet gens_complement(const FieldPtr& field, unsigned n, unsigned k);

// x_s x_n^{q-1} - x_s^q for 0 <= s < n.
GeneratorSet gens_affine(const FieldPtr& field, unsigned n);

PointSet zero_locus(const GeneratorSet& gens, const PointSet& within);

// dim_{F_q} of the degree-d part of the ideal generated by `gens`.
std::size_t ideal_degree_dim(const GeneratorSet& gens, unsigned d);

// dim_{F_q} of degree-d forms vanishing on every point of `points`.
std::size_t vanishing_dim(const PointSet& points, unsigned d);

// Exact for homogeneous ideals: f is compared against the span of m*g in deg f.
bool membership(const Poly& f, const GeneratorSet& gens);

struct DegreeCheck {
    unsigned d = 0;
    std::size_t ideal_dim = 0;
    std::size_t vanishing_dim = 0;
    bool equal = false;
};

struct IdealReport {
    unsigned n = 0;
    unsigned k = 0; // 0 when the generator set is not a complement family
    std::uint32_t q = 0;
    std::size_t locus_size = 0;
    std::vector<DegreeCheck> per_degree;

    bool passed() const;
};

unsigned default_dmax(const GeneratorSet& gens);

// Checks zero_locus(gens) == points first (LocusMismatch otherwise), then
// compares dimensions degree by degree up to d_max.
IdealReport verify_ideal_equals_vanishing(const GeneratorSet& gens, const PointSet& points, unsigned d_max);

} // namespace fqc

#endif
