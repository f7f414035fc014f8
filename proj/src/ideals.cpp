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

#include "fqc/ideals.hpp"

#include <algorithm>
#include <map>

#include "fqc/linalg.hpp"

namespace fqc {

void GeneratorSet::add(std::string label, Poly poly) {
    if (poly.nvars() != nvars_ || !poly.field().same_as(*field_))
        throw Error(Errc::RingMismatch, "generator lives in a different ring");
    const Homogeneity h = poly.homogeneity();
    if (poly.is_zero() || !h.homogeneous) throw Error(Errc::NotHomogeneous, "generator '" + label + "' is not a nonzero form");
    gens_.push_back({std::move(label), std::move(poly)});
}

GeneratorSet GeneratorSet::without(std::size_t index) const {
    GeneratorSet out(field_, nvars_);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (i != index) out.gens_.push_back(gens_[i]);
    return out;
}

unsigned GeneratorSet::max_degree() const {
    unsigned d = 0;
    for (const auto& g : gens_) d = std::max(d, g.poly.total_degree());
    return d;
}

unsigned GeneratorSet::min_degree() const {
    unsigned d = ~0u;
    for (const auto& g : gens_) d = std::min(d, g.poly.total_degree());
    return gens_.empty() ? 0 : d;
}

namespace {

void add_binomials(GeneratorSet& out, const FieldPtr& field, unsigned n) {
    const std::size_t nv = n + 1;
    const unsigned q = field->q();
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) {
            Poly g = Poly::variable(field, nv, i, q) * Poly::variable(field, nv, j) -
                     Poly::variable(field, nv, i) * Poly::variable(field, nv, j, q);
            out.add("binomial(" + std::to_string(i) + "," + std::to_string(j) + ")", std::move(g));
        }
}

} // namespace

GeneratorSet gens_full_projective(const FieldPtr& field, unsigned n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "need n >= 1");
    GeneratorSet out(field, n + 1);
    add_binomials(out, field, n);
    return out;
}

GeneratorSet gens_complement(const FieldPtr& field, unsigned n, unsigned k) {
    if (k < 1 || k > n) throw Error(Errc::BadK, "need 1 <= k <= n");
    GeneratorSet out = gens_full_projective(field, n);
    const std::size_t nv = n + 1;
    const unsigned q = field->q();
    for (unsigned s = 0; s < k; ++s) {
        Poly g = Poly::variable(field, nv, s);
        for (unsigned i = k; i <= n; ++i)
            g = g * (Poly::variable(field, nv, i, q - 1) - Poly::variable(field, nv, s, q - 1));
        out.add("product(" + std::to_string(s) + ")", std::move(g));
    }
    return out;
}

GeneratorSet gens_affine(const FieldPtr& field, unsigned n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "need n >= 1");
    GeneratorSet out(field, n + 1);
    const std::size_t nv = n + 1;
    const unsigned q = field->q();
    for (unsigned s = 0; s < n; ++s)
        out.add("affine(" + std::to_string(s) + ")",
                Poly::variable(field, nv, s) * Poly::variable(field, nv, n, q - 1) - Poly::variable(field, nv, s, q));
    return out;
}

PointSet zero_locus(const GeneratorSet& gens, const PointSet& within) {
    std::vector<ProjPoint> out;
    for (const auto& p : within) {
        if (p.size() != gens.nvars()) throw Error(Errc::ArityMismatch, "points and generators differ in arity");
        const bool vanishes = std::all_of(gens.generators().begin(), gens.generators().end(),
                                          [&](const LabeledPoly& g) { return g.poly.eval(p).is_zero(); });
        if (vanishes) out.push_back(p);
    }
    return PointSet(within.field_ptr(), within.ambient_dim(), std::move(out));
}

namespace {

// Rows: coefficient vectors of m*g for every generator g and monomial m of
// complementary degree, over the degree-d monomial basis.
FqMatrix multiples_matrix(const GeneratorSet& gens, unsigned d, const std::vector<Monomial>& basis) {
    std::map<Monomial, std::size_t, TermOrder> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    FqMatrix m(gens.field_ptr(), 0, basis.size());
    for (const auto& g : gens.generators()) {
        const unsigned gd = g.poly.total_degree();
        if (gd > d) continue;
        for (const auto& mult : monomials_of_degree(gens.nvars(), d - gd)) {
            std::vector<FqElem> row(basis.size(), Field::zero());
            for (const auto& [mono, c] : g.poly.terms()) row[index.at(mono * mult)] = c;
            m.append_row(row);
        }
    }
    return m;
}

} // namespace

std::size_t ideal_degree_dim(const GeneratorSet& gens, unsigned d) {
    const auto basis = monomials_of_degree(gens.nvars(), d);
    return rank(multiples_matrix(gens, d, basis));
}

std::size_t vanishing_dim(const PointSet& points, unsigned d) {
    const std::size_t nvars = points.ambient_dim() + 1;
    const auto basis = monomials_of_degree(nvars, d);
    FqMatrix ev(points.field_ptr(), points.size(), basis.size());
    const Field& F = *points.field_ptr();
    for (std::size_t r = 0; r < points.size(); ++r) {
        const auto& coords = points.points()[r].coords;
        for (std::size_t c = 0; c < basis.size(); ++c) {
            FqElem v = Field::one();
            for (std::size_t i = 0; i < nvars; ++i) v = F.mul(v, F.pow(coords[i], basis[c].exps[i]));
            ev.at(r, c) = v;
        }
    }
    return nullity(ev);
}

bool membership(const Poly& f, const GeneratorSet& gens) {
    const Homogeneity h = f.homogeneity();
    if (!h.homogeneous) throw Error(Errc::NotHomogeneous, "membership needs a homogeneous polynomial");
    if (f.is_zero()) return true;
    if (f.nvars() != gens.nvars() || !f.field().same_as(*gens.field_ptr()))
        throw Error(Errc::RingMismatch, "polynomial and ideal live in different rings");
    const unsigned d = *h.degree;
    const auto basis = monomials_of_degree(gens.nvars(), d);
    FqMatrix m = multiples_matrix(gens, d, basis);
    const std::size_t before = rank(m);
    std::vector<FqElem> row(basis.size(), Field::zero());
    for (std::size_t i = 0; i < basis.size(); ++i) row[i] = f.coeff(basis[i]);
    m.append_row(row);
    return rank(m) == before;
}

bool IdealReport::passed() const {
    return std::all_of(per_degree.begin(), per_degree.end(), [](const DegreeCheck& c) { return c.equal; });
}

unsigned default_dmax(const GeneratorSet& gens) {
    const unsigned q = gens.field_ptr()->q();
    return std::max(2 * q + 2, gens.max_degree() + q);
}

IdealReport verify_ideal_equals_vanishing(const GeneratorSet& gens, const PointSet& points, unsigned d_max) {
    if (points.ambient_dim() + 1 != gens.nvars()) throw Error(Errc::ArityMismatch, "point set and ring differ");
    const PointSet locus = zero_locus(gens, enumerate_proj(gens.field_ptr(), points.ambient_dim()));
    if (!(locus == points))
        throw Error(Errc::LocusMismatch, "zero locus has " + std::to_string(locus.size()) + " points, expected " +
                                             std::to_string(points.size()));
    IdealReport report;
    report.n = points.ambient_dim();
    report.q = gens.field_ptr()->q();
    report.locus_size = points.size();
    for (unsigned d = 0; d <= d_max; ++d) {
        DegreeCheck c;
        c.d = d;
        c.ideal_dim = ideal_degree_dim(gens, d);
        c.vanishing_dim = vanishing_dim(points, d);
        c.equal = c.ideal_dim == c.vanishing_dim;
        report.per_degree.push_back(c);
    }
    return report;
}

} // namespace fqc
