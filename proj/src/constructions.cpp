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

#include "fqc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fqc/linalg.hpp"
#include "fqc/scan.hpp"

namespace fqc {

unsigned FcParams::root_count() const noexcept {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0u);
}

FcParams plain_fc_params(const FieldPtr& field, unsigned d, std::vector<FqElem> alphas) {
    const unsigned q = field->q();
    if (d < q + 2 || d > 2 * q - 1)
        throw Error(Errc::BadDegreeRange, "plain F_c needs q+2 <= d <= 2q-1, got d=" + std::to_string(d));
    FcParams p;
    p.field = field;
    p.degree = d;
    if (alphas.empty())
        for (unsigned i = 0; i < d - q + 1; ++i) alphas.push_back(FqElem{i});
    p.alphas = std::move(alphas);
    p.multiplicities.assign(p.alphas.size(), 1);
    p.c.assign(d - q, Field::zero());
    validate(p);
    return p;
}

std::vector<unsigned> default_multiplicities(const FieldPtr& field, unsigned d) {
    const unsigned q = field->q();
    if (d < 2 * q) throw Error(Errc::BadDegreeRange, "multiplicity mode needs d >= 2q");
    std::vector<unsigned> e(q, 1);
    e[0] += d - q + 1 - q;
    return e;
}

FcParams remark_fc_params(const FieldPtr& field, unsigned d, std::vector<unsigned> multiplicities) {
    const unsigned q = field->q();
    if (d < 2 * q) throw Error(Errc::BadDegreeRange, "multiplicity mode needs d >= 2q, got d=" + std::to_string(d));
    if (multiplicities.empty()) multiplicities = default_multiplicities(field, d);
    FcParams p;
    p.field = field;
    p.degree = d;
    p.multiplicity_mode = true;
    p.alphas = field->enumerate();
    p.multiplicities = std::move(multiplicities);
    p.c.assign(d - q, Field::zero());
    validate(p);
    return p;
}

void validate(const FcParams& p) {
    const unsigned q = p.field->q();
    const unsigned d = p.degree;
    if (p.multiplicity_mode) {
        if (d < 2 * q) throw Error(Errc::BadDegreeRange, "multiplicity mode needs d >= 2q");
        if (p.multiplicities.size() != q || p.alphas.size() != q)
            throw Error(Errc::BadMultiplicities, "need one multiplicity per element of F_q");
        if (std::any_of(p.multiplicities.begin(), p.multiplicities.end(), [](unsigned e) { return e < 1; }))
            throw Error(Errc::BadMultiplicities, "every multiplicity must be >= 1");
        if (p.root_count() != d - q + 1)
            throw Error(Errc::BadMultiplicities, "multiplicities must sum to d-q+1 = " + std::to_string(d - q + 1));
    } else {
        if (d < q + 2 || d > 2 * q - 1) throw Error(Errc::BadDegreeRange, "plain F_c needs q+2 <= d <= 2q-1");
        if (p.alphas.size() != d - q + 1)
            throw Error(Errc::InvalidArgument, "need d-q+1 = " + std::to_string(d - q + 1) + " alphas");
        std::set<FqElem> seen(p.alphas.begin(), p.alphas.end());
        if (seen.size() != p.alphas.size()) throw Error(Errc::AlphasNotDistinct, "alphas must be pairwise distinct");
        for (auto a : p.alphas)
            if (a.value >= q) throw Error(Errc::InvalidArgument, "alpha outside the field");
    }
    if (p.c.size() != d - q) throw Error(Errc::InvalidArgument, "c must have d-q = " + std::to_string(d - q) + " entries");
}

std::vector<FqElem> compute_betas(const FcParams& params) {
    const FieldPtr& F = params.field;
    const Poly X = Poly::variable(F, 3, 0), Y = Poly::variable(F, 3, 1);
    Poly prod = Poly::constant(F, 3, Field::one());
    for (std::size_t i = 0; i < params.alphas.size(); ++i)
        prod = prod * (Y - X.scaled(params.alphas[i])).pow(params.multiplicities[i]);
    const unsigned m = params.root_count();
    std::vector<FqElem> beta(m + 1);
    for (unsigned i = 0; i <= m; ++i)
        beta[m - i] = prod.coeff(Monomial{{std::uint16_t(m - i), std::uint16_t(i), 0}});
    return beta;
}

namespace {

Poly mono(const FieldPtr& F, unsigned x, unsigned y, unsigned z) {
    return Poly::term(F, Monomial{{std::uint16_t(x), std::uint16_t(y), std::uint16_t(z)}}, Field::one());
}

// F_c = base + sum_i c_i * part[i-1]
struct FcPieces {
    Poly base;
    std::vector<Poly> parts;
};

FcPieces fc_pieces(const FcParams& p) {
    const FieldPtr& F = p.field;
    const unsigned q = F->q();
    const unsigned d = p.degree;
    const unsigned k = d - q;
    const auto beta = compute_betas(p);
    const unsigned m = k + 1;
    const Poly xfactor = mono(F, q, 0, 0) - mono(F, 1, 0, q - 1);
    const Poly yfactor = mono(F, 0, q, 0) - mono(F, 0, 1, q - 1);
    Poly inner(F, 3);
    for (unsigned i = 0; i <= k; ++i) inner = inner + mono(F, k - i, i, 0).scaled(beta[m - i]);
    FcPieces out{xfactor * inner + yfactor * mono(F, 0, k, 0), {}};
    for (unsigned i = 1; i <= k; ++i) out.parts.push_back(xfactor * mono(F, k - i, 0, i));
    return out;
}

Poly assemble(const FcPieces& pieces, const std::vector<FqElem>& c) {
    Poly f = pieces.base;
    for (std::size_t i = 0; i < c.size(); ++i) f = f + pieces.parts[i].scaled(c[i]);
    return f;
}

} // namespace

Poly fc_equation(const FcParams& params) {
    validate(params);
    return assemble(fc_pieces(params), params.c);
}

PlaneCurve build_fc(const FcParams& params) { return PlaneCurve(fc_equation(params)); }

std::optional<std::vector<FqElem>> search_line_free_c(const FcParams& params) {
    FcParams p = params;
    p.c.assign(p.degree - p.field->q(), Field::zero());
    validate(p);
    const FcPieces pieces = fc_pieces(p);
    const unsigned q = p.field->q();
    const std::size_t len = p.c.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= q;
    const auto decode = [&](std::uint64_t r) {
        std::vector<FqElem> c(len);
        for (std::size_t i = len; i-- > 0;) {
            c[i] = FqElem{std::uint32_t(r % q)};
            r /= q;
        }
        return c;
    };
    const auto lines = enumerate_lines_p2(p.field);
    std::vector<PointSet> line_pts;
    for (const auto& l : lines) line_pts.push_back(line_points(l));
    const auto line_free = [&](const Poly& f) {
        for (std::size_t l = 0; l < lines.size(); ++l) {
            const bool all_on = std::all_of(line_pts[l].begin(), line_pts[l].end(),
                                            [&](const ProjPoint& pt) { return f.eval(pt).is_zero(); });
            if (all_on && divides_linear(lines[l], f)) return false;
        }
        return true;
    };

    // chunks scanned in parallel; the first chunk with a hit yields the global minimum
    const std::uint64_t chunk = std::uint64_t(scan::max_threads()) * 16;
    for (std::uint64_t start = 0; start < total; start += chunk) {
        const std::uint64_t end = std::min(total, start + chunk);
        std::uint64_t best = end;
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
        for (std::int64_t r = std::int64_t(start); r < std::int64_t(end); ++r)
            if (std::uint64_t(r) < best && line_free(assemble(pieces, decode(std::uint64_t(r)))))
                best = std::min(best, std::uint64_t(r));
        if (best < end) return decode(best);
    }
    return std::nullopt;
}

FcConstruction build_remark_curve(const FieldPtr& field, unsigned d, std::vector<unsigned> multiplicities) {
    FcParams p = remark_fc_params(field, d, std::move(multiplicities));
    const auto c = search_line_free_c(p);
    if (c) p.c = *c;
    PlaneCurve curve = build_fc(p);
    return {std::move(p), std::move(curve), c.has_value()};
}

bool is_irreducible_quadratic(const Field& F, const BinaryQuadratic& f) {
    // zeros on P^1: (1 : 0) and (lambda : 1)
    if (f.a.is_zero()) return false;
    for (std::uint32_t l = 0; l < F.q(); ++l) {
        const FqElem s{l};
        const FqElem v = F.add(F.add(F.mul(f.a, F.mul(s, s)), F.mul(f.b, s)), f.c);
        if (v.is_zero()) return false;
    }
    return true;
}

BinaryQuadratic find_irreducible_quadratic(const FieldPtr& field) {
    const std::uint32_t q = field->q();
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::uint32_t c = 0; c < q; ++c) {
                const BinaryQuadratic f{FqElem{a}, FqElem{b}, FqElem{c}};
                if (is_irreducible_quadratic(*field, f)) return f;
            }
    throw Error(Errc::InvalidArgument, "no irreducible binary quadratic found");
}

BinaryQuadratic QPlusOneParams::quadratic(const Field& f) const { return {a[0], f.add(a[1], b[0]), b[1]}; }

QPlusOneParams default_qplus1_params(const FieldPtr& field) {
    const BinaryQuadratic f = find_irreducible_quadratic(field);
    QPlusOneParams p;
    p.field = field;
    p.a = {f.a, f.b, Field::zero()};
    p.b = {Field::zero(), f.c, Field::zero()};
    return p;
}

Poly qplus1_equation(const QPlusOneParams& p) {
    const FieldPtr& F = p.field;
    if (!is_irreducible_quadratic(*F, p.quadratic(*F)))
        throw Error(Errc::ReducibleQuadratic, "a0 s^2 + (a1+b0) s t + b1 t^2 must be irreducible over F_q");
    const unsigned q = F->q();
    const Poly xfactor = mono(F, q, 0, 0) - mono(F, 1, 0, q - 1);
    const Poly yfactor = mono(F, 0, q, 0) - mono(F, 0, 1, q - 1);
    return xfactor * Poly::linear(F, p.a) + yfactor * Poly::linear(F, p.b);
}

PlaneCurve build_qplus1(const QPlusOneParams& params) { return PlaneCurve(qplus1_equation(params)); }

ProjPoint qplus1_singular_point(const QPlusOneParams& p) {
    const Field& F = *p.field;
    FqMatrix m(p.field, 2, 2);
    m.at(0, 0) = p.a[0];
    m.at(0, 1) = p.a[1];
    m.at(1, 0) = p.b[0];
    m.at(1, 1) = p.b[1];
    const auto sol = solve(m, {F.neg(p.a[2]), F.neg(p.b[2])});
    if (!sol || rank(m) != 2) throw Error(Errc::ReducibleQuadratic, "coefficient matrix is singular");
    return normalize(F, {(*sol)[0], (*sol)[1], Field::one()});
}

ConstructionReport verify_construction(const PlaneCurve& curve, std::uint64_t expected_points, bool expect_line_free) {
    ConstructionReport r;
    r.expected_points = expected_points;
    r.points = count_points(curve);
    r.expect_line_free = expect_line_free;
    for (const auto& l : line_components(curve)) r.line_components.push_back(l.to_string());
    return r;
}

} // namespace fqc
