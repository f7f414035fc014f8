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

#include "support.hpp"

#include "fqc/ideals.hpp"

using namespace fqc;

namespace {

PointSet complement(const FieldPtr& F, unsigned n, unsigned k) {
    return enumerate_proj(F, n).minus(linear_subspace_points(F, n, k));
}

// Dimension sequences d = 0.. computed by the independent oracle script.
struct DimCase {
    std::uint32_t q;
    unsigned n, k;
    std::vector<std::size_t> dims;
};

const std::vector<DimCase> kDims = {
    {2, 2, 1, {0, 0, 0, 4, 9, 15, 22}},
    {2, 2, 2, {0, 0, 2, 6, 11, 17, 24}},
    {2, 3, 1, {0, 0, 0, 6, 21, 42, 70}},
    {2, 3, 2, {0, 0, 0, 8, 23, 44, 72}},
    {2, 3, 3, {0, 0, 3, 12, 27, 48, 76}},
    {3, 2, 1, {0, 0, 0, 0, 3, 9, 16, 24, 33}},
    {3, 2, 2, {0, 0, 0, 2, 6, 12, 19, 27, 36}},
};

} // namespace

TEST_SUITE("ideals") {

TEST_CASE("full projective generators") {
    auto F3 = Field::make(3);
    CHECK(gens_full_projective(F3, 1).size() == 1);
    const GeneratorSet g = gens_full_projective(F3, 2);
    CHECK(g.size() == 3);
    for (const auto& x : g.generators()) CHECK(x.poly.homogeneity().degree == 4u);
    for (const char* spec : {"2", "3", "4", "5"})
        for (unsigned n : {1u, 2u, 3u}) {
            auto F = Field::parse(spec);
            const PointSet all = enumerate_proj(F, n);
            CHECK(zero_locus(gens_full_projective(F, n), all) == all);
        }
}

TEST_CASE("complement generators") {
    auto F2 = Field::make(2);
    const GeneratorSet g = gens_complement(F2, 2, 1);
    CHECK(g.size() == 4);
    const auto& prod = g.generators().back();
    CHECK(prod.poly == parse_poly(F2, 3, "x0*(x1-x0)*(x2-x0)"));
    CHECK(prod.poly.homogeneity().degree == 3u);

    auto F5 = Field::make(5);
    const GeneratorSet g1 = gens_complement(F5, 1, 1);
    bool found = false;
    for (const auto& x : g1.generators())
        if (x.poly == parse_poly(F5, 2, "x0*(x1^4 - x0^4)")) found = true;
    CHECK(found);

    auto F3 = Field::make(3);
    const GeneratorSet g22 = gens_complement(F3, 2, 2);
    CHECK(g22.size() == 5);
    unsigned products = 0;
    for (const auto& x : g22.generators())
        if (x.label.rfind("product", 0) == 0) {
            ++products;
            CHECK(x.poly.homogeneity().degree == 3u);
        }
    CHECK(products == 2);
    CHECK_ERRC(gens_complement(F3, 2, 0), Errc::BadK);
    CHECK_ERRC(gens_complement(F3, 2, 3), Errc::BadK);
}

TEST_CASE("affine generators") {
    auto F2 = Field::make(2);
    const GeneratorSet g = gens_affine(F2, 2);
    REQUIRE(g.size() == 2);
    CHECK(g.generators()[0].poly == parse_poly(F2, 3, "x0*x2 - x0^2"));
    CHECK(g.generators()[1].poly == parse_poly(F2, 3, "x1*x2 - x1^2"));
    for (const char* spec : {"2", "3", "4"})
        for (unsigned n : {1u, 2u}) {
            auto F = Field::parse(spec);
            CHECK(zero_locus(gens_affine(F, n), enumerate_proj(F, n)) == affine_points(F, n));
        }
    // every binomial is a combination of the affine generators
    auto F3 = Field::make(3);
    const GeneratorSet aff = gens_affine(F3, 2);
    const GeneratorSet full = gens_full_projective(F3, 2);
    for (const auto& b : full.generators()) CHECK(membership(b.poly, aff));
}

TEST_CASE("zero loci of the complement family") {
    for (const char* spec : {"2", "3", "4", "5"})
        for (unsigned n = 1; n <= 3; ++n)
            for (unsigned k = 1; k <= n; ++k) {
                auto F = Field::parse(spec);
                CAPTURE(spec);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(zero_locus(gens_complement(F, n, k), enumerate_proj(F, n)) == complement(F, n, k));
            }
    auto F2 = Field::make(2);
    CHECK(zero_locus(gens_complement(F2, 2, 1), enumerate_proj(F2, 2)).size() == 6);
    auto F3 = Field::make(3);
    CHECK(zero_locus(gens_complement(F3, 2, 2), enumerate_proj(F3, 2)).size() == 9);
}

TEST_CASE("degree slices") {
    auto F2 = Field::make(2);
    GeneratorSet x0(F2, 2);
    x0.add("x0", parse_poly(F2, 2, "x0"));
    CHECK(ideal_degree_dim(x0, 2) == 2);
    CHECK(ideal_degree_dim(x0, 0) == 0);
    CHECK(vanishing_dim(PointSet(F2, 2, {}), 3) == 10);
    CHECK(vanishing_dim(linear_subspace_points(F2, 2, 1), 1) == 2);
    CHECK_ERRC(x0.add("bad", parse_poly(F2, 2, "x0^2 + x1")), Errc::NotHomogeneous);
    CHECK_ERRC(x0.add("zero", Poly(F2, 2)), Errc::NotHomogeneous);
}

TEST_CASE("dimension sequences match the oracle") {
    for (const auto& c : kDims) {
        auto F = Field::make(c.q);
        CAPTURE(c.q);
        CAPTURE(c.n);
        CAPTURE(c.k);
        const GeneratorSet g = gens_complement(F, c.n, c.k);
        const PointSet s = complement(F, c.n, c.k);
        for (unsigned d = 0; d < c.dims.size(); ++d) {
            CHECK(ideal_degree_dim(g, d) == c.dims[d]);
            CHECK(vanishing_dim(s, d) == c.dims[d]);
        }
    }
}

TEST_CASE("membership") {
    auto F2 = Field::make(2);
    const GeneratorSet g = gens_complement(F2, 2, 1);
    for (const auto& x : g.generators()) CHECK(membership(x.poly, g));
    CHECK(membership(parse_poly(F2, 3, "x0^2*(x1-x0)*(x2-x0)"), g));
    CHECK_FALSE(membership(parse_poly(F2, 3, "x1^3"), g));
    CHECK_ERRC(membership(parse_poly(F2, 3, "x1^3 + x1"), g), Errc::NotHomogeneous);
    auto F3 = Field::make(3);
    const GeneratorSet g3 = gens_complement(F3, 2, 1);
    // x0^{d-(q-1)n} prod (x_i^{q-1} - x0^{q-1}) for d > (q-1)n
    CHECK(membership(parse_poly(F3, 3, "x0^2*(x1^2-x0^2)*(x2^2-x0^2)"), g3));
}

TEST_CASE("ideal verification") {
    auto F2 = Field::make(2);
    const IdealReport r = verify_ideal_equals_vanishing(gens_complement(F2, 2, 1), complement(F2, 2, 1), 6);
    CHECK(r.passed());
    CHECK(r.locus_size == 6);
    CHECK(r.per_degree.size() == 7);

    auto F3 = Field::make(3);
    CHECK(verify_ideal_equals_vanishing(gens_complement(F3, 2, 2), complement(F3, 2, 2), 8).passed());

    // dropping a product generator lets points of P^{k-1} back into the locus
    const GeneratorSet g = gens_complement(F3, 2, 2);
    const GeneratorSet dropped = g.without(g.size() - 1);
    CHECK_ERRC(verify_ideal_equals_vanishing(dropped, complement(F3, 2, 2), 8), Errc::LocusMismatch);

    const GeneratorSet g1 = gens_complement(F2, 2, 2);
    CHECK(verify_ideal_equals_vanishing(g1, complement(F2, 2, 2), default_dmax(g1)).passed());
    CHECK(default_dmax(g1) == 6);
}

} // TEST_SUITE
