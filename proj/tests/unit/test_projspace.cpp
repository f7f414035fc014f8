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

#include "fqc/projspace.hpp"

using namespace fqc;

namespace {
ProjPoint pt(std::initializer_list<std::uint32_t> c) {
    std::vector<FqElem> v;
    for (auto x : c) v.push_back(FqElem{x});
    return ProjPoint{v};
}
} // namespace

TEST_SUITE("projspace") {

TEST_CASE("theta") {
    CHECK(theta(2, 2) == 7);
    CHECK(theta(4, 2) == 21);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) CHECK(theta(q, 1) == q + 1);
    CHECK(theta(3, 0) == 1);
}

TEST_CASE("enumeration") {
    auto F2 = Field::make(2);
    const PointSet p1 = enumerate_proj(F2, 1);
    CHECK(p1.size() == 3);
    CHECK(p1.contains(pt({1, 0})));
    CHECK(p1.contains(pt({1, 1})));
    CHECK(p1.contains(pt({0, 1})));
    CHECK(enumerate_proj(Field::make(3), 2).size() == 13);
    CHECK(enumerate_proj(Field::make(2, 2), 2).size() == 21);
    for (const auto& p : enumerate_proj(Field::make(3, 2), 2)) {
        const auto nz = std::find_if(p.coords.begin(), p.coords.end(), [](FqElem c) { return !c.is_zero(); });
        REQUIRE(nz != p.coords.end());
        CHECK(*nz == Field::one());
    }
}

TEST_CASE("point set algebra") {
    auto F3 = Field::make(3);
    const PointSet all = enumerate_proj(F3, 2);
    const PointSet line = linear_subspace_points(F3, 2, 2);
    const PointSet rest = all.minus(line);
    CHECK(rest.size() == 9);
    CHECK(rest.united(line) == all);
    CHECK(PointSet(F3, 2, {pt({0, 1, 0}), pt({0, 1, 0}), pt({1, 0, 0})}).size() == 2);
}

TEST_CASE("linear subspaces") {
    auto F2 = Field::make(2);
    const PointSet one = linear_subspace_points(F2, 3, 1);
    REQUIRE(one.size() == 1);
    CHECK(one.points()[0] == pt({1, 0, 0, 0}));
    const PointSet l = linear_subspace_points(F2, 2, 2);
    CHECK(l.size() == 3);
    for (const auto& p : l) CHECK(p.coords[2].is_zero());
    CHECK(linear_subspace_points(Field::make(3), 3, 2).size() == 4);
    CHECK_ERRC(linear_subspace_points(F2, 2, 0), Errc::BadK);
    CHECK_ERRC(linear_subspace_points(F2, 2, 3), Errc::BadK);
}

TEST_CASE("lines of the plane") {
    auto F2 = Field::make(2);
    CHECK(enumerate_lines_p2(F2).size() == 7);
    auto F3 = Field::make(3);
    for (const auto& l : enumerate_lines_p2(F3)) CHECK(line_points(l).size() == 4);
    for (const char* spec : {"2", "4", "5", "9"}) {
        auto F = Field::parse(spec);
        const PointSet on_z = line_points(parse_poly(F, 3, "Z"));
        CHECK(on_z.size() == F->q() + 1);
        for (const auto& p : on_z) CHECK(p.coords[2].is_zero());
        CHECK(on_z.contains(pt({0, 1, 0})));
    }
}

TEST_CASE("affine points") {
    CHECK(affine_points(Field::make(2), 2).size() == 4);
    CHECK(affine_points(Field::make(5), 2).size() == 25);
    for (const char* spec : {"2", "3", "4"}) {
        auto F = Field::parse(spec);
        for (unsigned n : {1u, 2u, 3u})
            CHECK(enumerate_proj(F, n).minus(affine_points(F, n)).size() == theta(F->q(), n - 1));
    }
}

TEST_CASE("collinearity") {
    auto F3 = Field::make(3);
    CHECK(collinear(PointSet(F3, 2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})})));
    CHECK_FALSE(collinear(PointSet(F3, 2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})})));
    CHECK(collinear(PointSet(F3, 2, {pt({1, 2, 1})})));
    CHECK(collinear(PointSet(F3, 2, {})));
}

} // TEST_SUITE
