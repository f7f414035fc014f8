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

#include "fqc/mpoly.hpp"
#include "fqc/point.hpp"

using namespace fqc;

namespace {
ProjPoint pt(std::initializer_list<std::uint32_t> c) {
    std::vector<FqElem> v;
    for (auto x : c) v.push_back(FqElem{x});
    return ProjPoint{v};
}
} // namespace

TEST_SUITE("mpoly") {

TEST_CASE("evaluation examples") {
    auto F3 = Field::make(3);
    CHECK(parse_poly(F3, 3, "X^3*Y - X*Y^3").eval(pt({1, 2, 0})).is_zero());
    auto F2 = Field::make(2);
    CHECK(parse_poly(F2, 3, "X^2+Y*Z").eval(pt({1, 1, 1})).is_zero());
    auto F4 = Field::make(2, 2);
    const Poly sz = parse_poly(F4, 3, "(X+Y+Z)^4+(XY+YZ+ZX)^2+XYZ(X+Y+Z)");
    CHECK(sz.eval(pt({1, 0, 0})) == Field::one());
    CHECK_ERRC(sz.eval(std::vector<FqElem>{Field::one(), Field::one()}), Errc::ArityMismatch);
}

TEST_CASE("homogeneity") {
    auto F = Field::make(5);
    auto h = parse_poly(F, 3, "X^2*Y + Z^3").homogeneity();
    CHECK(h.homogeneous);
    CHECK(h.degree == 3u);
    CHECK_FALSE(parse_poly(F, 3, "X^2 + X").homogeneity().homogeneous);
    CHECK(Poly(F, 3).homogeneity().is_any());
}

TEST_CASE("monomial bases") {
    auto b1 = monomials_of_degree(3, 1);
    REQUIRE(b1.size() == 3);
    CHECK(b1[0].exps == std::vector<std::uint16_t>{1, 0, 0});
    CHECK(b1[1].exps == std::vector<std::uint16_t>{0, 1, 0});
    CHECK(b1[2].exps == std::vector<std::uint16_t>{0, 0, 1});
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(3, 4).size() == 15);
    CHECK(monomials_of_degree(4, 3).size() == 20);
    CHECK(monomials_of_degree(3, 0).size() == 1);
}

TEST_CASE("derivatives") {
    auto F2 = Field::make(2);
    CHECK(parse_poly(F2, 3, "X^2").derivative(0).is_zero());
    CHECK(parse_poly(F2, 3, "X^3").derivative(0) == parse_poly(F2, 3, "X^2"));
    auto F5 = Field::make(5);
    CHECK(parse_poly(F5, 3, "X*Y+Z^2").derivative(1) == parse_poly(F5, 3, "X"));
    CHECK(parse_poly(F5, 3, "X^3*Y").derivative(0) == parse_poly(F5, 3, "3*X^2*Y"));
}

TEST_CASE("arithmetic") {
    auto F2 = Field::make(2);
    CHECK((parse_poly(F2, 3, "X+Y") + parse_poly(F2, 3, "X+Y")).is_zero());
    auto F5 = Field::make(5);
    CHECK(parse_poly(F5, 3, "X") * parse_poly(F5, 3, "X^4 - Z^4") == parse_poly(F5, 3, "X^5 - X*Z^4"));
    auto F3 = Field::make(3);
    CHECK(parse_poly(F3, 3, "Y") * parse_poly(F3, 3, "Y - X") == parse_poly(F3, 3, "Y^2 - X*Y"));
    CHECK(parse_poly(F3, 3, "X+Y").pow(3) == parse_poly(F3, 3, "X^3+Y^3"));
    CHECK(parse_poly(F3, 3, "X+1").scaled(F3->from_int(2)) == parse_poly(F3, 3, "2X+2"));
    CHECK(-parse_poly(F3, 3, "X") == parse_poly(F3, 3, "2X"));
    CHECK_ERRC(parse_poly(F3, 3, "X") + parse_poly(F5, 3, "X"), Errc::RingMismatch);
    CHECK_ERRC(parse_poly(F3, 3, "X") * parse_poly(F3, 2, "x0"), Errc::RingMismatch);
}

TEST_CASE("parser and printer") {
    auto F9 = Field::make(3, 2);
    const Poly f = parse_poly(F9, 3, "t*X^2 + (1+t)*Y*Z - 2Z^2");
    CHECK(f.to_string() == "t*X^2+(1+t)*Y*Z+Z^2");
    CHECK(parse_poly(F9, 3, f.to_string()) == f);
    auto F2 = Field::make(2);
    CHECK(parse_poly(F2, 4, "x0*x3 + x1^2").to_string() == "x0*x3+x1^2");
    CHECK(parse_poly(F2, 2, "x0 + x1").to_string() == "s+t");
    CHECK(Poly(F2, 3).to_string() == "0");
    CHECK_ERRC(parse_poly(F2, 3, "X +"), Errc::ParseError);
    CHECK_ERRC(parse_poly(F2, 3, "W"), Errc::ParseError);
    CHECK_ERRC(parse_poly(F2, 3, "(X"), Errc::ParseError);
    CHECK_ERRC(parse_poly(F2, 2, "x2"), Errc::ParseError);
}

TEST_CASE("restriction to lines") {
    auto F2 = Field::make(2);
    CHECK(restrict_to_line(parse_poly(F2, 3, "X"), pt({0, 1, 0}), pt({0, 0, 1})).is_zero());
    CHECK(restrict_to_line(parse_poly(F2, 3, "X^2+Y*Z"), pt({1, 0, 0}), pt({0, 1, 0})) == parse_poly(F2, 2, "x0^2"));
    CHECK_ERRC(restrict_to_line(parse_poly(F2, 3, "X"), pt({1, 0, 0}), pt({1, 0, 0})), Errc::DegeneratePoints);
}

TEST_CASE("linear divisibility") {
    auto F3 = Field::make(3);
    CHECK(divides_linear(parse_poly(F3, 3, "X"), parse_poly(F3, 3, "X*(Y^2+Z^2)")));
    CHECK_FALSE(divides_linear(parse_poly(F3, 3, "X"), parse_poly(F3, 3, "Y^3")));
    CHECK(divides_linear(parse_poly(F3, 3, "X+2Y+Z"), parse_poly(F3, 3, "(X+2Y+Z)*(X^2+Y*Z)")));
    CHECK_ERRC(divides_linear(parse_poly(F3, 3, "X^2"), parse_poly(F3, 3, "X^3")), Errc::NotLinear);
    CHECK_ERRC(divides_linear(parse_poly(F3, 3, "X+1"), parse_poly(F3, 3, "X^3")), Errc::NotLinear);
    // four variables take the general substitution path
    auto F2 = Field::make(2);
    CHECK(divides_linear(parse_poly(F2, 4, "x0+x3"), parse_poly(F2, 4, "(x0+x3)*(x1^2+x2*x3)")));
    CHECK_FALSE(divides_linear(parse_poly(F2, 4, "x0+x3"), parse_poly(F2, 4, "x1^2+x2*x3")));
}

TEST_CASE("substitution and embedding") {
    auto F2 = Field::make(2);
    const Poly f = parse_poly(F2, 3, "X^2+Y*Z");
    const std::vector<Poly> img{parse_poly(F2, 3, "Y"), parse_poly(F2, 3, "X"), parse_poly(F2, 3, "Z")};
    CHECK(f.substitute(img) == parse_poly(F2, 3, "Y^2+X*Z"));
    const FieldExtension X = extend(F2, 2);
    const Poly g = f.embedded(X);
    CHECK(g.field().q() == 4);
    CHECK(g.to_string() == "X^2+Y*Z");
}

} // TEST_SUITE
