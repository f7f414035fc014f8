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

#ifndef FQC_CONSTRUCTIONS_HPP
#define FQC_CONSTRUCTIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fqc/curves.hpp"

namespace fqc {

// Parameters of the curve
//   F_c = (X^q - X Z^{q-1}) (sum_i beta_{m-i} X^{m-1-i} Y^i + sum_i c_i X^{d-q-i} Z^i)
//         + (Y^q - Y Z^{q-1}) Y^{d-q},         m = d - q + 1,
// where prod (Y - alpha X)^{e_alpha} = sum_i beta_{m-i} X^{m-i} Y^i.
//
// Plain mode: q+2 <= d <= 2q-1 and m distinct alphas, each with multiplicity 1.
// Multiplicity mode: d >= 2q and every alpha in F_q with e_alpha >= 1.
struct FcParams {
    FieldPtr field;
    unsigned degree = 0;
    std::vector<FqElem> alphas;
    std::vector<unsigned> multiplicities; // parallel to alphas; all 1 in plain mode
    std::vector<FqElem> c;                // d - q entries
    bool multiplicity_mode = false;

    unsigned root_count() const noexcept;
};

// Defaults: the first d-q+1 elements in canonical order, c = 0.
FcParams plain_fc_params(const FieldPtr& field, unsigned d, std::vector<FqElem> alphas = {});

// Default multiplicities: one per element, the remainder on alpha = 0.
std::vector<unsigned> default_multiplicities(const FieldPtr& field, unsigned d);
// `multiplicities[a]` belongs to the element with canonical index a.
FcParams remark_fc_params(const FieldPtr& field, unsigned d, std::vector<unsigned> multiplicities = {});

// Throws BadDegreeRange, AlphasNotDistinct, BadMultiplicities or InvalidArgument.
void validate(const FcParams& params);

// beta_0 (= 1), ..., beta_m.
std::vector<FqElem> compute_betas(const FcParams& params);

Poly fc_equation(const FcParams& params);
PlaneCurve build_fc(const FcParams& params);

// Lexicographically first c (c_1 most significant) for which F_c has no
// F_q-line component; `params.c` is ignored.
std::optional<std::vector<FqElem>> search_line_free_c(const FcParams& params);

struct FcConstruction {
    FcParams params;
    PlaneCurve curve;
    bool line_free = false;
};

// Multiplicity-mode curve with a searched c (c = 0 when no line-free c exists).
FcConstruction build_remark_curve(const FieldPtr& field, unsigned d, std::vector<unsigned> multiplicities = {});

struct BinaryQuadratic {
    FqElem a, b, c; // a s^2 + b s t + c t^2
};

bool is_irreducible_quadratic(const Field& field, const BinaryQuadratic& f);

// Lexicographically first (a, b, c) without zeros on P^1(F_q).
BinaryQuadratic find_irreducible_quadratic(const FieldPtr& field);

struct QPlusOneParams {
    FieldPtr field;
    std::array<FqElem, 3> a{}; // a_0, a_1, a_2
    std::array<FqElem, 3> b{}; // b_0, b_1, b_2

    BinaryQuadratic quadratic(const Field& f) const;
};

// a = (A, B, 0), b = (0, C, 0) from find_irreducible_quadratic.
QPlusOneParams default_qplus1_params(const FieldPtr& field);

// (X^q - X Z^{q-1}) (a_0 X + a_1 Y + a_2 Z) + (Y^q - Y Z^{q-1}) (b_0 X + b_1 Y + b_2 Z).
// Throws ReducibleQuadratic.
Poly qplus1_equation(const QPlusOneParams& params);
PlaneCurve build_qplus1(const QPlusOneParams& params);

// (x_0, y_0, 1) with [[a0, a1], [b0, b1]] (x_0, y_0)^T = -(a_2, b_2)^T.
ProjPoint qplus1_singular_point(const QPlusOneParams& params);

struct ConstructionReport {
    std::uint64_t expected_points = 0;
    std::uint64_t points = 0;
    bool expect_line_free = false;
    std::vector<std::string> line_components;

    bool points_ok() const noexcept { return points == expected_points; }
    bool lines_ok() const noexcept { return !expect_line_free || line_components.empty(); }
    bool passed() const noexcept { return points_ok() && lines_ok(); }
};

ConstructionReport verify_construction(const PlaneCurve& curve, std::uint64_t expected_points, bool expect_line_free);

} // namespace fqc

#endif
