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

#ifndef FQC_CURVES_HPP
#define FQC_CURVES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqc/linalg.hpp"
#include "fqc/mpoly.hpp"
#include "fqc/projspace.hpp"

namespace fqc {

// Plane curve {F = 0} for a nonzero ternary form F of degree >= 1. The
// number of F_q-points is computed once at construction.
class PlaneCurve {
public:
    explicit PlaneCurve(Poly equation);

    const Poly& equation() const noexcept { return equation_; }
    const FieldPtr& field_ptr() const noexcept { return equation_.field_ptr(); }
    const Field& field() const noexcept { return equation_.field(); }
    unsigned degree() const noexcept { return degree_; }
    std::uint64_t n_points() const noexcept { return n_points_; }

private:
    Poly equation_;
    unsigned degree_;
    std::uint64_t n_points_;
};

std::uint64_t count_points(const PlaneCurve& curve);

// Every canonical F_q-linear form dividing the equation.
std::vector<Poly> line_components(const PlaneCurve& curve);

struct MissingPoints {
    PointSet points;
    bool collinear = true;
};

MissingPoints missing_points(const PlaneCurve& curve);

enum class SziklaiStatus { Within, Exceeds, ExceptionCurve, NotApplicable };

std::string_view to_string(SziklaiStatus status);
SziklaiStatus sziklai_status_from_string(std::string_view text);

// Compares N_q with (d-1)q+1 for curves without F_q-line components. The
// F_4 quartic with 14 points is flagged, not checked for equivalence.
SziklaiStatus sziklai_classify(const PlaneCurve& curve);

// N_q >= (d-2)q+3 on a curve without F_q-line components certifies absolute
// irreducibility; false means inconclusive. Throws HasLineComponent.
bool irreducibility_certificate(const PlaneCurve& curve);

struct SingularSearch {
    FieldExtension extension;
    std::vector<ProjPoint> points; // coordinates in extension.ext
};

constexpr std::uint64_t kSingularScanBudget = 10'000'000;

// Exhaustive scan of P^2(F_{q^m}) for common zeros of F and its partials.
// Throws BudgetExceeded when (q^m)^2 > budget.
SingularSearch singular_points_ext(const PlaneCurve& curve, unsigned m,
                                   std::uint64_t budget = kSingularScanBudget);

// x -> M x applied to the equation, i.e. F(M (X,Y,Z)^T).
Poly apply_projectivity(const Poly& f, const FqMatrix& m);

struct CurveReport {
    std::string field;
    std::string equation;
    unsigned degree = 0;
    std::uint64_t n_points = 0;
    std::vector<std::string> line_components;
    std::vector<std::vector<std::vector<std::uint32_t>>> missing_points; // point -> coord -> residues
    bool missing_collinear = true;
    SziklaiStatus sziklai = SziklaiStatus::NotApplicable;
    bool irreducibility_certificate = false;

    friend bool operator==(const CurveReport&, const CurveReport&) = default;
};

CurveReport analyze(const PlaneCurve& curve);

} // namespace fqc

#endif
