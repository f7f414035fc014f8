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

#include "fqc/theorem.hpp"

#include <algorithm>

namespace fqc {

std::uint64_t construction_target(std::uint64_t q, unsigned d) {
    if (d < q + 1) throw Error(Errc::BadDegreeRange, "constructions start at d = q+1");
    if (d == q + 1) return q * q;
    if (d <= 2 * q - 1) return q * q + d - q + 1;
    return q * q + q;
}

bool BatteryCensus::passed() const {
    return (!expected_max || report.max_points() == expected_max) &&
           (!expected_second || report.second_max_points() == expected_second);
}

bool BatteryReport::passed() const {
    return std::all_of(constructions.begin(), constructions.end(), [](const auto& c) { return c.passed(); }) &&
           std::all_of(censuses.begin(), censuses.end(), [](const auto& c) { return c.passed(); });
}

BatteryReport main_theorem_battery(const FieldPtr& field, std::uint64_t budget) {
    const unsigned q = field->q();
    BatteryReport rep;
    rep.q = q;
    for (unsigned d = q + 1; d <= 2 * q + 1; ++d) {
        BatteryItem item;
        item.d = d;
        item.expected = construction_target(q, d);
        std::optional<PlaneCurve> curve;
        if (d == q + 1) {
            item.family = "qplus1";
            curve.emplace(build_qplus1(default_qplus1_params(field)));
        } else if (d <= 2 * q - 1) {
            item.family = "fc";
            FcParams p = plain_fc_params(field, d);
            if (auto c = search_line_free_c(p)) p.c = *c;
            curve.emplace(build_fc(p));
        } else {
            item.family = "remark";
            curve.emplace(build_remark_curve(field, d).curve);
        }
        item.equation = curve->equation().to_string();
        item.points = curve->n_points();
        item.line_free = line_components(*curve).empty();
        item.line_free_required = q > 3 || d == q + 1;
        rep.constructions.push_back(std::move(item));
    }
    if (q == 2) {
        const std::uint64_t th = theta(q, 2);
        for (unsigned d : {3u, 4u, 5u}) {
            BatteryCensus c;
            c.d = d;
            c.report = census({field, d, CurveFilter::LineFree, budget});
            // d = q+1: Sziklai bound is sharp and the second value is q^2;
            // d >= q+2: every point of the plane is attainable
            if (d == q + 1) {
                c.expected_max = (d - 1) * q + 1;
                c.expected_second = q * q;
            } else {
                c.expected_max = th;
            }
            rep.censuses.push_back(std::move(c));
        }
    }
    return rep;
}

} // namespace fqc
