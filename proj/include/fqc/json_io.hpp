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

#ifndef FQC_JSON_IO_HPP
#define FQC_JSON_IO_HPP

// JSON forms of the library's values and reports. Keys keep declaration
// order so output is byte-stable.

#include <json.hpp>

#include "fqc/census.hpp"
#include "fqc/constructions.hpp"
#include "fqc/ideals.hpp"
#include "fqc/mindegree.hpp"

namespace fqc {

using Json = nlohmann::ordered_json;

// An element is its residue vector, constant term first.
Json element_to_json(const Field& field, FqElem a);
FqElem element_from_json(const Field& field, const Json& j);

Json point_to_json(const Field& field, const ProjPoint& p);
ProjPoint point_from_json(const Field& field, const Json& j);
Json pointset_to_json(const PointSet& s);

// [{"exps": [...], "coeff": [...]}, ...] in term order.
Json poly_to_json(const Poly& f);
Poly poly_from_json(const FieldPtr& field, std::size_t nvars, const Json& j);

Json field_to_json(const Field& field);

Json to_json(const CurveReport& r);
CurveReport curve_report_from_json(const Json& j);

Json to_json(const IdealReport& r);
Json to_json(const MinDegreeReport& r);
Json to_json(const ConstructionReport& r);
Json to_json(const CensusSpec& spec, const CensusReport& r);
Json to_json(const std::vector<FigureRow>& rows);

} // namespace fqc

#endif
