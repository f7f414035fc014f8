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

#include "fqc/json_io.hpp"

namespace fqc {

Json element_to_json(const Field& field, FqElem a) { return field.coeffs(a); }

FqElem element_from_json(const Field& field, const Json& j) {
    if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
    if (!j.is_array() || j.size() > field.e())
        throw Error(Errc::ParseError, "element must be an array of at most " + std::to_string(field.e()) + " residues");
    std::vector<std::uint32_t> c;
    for (const auto& x : j) {
        const auto v = x.get<std::int64_t>();
        if (v < 0 || v >= std::int64_t(field.p())) throw Error(Errc::ParseError, "residue out of range");
        c.push_back(std::uint32_t(v));
    }
    return field.from_coeffs(c);
}

Json point_to_json(const Field& field, const ProjPoint& p) {
    Json out = Json::array();
    for (auto c : p.coords) out.push_back(element_to_json(field, c));
    return out;
}

ProjPoint point_from_json(const Field& field, const Json& j) {
    std::vector<FqElem> coords;
    for (const auto& c : j) coords.push_back(element_from_json(field, c));
    return normalize(field, std::move(coords));
}

Json pointset_to_json(const PointSet& s) {
    Json out = Json::array();
    for (const auto& p : s) out.push_back(point_to_json(*s.field_ptr(), p));
    return out;
}

Json poly_to_json(const Poly& f) {
    Json out = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json t;
        t["exps"] = m.exps;
        t["coeff"] = element_to_json(f.field(), c);
        out.push_back(std::move(t));
    }
    return out;
}

Poly poly_from_json(const FieldPtr& field, std::size_t nvars, const Json& j) {
    Poly f(field, nvars);
    try {
        for (const auto& t : j) {
            Monomial m{t.at("exps").get<std::vector<std::uint16_t>>()};
            if (m.exps.size() != nvars) throw Error(Errc::ArityMismatch, "exponent vector length");
            f.add_term(m, element_from_json(*field, t.at("coeff")));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    return f;
}

Json field_to_json(const Field& field) {
    Json j;
    j["p"] = field.p();
    j["e"] = field.e();
    j["q"] = field.q();
    j["modulus"] = field.modulus();
    j["primitive_element"] = element_to_json(field, field.primitive_element());
    return j;
}

Json to_json(const CurveReport& r) {
    Json j;
    j["field"] = r.field;
    j["equation"] = r.equation;
    j["degree"] = r.degree;
    j["n_points"] = r.n_points;
    j["line_components"] = r.line_components;
    j["missing_points"] = r.missing_points;
    j["missing_collinear"] = r.missing_collinear;
    j["sziklai"] = std::string(to_string(r.sziklai));
    j["irreducibility_certificate"] = r.irreducibility_certificate;
    return j;
}

CurveReport curve_report_from_json(const Json& j) {
    try {
        CurveReport r;
        r.field = j.at("field").get<std::string>();
        r.equation = j.at("equation").get<std::string>();
        r.degree = j.at("degree").get<unsigned>();
        r.n_points = j.at("n_points").get<std::uint64_t>();
        r.line_components = j.at("line_components").get<std::vector<std::string>>();
        r.missing_points = j.at("missing_points").get<decltype(r.missing_points)>();
        r.missing_collinear = j.at("missing_collinear").get<bool>();
        r.sziklai = sziklai_status_from_string(j.at("sziklai").get<std::string>());
        r.irreducibility_certificate = j.at("irreducibility_certificate").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

Json to_json(const IdealReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["q"] = r.q;
    j["locus_size"] = r.locus_size;
    Json rows = Json::array();
    for (const auto& c : r.per_degree) {
        Json row;
        row["d"] = c.d;
        row["ideal_dim"] = c.ideal_dim;
        row["vanishing_dim"] = c.vanishing_dim;
        row["equal"] = c.equal;
        rows.push_back(std::move(row));
    }
    j["per_degree"] = std::move(rows);
    return j;
}

Json to_json(const MinDegreeReport& r) {
    Json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["threshold"] = r.threshold;
    Json rows = Json::array();
    for (const auto& l : r.below) {
        Json row;
        row["d"] = l.d;
        row["forms"] = l.candidates;
        row["hits"] = l.hits;
        rows.push_back(std::move(row));
    }
    j["below_threshold"] = std::move(rows);
    j["witness"] = r.witness;
    j["witness_ok"] = r.witness_ok;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const ConstructionReport& r) {
    Json j;
    j["expected_points"] = r.expected_points;
    j["points"] = r.points;
    j["expect_line_free"] = r.expect_line_free;
    j["line_components"] = r.line_components;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const CensusSpec& spec, const CensusReport& r) {
    Json j;
    j["field"] = spec.field->spec();
    j["degree"] = spec.degree;
    j["filter"] = std::string(to_string(spec.filter));
    j["candidates"] = r.candidates;
    j["accepted"] = r.accepted;
    if (auto m = r.max_points()) j["M"] = *m;
    else j["M"] = nullptr;
    if (auto m2 = r.second_max_points()) j["M2"] = *m2;
    else j["M2"] = nullptr;
    Json rows = Json::array();
    for (const auto& [n, count] : r.spectrum) {
        Json row;
        row["N"] = n;
        row["count"] = count;
        row["witness_rank"] = r.witnesses.at(n);
        row["witness"] = form_at(spec.field, spec.degree, r.witnesses.at(n)).to_string();
        rows.push_back(std::move(row));
    }
    j["spectrum"] = std::move(rows);
    return j;
}

Json to_json(const std::vector<FigureRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["d"] = r.d;
        row["N"] = r.n;
        row["status"] = std::string(to_string(r.status));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace fqc
