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

#include "fqc/curves.hpp"

#include <algorithm>
#include <array>

namespace fqc {

namespace {

std::uint64_t count_zeros(const Poly& f) {
    std::uint64_t n = 0;
    for (const auto& p : enumerate_proj(f.field_ptr(), 2))
        if (f.eval(p).is_zero()) ++n;
    return n;
}

// Flat term list with per-variable power tables, for hot evaluation loops.
class TernaryEvaluator {
public:
    explicit TernaryEvaluator(const Poly& f) : field_(&f.field()) {
        for (const auto& [m, c] : f.terms()) {
            terms_.push_back({c, {m.exps[0], m.exps[1], m.exps[2]}});
            for (int i = 0; i < 3; ++i) max_exp_ = std::max<unsigned>(max_exp_, m.exps[i]);
        }
    }

    FqElem operator()(const std::array<FqElem, 3>& pt, std::vector<FqElem>& scratch) const {
        const Field& F = *field_;
        const std::size_t stride = max_exp_ + 1;
        scratch.resize(3 * stride);
        for (int i = 0; i < 3; ++i) {
            FqElem* pw = scratch.data() + i * stride;
            pw[0] = Field::one();
            for (unsigned k = 1; k <= max_exp_; ++k) pw[k] = F.mul(pw[k - 1], pt[i]);
        }
        FqElem acc = Field::zero();
        for (const auto& t : terms_) {
            FqElem v = F.mul(t.coeff, scratch[t.exps[0]]);
            v = F.mul(v, scratch[stride + t.exps[1]]);
            v = F.mul(v, scratch[2 * stride + t.exps[2]]);
            acc = F.add(acc, v);
        }
        return acc;
    }

private:
    struct Term {
        FqElem coeff;
        std::array<std::uint16_t, 3> exps;
    };
    const Field* field_;
    std::vector<Term> terms_;
    unsigned max_exp_ = 0;
};

} // namespace

PlaneCurve::PlaneCurve(Poly equation) : equation_(std::move(equation)), degree_(0), n_points_(0) {
    if (equation_.nvars() != 3) throw Error(Errc::ArityMismatch, "plane curves need a ternary form");
    const Homogeneity h = equation_.homogeneity();
    if (equation_.is_zero() || !h.homogeneous || *h.degree < 1)
        throw Error(Errc::NotHomogeneous, "curve equation must be a nonzero form of degree >= 1");
    degree_ = *h.degree;
    n_points_ = count_zeros(equation_);
}

std::uint64_t count_points(const PlaneCurve& curve) { return curve.n_points(); }

std::vector<Poly> line_components(const PlaneCurve& curve) {
    std::vector<Poly> out;
    const Poly& f = curve.equation();
    for (auto& line : enumerate_lines_p2(curve.field_ptr())) {
        // a component line carries all of its F_q-points
        const PointSet pts = line_points(line);
        const bool all_on = std::all_of(pts.begin(), pts.end(), [&](const ProjPoint& p) { return f.eval(p).is_zero(); });
        if (all_on && divides_linear(line, f)) out.push_back(std::move(line));
    }
    return out;
}

MissingPoints missing_points(const PlaneCurve& curve) {
    std::vector<ProjPoint> out;
    for (const auto& p : enumerate_proj(curve.field_ptr(), 2))
        if (!curve.equation().eval(p).is_zero()) out.push_back(p);
    PointSet pts(curve.field_ptr(), 2, std::move(out));
    const bool col = collinear(pts);
    return {std::move(pts), col};
}

std::string_view to_string(SziklaiStatus status) {
    switch (status) {
    case SziklaiStatus::Within: return "within";
    case SziklaiStatus::Exceeds: return "exceeds";
    case SziklaiStatus::ExceptionCurve: return "exception-curve";
    case SziklaiStatus::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

SziklaiStatus sziklai_status_from_string(std::string_view text) {
    for (auto s : {SziklaiStatus::Within, SziklaiStatus::Exceeds, SziklaiStatus::ExceptionCurve, SziklaiStatus::NotApplicable})
        if (to_string(s) == text) return s;
    throw Error(Errc::ParseError, "unknown Sziklai status '" + std::string(text) + "'");
}

SziklaiStatus sziklai_classify(const PlaneCurve& curve) {
    if (!line_components(curve).empty()) return SziklaiStatus::NotApplicable;
    const std::uint64_t q = curve.field().q();
    const std::uint64_t d = curve.degree();
    const std::uint64_t n = curve.n_points();
    if (n <= (d - 1) * q + 1) return SziklaiStatus::Within;
    if (q == 4 && d == 4 && n == 14) return SziklaiStatus::ExceptionCurve;
    return SziklaiStatus::Exceeds;
}

bool irreducibility_certificate(const PlaneCurve& curve) {
    if (!line_components(curve).empty())
        throw Error(Errc::HasLineComponent, "certificate applies only to curves without F_q-line components");
    const std::int64_t q = curve.field().q();
    const std::int64_t d = curve.degree();
    return std::int64_t(curve.n_points()) >= (d - 2) * q + 3;
}

SingularSearch singular_points_ext(const PlaneCurve& curve, unsigned m, std::uint64_t budget) {
    if (m < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < m; ++i) {
        order *= curve.field().q();
        if (order > Field::kMaxOrder) throw Error(Errc::BudgetExceeded, "extension field too large");
    }
    if (order * order > budget)
        throw Error(Errc::BudgetExceeded, "scan of P^2(F_" + std::to_string(order) + ") exceeds budget");

    SingularSearch out{extend(curve.field_ptr(), m), {}};
    const Field& E = *out.extension.ext;
    const Poly f = curve.equation().embedded(out.extension);
    const TernaryEvaluator ev_f(f);
    const TernaryEvaluator ev_dx(f.derivative(0));
    const TernaryEvaluator ev_dy(f.derivative(1));
    const TernaryEvaluator ev_dz(f.derivative(2));
    const std::uint32_t Q = E.q();

    auto singular_at = [&](const std::array<FqElem, 3>& pt, std::vector<FqElem>& scratch) {
        return ev_f(pt, scratch).is_zero() && ev_dx(pt, scratch).is_zero() && ev_dy(pt, scratch).is_zero() &&
               ev_dz(pt, scratch).is_zero();
    };

    std::vector<FqElem> scratch;
    if (singular_at({Field::zero(), Field::zero(), Field::one()}, scratch))
        out.points.push_back(ProjPoint{{Field::zero(), Field::zero(), Field::one()}});
    for (std::uint32_t z = 0; z < Q; ++z) {
        const std::array<FqElem, 3> pt{Field::zero(), Field::one(), FqElem{z}};
        if (singular_at(pt, scratch)) out.points.push_back(ProjPoint{{pt.begin(), pt.end()}});
    }

    // points (1, y, z): rows in y are independent
    std::vector<std::vector<ProjPoint>> rows(Q);
#pragma omp parallel
    {
        std::vector<FqElem> local;
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t y = 0; y < std::int64_t(Q); ++y)
            for (std::uint32_t z = 0; z < Q; ++z) {
                const std::array<FqElem, 3> pt{Field::one(), FqElem{std::uint32_t(y)}, FqElem{z}};
                if (singular_at(pt, local)) rows[std::size_t(y)].push_back(ProjPoint{{pt.begin(), pt.end()}});
            }
    }
    for (auto& r : rows)
        for (auto& p : r) out.points.push_back(std::move(p));
    std::sort(out.points.begin(), out.points.end());
    return out;
}

Poly apply_projectivity(const Poly& f, const FqMatrix& m) {
    if (m.rows() != f.nvars() || m.cols() != f.nvars())
        throw Error(Errc::DimensionMismatch, "matrix size differs from number of variables");
    std::vector<Poly> images;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        std::vector<FqElem> row(f.nvars());
        for (std::size_t j = 0; j < f.nvars(); ++j) row[j] = m.at(i, j);
        images.push_back(Poly::linear(f.field_ptr(), row));
    }
    return f.substitute(images);
}

CurveReport analyze(const PlaneCurve& curve) {
    CurveReport r;
    r.field = curve.field().spec();
    r.equation = curve.equation().to_string();
    r.degree = curve.degree();
    r.n_points = curve.n_points();
    const auto lines = line_components(curve);
    for (const auto& l : lines) r.line_components.push_back(l.to_string());
    const MissingPoints missing = missing_points(curve);
    for (const auto& p : missing.points) {
        std::vector<std::vector<std::uint32_t>> coords;
        for (auto c : p.coords) coords.push_back(curve.field().coeffs(c));
        r.missing_points.push_back(std::move(coords));
    }
    r.missing_collinear = missing.collinear;
    r.sziklai = sziklai_classify(curve);
    r.irreducibility_certificate = lines.empty() && irreducibility_certificate(curve);
    return r;
}

} // namespace fqc
