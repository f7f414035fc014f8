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

#include "fqc/census.hpp"

#include <bitset>
#include <sstream>

#include "fqc/scan.hpp"

namespace fqc {

std::string_view to_string(CurveFilter filter) {
    switch (filter) {
    case CurveFilter::All: return "all";
    case CurveFilter::LineFree: return "line-free";
    case CurveFilter::LineFreeCertified: return "line-free+irreducibility-certificate";
    }
    return "all";
}

CurveFilter parse_filter(std::string_view text) {
    for (auto f : {CurveFilter::All, CurveFilter::LineFree, CurveFilter::LineFreeCertified})
        if (to_string(f) == text) return f;
    if (text == "certified") return CurveFilter::LineFreeCertified;
    throw Error(Errc::ParseError, "unknown filter '" + std::string(text) + "'");
}

std::uint64_t candidate_count(const CensusSpec& spec) {
    const std::size_t n = monomials_of_degree(3, spec.degree).size();
    std::uint64_t count = 0;
    try {
        count = scan::NormalizedSpace(spec.field->q(), n).size();
    } catch (const Error&) {
        throw Error(Errc::BudgetExceeded, "candidate count overflows");
    }
    if (count > spec.budget)
        throw Error(Errc::BudgetExceeded, std::to_string(count) + " candidates exceed budget " + std::to_string(spec.budget));
    return count;
}

Poly form_at(const FieldPtr& field, unsigned degree, std::uint64_t rank) {
    const auto basis = monomials_of_degree(3, degree);
    const scan::NormalizedSpace space(field->q(), basis.size());
    std::vector<std::uint32_t> digits(basis.size());
    space.decode(rank, digits);
    Poly f(field, 3);
    for (std::size_t j = 0; j < basis.size(); ++j) f.add_term(basis[j], FqElem{digits[j]});
    return f;
}

namespace {

bool passes_filter(const PlaneCurve& c, CurveFilter filter) {
    if (filter == CurveFilter::All) return true;
    if (!line_components(c).empty()) return false;
    if (filter == CurveFilter::LineFreeCertified) return irreducibility_certificate(c);
    return true;
}

using Mask = std::bitset<kMaxScanPoints>;

// Precomputed data shared read-only by all census accumulators.
struct CensusContext {
    FieldPtr field;
    unsigned degree;
    CurveFilter filter;
    std::size_t monomials;
    std::vector<Mask> line_masks;
    // restriction[line][mono * (degree+1) + k]: coefficient of s^k t^{d-k}
    std::vector<std::vector<FqElem>> restriction;

    CensusContext(const FieldPtr& f, unsigned d, CurveFilter flt, const PointSet& points,
                  const std::vector<Monomial>& basis)
        : field(f), degree(d), filter(flt), monomials(basis.size()) {
        for (const auto& line : enumerate_lines_p2(field)) {
            Mask m;
            for (std::size_t i = 0; i < points.size(); ++i)
                if (line.eval(points.points()[i]).is_zero()) m.set(i);
            line_masks.push_back(m);
            const PointSet on = line_points(line);
            const ProjPoint& P = on.points()[0];
            const ProjPoint& Q = on.points()[1];
            std::vector<FqElem> table(basis.size() * (d + 1), Field::zero());
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const Poly r = restrict_to_line(Poly::term(field, basis[j], Field::one()), P, Q);
                for (const auto& [mono, c] : r.terms()) table[j * (d + 1) + mono.exps[0]] = c;
            }
            restriction.push_back(std::move(table));
        }
    }

    bool line_divides(std::size_t line, std::span<const std::uint32_t> digits) const {
        const Field& F = *field;
        const auto& table = restriction[line];
        for (unsigned k = 0; k <= degree; ++k) {
            FqElem acc = Field::zero();
            for (std::size_t j = 0; j < monomials; ++j)
                if (digits[j]) acc = F.add(acc, F.mul(FqElem{digits[j]}, table[j * (degree + 1) + k]));
            if (!acc.is_zero()) return false;
        }
        return true;
    }
};

struct CensusAccumulator {
    const CensusContext* ctx;
    CensusReport report;

    void visit(std::uint64_t rank, std::span<const std::uint32_t> digits, std::span<const FqElem> values) {
        ++report.candidates;
        Mask zeros;
        std::uint64_t n = 0;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i].is_zero()) {
                zeros.set(i);
                ++n;
            }
        if (ctx->filter != CurveFilter::All) {
            for (std::size_t l = 0; l < ctx->line_masks.size(); ++l)
                if ((zeros & ctx->line_masks[l]) == ctx->line_masks[l] && ctx->line_divides(l, digits)) return;
            if (ctx->filter == CurveFilter::LineFreeCertified) {
                const std::int64_t q = ctx->field->q();
                if (std::int64_t(n) < (std::int64_t(ctx->degree) - 2) * q + 3) return;
            }
        }
        ++report.accepted;
        ++report.spectrum[n];
        report.witnesses.try_emplace(n, rank);
    }

    void merge(const CensusAccumulator& other) { report.merge(other.report); }
};

} // namespace

void enumerate_curves(const CensusSpec& spec, const std::function<void(std::uint64_t, const PlaneCurve&)>& fn) {
    const std::uint64_t total = candidate_count(spec);
    for (std::uint64_t r = 0; r < total; ++r) {
        PlaneCurve c(form_at(spec.field, spec.degree, r));
        if (passes_filter(c, spec.filter)) fn(r, c);
    }
}

std::optional<std::uint64_t> CensusReport::max_points() const {
    if (spectrum.empty()) return std::nullopt;
    return spectrum.rbegin()->first;
}

std::optional<std::uint64_t> CensusReport::second_max_points() const {
    if (spectrum.size() < 2) return std::nullopt;
    return std::next(spectrum.rbegin())->first;
}

void CensusReport::merge(const CensusReport& other) {
    candidates += other.candidates;
    accepted += other.accepted;
    for (const auto& [n, c] : other.spectrum) spectrum[n] += c;
    for (const auto& [n, r] : other.witnesses) {
        auto [it, inserted] = witnesses.try_emplace(n, r);
        if (!inserted && r < it->second) it->second = r;
    }
}

CensusReport census_partition(const CensusSpec& spec, std::uint64_t part, std::uint64_t parts, ScanMode mode) {
    if (parts == 0 || part >= parts) throw Error(Errc::BadPartition, "need 0 <= part < parts");
    const std::uint64_t total = candidate_count(spec);
    const auto basis = monomials_of_degree(3, spec.degree);
    const PointSet points = enumerate_proj(spec.field, 2);
    if (points.size() > kMaxScanPoints) throw Error(Errc::BudgetExceeded, "too many points for the census kernel");
    const CensusContext ctx(spec.field, spec.degree, spec.filter, points, basis);
    const scan::EvalTable table = scan::make_eval_table(points, basis);
    const scan::NormalizedSpace space(spec.field->q(), basis.size());

    // 128-bit products keep the block bounds exact for large totals
    const auto bound = [&](std::uint64_t i) {
        return std::uint64_t((unsigned __int128)total * i / parts);
    };
    const std::uint64_t lo = bound(part), hi = bound(part + 1);

    auto make = [&] { return CensusAccumulator{&ctx, {}}; };
    switch (mode) {
    case ScanMode::Parallel:
        return scan::scan_parallel<CensusAccumulator>(table, space, lo, hi, make).report;
    case ScanMode::Serial: {
        CensusAccumulator acc = make();
        const scan::DeltaTable deltas(table);
        scan::scan_incremental(table, deltas, space, lo, hi,
                               [&](std::uint64_t r, auto d, auto v) { acc.visit(r, d, v); });
        return acc.report;
    }
    case ScanMode::Reference: {
        CensusAccumulator acc = make();
        scan::scan_reference(table, space, lo, hi, [&](std::uint64_t r, auto d, auto v) { acc.visit(r, d, v); });
        return acc.report;
    }
    }
    return {};
}

CensusReport census(const CensusSpec& spec, ScanMode mode) { return census_partition(spec, 0, 1, mode); }

std::string spectrum_csv(const CensusSpec& spec, const CensusReport& report) {
    std::ostringstream os;
    os << "N,count,witness_rank,witness\r\n";
    for (const auto& [n, count] : report.spectrum) {
        const std::uint64_t rank = report.witnesses.at(n);
        os << n << ',' << count << ',' << rank << ",\"" << form_at(spec.field, spec.degree, rank).to_string()
           << "\"\r\n";
    }
    return os.str();
}

std::string_view to_string(FigureStatus status) {
    switch (status) {
    case FigureStatus::AttainedMax: return "attained-max";
    case FigureStatus::AttainedSecond: return "attained-second";
    case FigureStatus::ForbiddenGap: return "forbidden-gap";
    }
    return "attained-max";
}

std::vector<FigureRow> figure_data(std::uint64_t q, unsigned d_max) {
    std::vector<FigureRow> rows;
    const std::uint64_t th = theta(q, 2);
    for (unsigned d = unsigned(q) + 1; d <= d_max; ++d) {
        std::uint64_t m = 0;
        std::optional<std::uint64_t> m2;
        if (d == q + 1) {
            m = q * q + 1;
            m2 = q * q;
        } else {
            m = th;
            if (q > 3) m2 = d >= 2 * q - 1 ? q * q + q : q * q + d - q + 1;
        }
        rows.push_back({d, m, FigureStatus::AttainedMax});
        if (!m2) continue;
        for (std::uint64_t n = m - 1; n > *m2; --n) rows.push_back({d, n, FigureStatus::ForbiddenGap});
        rows.push_back({d, *m2, FigureStatus::AttainedSecond});
    }
    return rows;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
    std::ostringstream os;
    os << "d,N,status\r\n";
    for (const auto& r : rows) os << r.d << ',' << r.n << ',' << to_string(r.status) << "\r\n";
    return os.str();
}

} // namespace fqc
