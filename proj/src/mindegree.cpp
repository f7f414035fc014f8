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

#include "fqc/mindegree.hpp"

#include <algorithm>

#include "fqc/scan.hpp"

namespace fqc {

bool MinDegreeReport::passed() const {
    return witness_ok && std::all_of(below.begin(), below.end(), [](const MinDegreeLevel& l) { return l.hits == 0; });
}

Poly min_degree_witness(const FieldPtr& field, unsigned n, unsigned d) {
    const unsigned q = field->q();
    const unsigned base = (q - 1) * n;
    if (d < base) throw Error(Errc::InvalidArgument, "witness needs d >= (q-1)n");
    Poly f = Poly::variable(field, n + 1, 0, d - base);
    const Poly x0 = Poly::variable(field, n + 1, 0, q - 1);
    for (unsigned i = 1; i <= n; ++i) f = f * (Poly::variable(field, n + 1, i, q - 1) - x0);
    return f;
}

bool cuts_out_all_but_origin(const Poly& f) {
    const unsigned n = unsigned(f.nvars() - 1);
    for (const auto& p : enumerate_proj(f.field_ptr(), n)) {
        const bool origin = std::all_of(p.coords.begin() + 1, p.coords.end(), [](FqElem c) { return c.is_zero(); });
        if (f.eval(p).is_zero() == origin) return false;
    }
    return true;
}

namespace {

struct HitCounter {
    std::size_t origin = 0;
    std::uint64_t candidates = 0;
    std::uint64_t hits = 0;
    std::optional<std::uint64_t> first;

    void visit(std::uint64_t rank, std::span<const std::uint32_t>, std::span<const FqElem> values) {
        ++candidates;
        if (values[origin].is_zero()) return;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (i != origin && !values[i].is_zero()) return;
        ++hits;
        if (!first || rank < *first) first = rank;
    }

    void merge(const HitCounter& o) {
        candidates += o.candidates;
        hits += o.hits;
        if (o.first && (!first || *o.first < *first)) first = o.first;
    }
};

} // namespace

MinDegreeReport verify_min_degree(const FieldPtr& field, unsigned n, std::uint64_t budget, ScanMode mode) {
    if (n < 1) throw Error(Errc::InvalidArgument, "need n >= 1");
    MinDegreeReport rep;
    rep.q = field->q();
    rep.n = n;
    rep.threshold = (rep.q - 1) * n + 1;
    const PointSet points = enumerate_proj(field, n);
    std::vector<FqElem> origin_coords(n + 1, Field::zero());
    origin_coords[0] = Field::one();
    const std::size_t origin = std::size_t(
        std::find(points.begin(), points.end(), ProjPoint{origin_coords}) - points.begin());

    // sizes are checked up front so an over-budget request fails fast
    std::vector<std::vector<Monomial>> bases;
    for (unsigned d = 1; d < rep.threshold; ++d) {
        bases.push_back(monomials_of_degree(n + 1, d));
        std::uint64_t size = 0;
        try {
            size = scan::NormalizedSpace(rep.q, bases.back().size()).size();
        } catch (const Error&) {
            throw Error(Errc::BudgetExceeded, "form count overflows at degree " + std::to_string(d));
        }
        if (size > budget)
            throw Error(Errc::BudgetExceeded, "degree " + std::to_string(d) + " has " + std::to_string(size) +
                                                  " forms, budget " + std::to_string(budget));
    }

    for (unsigned d = 1; d < rep.threshold; ++d) {
        const auto& basis = bases[d - 1];
        const scan::EvalTable table = scan::make_eval_table(points, basis);
        const scan::NormalizedSpace space(rep.q, basis.size());
        auto make = [&] { return HitCounter{origin, 0, 0, std::nullopt}; };
        HitCounter acc = make();
        auto visit = [&](std::uint64_t r, auto dg, auto v) { acc.visit(r, dg, v); };
        switch (mode) {
        case ScanMode::Parallel: acc = scan::scan_parallel<HitCounter>(table, space, 0, space.size(), make); break;
        case ScanMode::Serial:
            scan::scan_incremental(table, scan::DeltaTable(table), space, 0, space.size(), visit);
            break;
        case ScanMode::Reference: scan::scan_reference(table, space, 0, space.size(), visit); break;
        }
        rep.below.push_back({d, acc.candidates, acc.hits, acc.first});
    }

    const Poly w = min_degree_witness(field, n, rep.threshold);
    rep.witness = w.to_string();
    rep.witness_ok = cuts_out_all_but_origin(w);
    return rep;
}

} // namespace fqc
