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

#include <map>
#include <random>

#include "fqc/scan.hpp"

using namespace fqc;
using namespace fqc::scan;

namespace {

struct Trace {
    std::vector<std::uint64_t> ranks;
    std::vector<std::vector<FqElem>> values;

    void visit(std::uint64_t r, std::span<const std::uint32_t>, std::span<const FqElem> v) {
        ranks.push_back(r);
        values.emplace_back(v.begin(), v.end());
    }
    void merge(const Trace& o) {
        ranks.insert(ranks.end(), o.ranks.begin(), o.ranks.end());
        values.insert(values.end(), o.values.begin(), o.values.end());
    }
};

} // namespace

TEST_SUITE("scan") {

TEST_CASE("normalized space size and order") {
    CHECK(NormalizedSpace(2, 10).size() == 1023);
    CHECK(NormalizedSpace(2, 6).size() == 63);
    CHECK(NormalizedSpace(3, 15).size() == (14348907ull - 1) / 2);
    CHECK_ERRC(NormalizedSpace(2, 70), Errc::BudgetExceeded);

    const NormalizedSpace s(3, 3);
    std::vector<std::uint32_t> prev, cur(3);
    for (std::uint64_t r = 0; r < s.size(); ++r) {
        s.decode(r, cur);
        CHECK(s.encode(cur) == r);
        const auto lead = std::find_if(cur.begin(), cur.end(), [](std::uint32_t x) { return x != 0; });
        REQUIRE(lead != cur.end());
        CHECK(*lead == 1u);
        if (!prev.empty()) CHECK(prev < cur);
        prev = cur;
    }
    CHECK_ERRC(s.decode(s.size(), cur), Errc::InvalidArgument);
}

TEST_CASE("incremental and parallel scans agree with the reference") {
    for (auto [spec, d] : {std::pair{"2", 3u}, {"3", 2u}, {"4", 2u}, {"2", 4u}}) {
        auto F = Field::parse(spec);
        const auto basis = monomials_of_degree(3, d);
        const EvalTable table = make_eval_table(enumerate_proj(F, 2), basis);
        const NormalizedSpace space(F->q(), basis.size());
        const DeltaTable deltas(table);
        std::mt19937_64 rng(test_seed() + d);
        for (int trial = 0; trial < 6; ++trial) {
            std::uint64_t lo = rng() % space.size(), hi = rng() % (space.size() + 1);
            if (trial == 0) lo = 0, hi = space.size();
            if (lo > hi) std::swap(lo, hi);
            Trace ref, inc;
            scan_reference(table, space, lo, hi, [&](auto r, auto dg, auto v) { ref.visit(r, dg, v); });
            scan_incremental(table, deltas, space, lo, hi, [&](auto r, auto dg, auto v) { inc.visit(r, dg, v); });
            const Trace par = scan_parallel<Trace>(table, space, lo, hi, [] { return Trace{}; }, 7);
            CHECK(ref.ranks.size() == hi - lo);
            CHECK(inc.ranks == ref.ranks);
            CHECK(inc.values == ref.values);
            CHECK(par.ranks == ref.ranks);
            CHECK(par.values == ref.values);
        }
    }
}

TEST_CASE("evaluation table entries") {
    auto F3 = Field::make(3);
    const PointSet pts = enumerate_proj(F3, 2);
    const auto basis = monomials_of_degree(3, 2);
    const EvalTable t = make_eval_table(pts, basis);
    CHECK(t.points == 13);
    CHECK(t.monomials == 6);
    for (std::size_t p = 0; p < pts.size(); ++p)
        for (std::size_t j = 0; j < basis.size(); ++j)
            CHECK(t.at(p, j) == Poly::term(F3, basis[j], Field::one()).eval(pts.points()[p]));
}

} // TEST_SUITE
