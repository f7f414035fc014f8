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

#include <benchmark/benchmark.h>

#include "fqc/census.hpp"
#include "fqc/constructions.hpp"
#include "fqc/mindegree.hpp"

using namespace fqc;

namespace {

const char* mode_name(ScanMode m) {
    switch (m) {
    case ScanMode::Parallel: return "parallel";
    case ScanMode::Serial: return "serial";
    case ScanMode::Reference: return "reference";
    }
    return "";
}

// range(0): q, range(1): degree, range(2): ScanMode
void BM_Census(benchmark::State& state) {
    const CensusSpec spec{Field::parse(std::to_string(state.range(0))), unsigned(state.range(1)),
                          CurveFilter::LineFree};
    const auto mode = ScanMode(state.range(2));
    state.SetLabel(mode_name(mode));
    std::uint64_t candidates = 0;
    for (auto _ : state) {
        const CensusReport r = census(spec, mode);
        candidates += r.candidates;
        benchmark::DoNotOptimize(r.spectrum);
    }
    state.counters["forms/s"] = benchmark::Counter(double(candidates), benchmark::Counter::kIsRate);
}

void census_args(benchmark::internal::Benchmark* b) {
    for (auto [q, d] : {std::pair{2, 4}, {3, 3}, {2, 5}})
        for (auto mode : {ScanMode::Reference, ScanMode::Serial, ScanMode::Parallel})
            b->Args({q, d, std::int64_t(mode)});
    b->ArgNames({"q", "d", "mode"})->Unit(benchmark::kMillisecond);
}

void BM_MinDegree(benchmark::State& state) {
    const FieldPtr F = Field::parse(std::to_string(state.range(0)));
    const auto mode = ScanMode(state.range(2));
    state.SetLabel(mode_name(mode));
    for (auto _ : state) benchmark::DoNotOptimize(verify_min_degree(F, unsigned(state.range(1)), kDefaultBudget, mode));
}

void mindegree_args(benchmark::internal::Benchmark* b) {
    for (auto mode : {ScanMode::Reference, ScanMode::Serial, ScanMode::Parallel}) b->Args({2, 3, std::int64_t(mode)});
    b->ArgNames({"q", "n", "mode"})->Unit(benchmark::kMillisecond);
}

void BM_LineFreeSearch(benchmark::State& state) {
    const FcParams p = plain_fc_params(Field::parse(std::to_string(state.range(0))), unsigned(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(search_line_free_c(p));
}

} // namespace

BENCHMARK(BM_Census)->Apply(census_args);
BENCHMARK(BM_MinDegree)->Apply(mindegree_args);
BENCHMARK(BM_LineFreeSearch)->Args({7, 13})->Args({9, 15})->ArgNames({"q", "d"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
