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

#ifndef FQC_CENSUS_HPP
#define FQC_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqc/curves.hpp"

namespace fqc {

enum class CurveFilter { All, LineFree, LineFreeCertified };

std::string_view to_string(CurveFilter filter);
CurveFilter parse_filter(std::string_view text);

// How the candidate range is walked. All modes give identical reports.
enum class ScanMode { Parallel, Serial, Reference };

constexpr std::uint64_t kDefaultBudget = 20'000'000;
constexpr std::size_t kMaxScanPoints = 512;

struct CensusSpec {
    FieldPtr field;
    unsigned degree = 1;
    CurveFilter filter = CurveFilter::LineFree;
    std::uint64_t budget = kDefaultBudget;
};

// (q^{C(d+2,2)} - 1)/(q - 1); throws BudgetExceeded past the budget.
std::uint64_t candidate_count(const CensusSpec& spec);

// Candidate with the given rank (monomials_of_degree(3, d) basis).
Poly form_at(const FieldPtr& field, unsigned degree, std::uint64_t rank);

// Streams the filtered candidates in rank order (slow path; no kernels).
void enumerate_curves(const CensusSpec& spec, const std::function<void(std::uint64_t, const PlaneCurve&)>& fn);

struct CensusReport {
    std::uint64_t candidates = 0; // enumerated
    std::uint64_t accepted = 0;   // passed the filter; the spectrum sums to this
    std::map<std::uint64_t, std::uint64_t> spectrum;  // N_q -> number of curves
    std::map<std::uint64_t, std::uint64_t> witnesses; // N_q -> least rank

    std::optional<std::uint64_t> max_points() const;
    // Largest N strictly below max_points().
    std::optional<std::uint64_t> second_max_points() const;

    void merge(const CensusReport& other);
    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

CensusReport census(const CensusSpec& spec, ScanMode mode = ScanMode::Parallel);

// Census over block `part` of `parts` equal rank ranges. Merging all parts
// reproduces census(spec).
CensusReport census_partition(const CensusSpec& spec, std::uint64_t part, std::uint64_t parts,
                              ScanMode mode = ScanMode::Parallel);

// "N,count,witness_rank,witness" rows.
std::string spectrum_csv(const CensusSpec& spec, const CensusReport& report);

enum class FigureStatus { AttainedMax, AttainedSecond, ForbiddenGap };

std::string_view to_string(FigureStatus status);

struct FigureRow {
    unsigned d = 0;
    std::uint64_t n = 0;
    FigureStatus status = FigureStatus::AttainedMax;

    friend bool operator==(const FigureRow&, const FigureRow&) = default;
};

// M_q(d) and 2M_q(d) for q+1 <= d <= d_max from the closed forms, with the
// values strictly between them marked forbidden. For q <= 3 only the
// degrees whose values hold for every q (d = q+1, and M for d >= q+2) are
// emitted.
std::vector<FigureRow> figure_data(std::uint64_t q, unsigned d_max);
std::string figure_csv(const std::vector<FigureRow>& rows);

} // namespace fqc

#endif
