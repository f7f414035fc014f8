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

#ifndef FQC_THEOREM_HPP
#define FQC_THEOREM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqc/census.hpp"
#include "fqc/constructions.hpp"

namespace fqc {

// Expected N_q of the construction used at degree d:
//   d = q+1: q^2;  q+2 <= d <= 2q-1: q^2+d-q+1;  d >= 2q: q^2+q.
std::uint64_t construction_target(std::uint64_t q, unsigned d);

struct BatteryItem {
    unsigned d = 0;
    std::string family; // "qplus1", "fc" or "remark"
    std::string equation;
    std::uint64_t expected = 0;
    std::uint64_t points = 0;
    bool line_free = false;
    bool line_free_required = true;

    bool passed() const noexcept { return points == expected && (line_free || !line_free_required); }
};

struct BatteryCensus {
    unsigned d = 0;
    CensusReport report;
    std::optional<std::uint64_t> expected_max;
    std::optional<std::uint64_t> expected_second;

    bool passed() const;
};

struct BatteryReport {
    std::uint32_t q = 0;
    std::vector<BatteryItem> constructions;
    std::vector<BatteryCensus> censuses;

    bool passed() const;
};

// Constructions for q+1 <= d <= 2q+1; censuses at d = 3, 4, 5 when q = 2.
// Line-freeness is recorded but only required for q > 3 (and d = q+1).
BatteryReport main_theorem_battery(const FieldPtr& field, std::uint64_t budget = kDefaultBudget);

} // namespace fqc

#endif
