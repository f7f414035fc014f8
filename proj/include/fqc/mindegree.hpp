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

#ifndef FQC_MINDEGREE_HPP
#define FQC_MINDEGREE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqc/census.hpp"

namespace fqc {

struct MinDegreeLevel {
    unsigned d = 0;
    std::uint64_t candidates = 0; // scalar classes of nonzero forms
    std::uint64_t hits = 0;       // forms whose zero set is P^n minus the point
    std::optional<std::uint64_t> first_hit;
};

struct MinDegreeReport {
    std::uint32_t q = 0;
    unsigned n = 0;
    unsigned threshold = 0; // (q-1)n + 1
    std::vector<MinDegreeLevel> below;
    std::string witness;
    bool witness_ok = false;

    bool passed() const;
};

// x_0^{d-(q-1)n} prod_{i=1}^{n} (x_i^{q-1} - x_0^{q-1})
Poly min_degree_witness(const FieldPtr& field, unsigned n, unsigned d);

// True iff {f = 0} is exactly P^n(F_q) minus (1:0:...:0).
bool cuts_out_all_but_origin(const Poly& f);

// Exhaustive scan of every degree below the threshold, then the witness at
// the threshold. Throws BudgetExceeded when a degree has more scalar classes
// than `budget`.
MinDegreeReport verify_min_degree(const FieldPtr& field, unsigned n, std::uint64_t budget = kDefaultBudget,
                                  ScanMode mode = ScanMode::Parallel);

} // namespace fqc

#endif
