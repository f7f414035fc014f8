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

#ifndef FQC_POINT_HPP
#define FQC_POINT_HPP

#include <compare>
#include <vector>

#include "fqc/gf.hpp"

namespace fqc {

// Homogeneous coordinates scaled so the first nonzero coordinate is 1.
struct ProjPoint {
    std::vector<FqElem> coords;

    std::size_t size() const noexcept { return coords.size(); }
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// Throws InvalidArgument on the zero vector.
ProjPoint normalize(const Field& field, std::vector<FqElem> coords);

} // namespace fqc

#endif
