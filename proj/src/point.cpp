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

#include "fqc/point.hpp"

#include <algorithm>

namespace fqc {

ProjPoint normalize(const Field& field, std::vector<FqElem> coords) {
    auto lead = std::find_if(coords.begin(), coords.end(), [](FqElem a) { return !a.is_zero(); });
    if (lead == coords.end()) throw Error(Errc::InvalidArgument, "zero vector is not a projective point");
    const FqElem scale = field.inv(*lead);
    for (auto& c : coords) c = field.mul(c, scale);
    return ProjPoint{std::move(coords)};
}

} // namespace fqc
