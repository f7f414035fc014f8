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

#include "fqc/error.hpp"

namespace fqc {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NoDefaultModulus: return "NoDefaultModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::DegeneratePoints: return "DegeneratePoints";
    case Errc::NotLinear: return "NotLinear";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::BadK: return "BadK";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::LocusMismatch: return "LocusMismatch";
    case Errc::HasLineComponent: return "HasLineComponent";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BadDegreeRange: return "BadDegreeRange";
    case Errc::AlphasNotDistinct: return "AlphasNotDistinct";
    case Errc::BadMultiplicities: return "BadMultiplicities";
    case Errc::ReducibleQuadratic: return "ReducibleQuadratic";
    case Errc::BadPartition: return "BadPartition";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace fqc
