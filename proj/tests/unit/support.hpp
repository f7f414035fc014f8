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

#ifndef FQC_TESTS_SUPPORT_HPP
#define FQC_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <cstdint>

#include "fqc/error.hpp"

// Seed for the randomized suites; set with --seed=N or FQC_SEED.
std::uint64_t test_seed();

#define CHECK_ERRC(expr, errc)                                                                                         \
    do {                                                                                                               \
        bool thrown_ = false;                                                                                          \
        try {                                                                                                          \
            (void)(expr);                                                                                              \
        } catch (const fqc::Error& e_) {                                                                               \
            thrown_ = true;                                                                                            \
            CHECK_MESSAGE(e_.code() == (errc), e_.what());                                                             \
        }                                                                                                              \
        CHECK_MESSAGE(thrown_, "expected " #errc " from " #expr);                                                     \
    } while (0)

#endif
