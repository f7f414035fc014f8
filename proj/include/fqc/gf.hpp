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

#ifndef FQC_GF_HPP
#define FQC_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqc/error.hpp"

namespace fqc {

// An element of F_q, stored as its position in the canonical enumeration.
// The position is the base-p number whose digits are the polynomial-basis
// coefficients (constant term least significant), so ordering by `value` is
// the lexicographic order on coefficient vectors with the constant term
// varying fastest. 0 is zero and 1 is one.
struct FqElem {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FqElem, FqElem) = default;
    constexpr bool is_zero() const noexcept { return value == 0; }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_{p^e} = F_p[t]/(modulus). Immutable once built; share through FieldPtr.
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    // Validates p, the modulus (irreducible, monic, degree e) and builds the
    // arithmetic tables. Without an explicit modulus the built-in table is
    // consulted, then the least monic irreducible polynomial of degree e.
    static FieldPtr make(std::uint32_t p, std::uint32_t e = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    // Accepts "p", "p^e" or a prime power "q".
    static FieldPtr parse(std::string_view text);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return e_ == 1; }
    // e+1 coefficients, constant term first; {0, 1} for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    FqElem primitive_element() const noexcept { return primitive_; }

    std::string name() const;
    // "p" or "p^e", accepted by parse().
    std::string spec() const;
    bool same_as(const Field& other) const noexcept {
        return this == &other || (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
    }

    static constexpr FqElem zero() noexcept { return {0}; }
    static constexpr FqElem one() noexcept { return {1}; }
    FqElem element(std::uint32_t index) const;
    // The class of t (equals the residue `0` for prime fields, where t is the
    // root of the trivial modulus).
    FqElem generator() const { return e_ == 1 ? zero() : FqElem{p_}; }
    FqElem from_int(std::int64_t v) const;
    FqElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(FqElem a) const;

    // Canonical order: 0, 1, ..., ordered by coefficient vector.
    std::vector<FqElem> enumerate() const;

    FqElem add(FqElem a, FqElem b) const noexcept {
        if (p_ == 2) return {a.value ^ b.value};
        if (e_ == 1) {
            const std::uint32_t s = a.value + b.value;
            return {s >= p_ ? s - p_ : s};
        }
        if (!add_table_.empty()) return {add_table_[std::size_t(a.value) * q_ + b.value]};
        return add_digits(a, b);
    }
    FqElem neg(FqElem a) const noexcept { return {neg_table_[a.value]}; }
    FqElem sub(FqElem a, FqElem b) const noexcept { return add(a, neg(b)); }
    FqElem mul(FqElem a, FqElem b) const noexcept {
        if (a.value == 0 || b.value == 0) return zero();
        return {exp_[log_[a.value] + log_[b.value]]};
    }
    FqElem inv(FqElem a) const;
    FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
    // Square-and-multiply; negative exponents invert first.
    FqElem pow(FqElem a, std::int64_t k) const;

    // Text form: the residue for prime fields, "c0+c1*t+..." otherwise.
    std::string to_string(FqElem a) const;
    FqElem parse_element(std::string_view text) const;

private:
    Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    FqElem add_digits(FqElem a, FqElem b) const noexcept;
    FqElem mul_slow(FqElem a, FqElem b) const;
    void build_tables();

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    FqElem primitive_{};
    std::vector<std::uint32_t> exp_; // 2(q-1) entries
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint16_t> add_table_; // only for small non-prime fields
};

bool is_prime(std::uint64_t n) noexcept;

// Polynomials over Z_p as coefficient vectors, constant term first.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

// Built-in default modulus for F_{p^e}, if any.
std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, std::uint32_t e);

// F_{q^m} together with the embedding of its subfield F_q.
struct FieldExtension {
    FieldPtr base;
    FieldPtr ext;
    std::uint32_t degree = 1;
    std::vector<FqElem> image; // image[a.value] for a in base

    FqElem embed(FqElem a) const { return image[a.value]; }
};

// Builds F_{q^m} as F_p[t]/(default modulus of degree e*m) and sends the
// generator of `base` to the least root of base's modulus.
FieldExtension extend(const FieldPtr& base, std::uint32_t m);

} // namespace fqc

#endif
