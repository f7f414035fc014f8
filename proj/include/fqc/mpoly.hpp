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

#ifndef FQC_MPOLY_HPP
#define FQC_MPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqc/gf.hpp"
#include "fqc/point.hpp"

namespace fqc {

struct Monomial {
    std::vector<std::uint16_t> exps;

    unsigned degree() const noexcept {
        unsigned d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

// Graded lexicographic with x0 > x1 > ... > xn; "less" means "comes first",
// so the largest monomial leads.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

// All monomials of degree d in nvars variables, in term order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

struct Homogeneity {
    bool homogeneous = true;
    std::optional<unsigned> degree; // empty with homogeneous=true: the zero polynomial ("any")

    bool is_any() const noexcept { return homogeneous && !degree; }
};

// Sparse polynomial over F_q in a fixed number of variables. Zero
// coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Monomial, FqElem, TermOrder>;

    Poly(FieldPtr field, std::size_t nvars);

    static Poly constant(FieldPtr field, std::size_t nvars, FqElem c);
    static Poly variable(FieldPtr field, std::size_t nvars, std::size_t i, unsigned power = 1);
    static Poly term(FieldPtr field, Monomial m, FqElem c);
    // Linear form sum coeffs[i] * x_i.
    static Poly linear(FieldPtr field, std::span<const FqElem> coeffs);

    const FieldPtr& field_ptr() const noexcept { return field_; }
    const Field& field() const noexcept { return *field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    FqElem coeff(const Monomial& m) const;
    void add_term(const Monomial& m, FqElem c);

    Homogeneity homogeneity() const;
    unsigned total_degree() const;

    // Throws ArityMismatch unless point.size() == nvars().
    FqElem eval(std::span<const FqElem> point) const;
    FqElem eval(const ProjPoint& p) const { return eval(p.coords); }

    // Formal derivative; exponents divisible by p annihilate.
    Poly derivative(std::size_t i) const;
    Poly scaled(FqElem c) const;
    Poly pow(unsigned k) const;
    // x_i -> images[i]; all images share one ring.
    Poly substitute(std::span<const Poly> images) const;
    // Coefficients pushed through the subfield embedding.
    Poly embedded(const FieldExtension& ext) const;

    // Names default to X,Y,Z for three variables, s,t for two, x0..xn otherwise.
    std::string to_string(std::span<const std::string> names = {}) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

private:
    void check_ring(const Poly& other) const;

    FieldPtr field_;
    std::size_t nvars_;
    TermMap terms_;
};

inline Homogeneity is_homogeneous(const Poly& f) { return f.homogeneity(); }

std::vector<std::string> default_var_names(std::size_t nvars);

// Grammar: sums/products/powers of integers, variables (x0..xn, or X,Y,Z when
// nvars == 3), the field generator t, and parenthesised subexpressions.
// Juxtaposition multiplies, so "XYZ(X+Y+Z)" is accepted.
Poly parse_poly(const FieldPtr& field, std::size_t nvars, std::string_view text);

// The binary form F(sP + tQ). Zero iff the line PQ lies on {F = 0}.
Poly restrict_to_line(const Poly& f, const ProjPoint& p, const ProjPoint& q);

// True iff the linear form L divides F.
bool divides_linear(const Poly& linear_form, const Poly& f);

} // namespace fqc

#endif
