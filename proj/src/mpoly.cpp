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

#include "fqc/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace fqc {

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out{a.exps};
    for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] = std::uint16_t(out.exps[i] + b.exps[i]);
    return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial{});
        return out;
    }
    Monomial cur{std::vector<std::uint16_t>(nvars, 0)};
    // descending lex: x0 gets as much as possible first
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            cur.exps[i] = std::uint16_t(left);
            out.push_back(cur);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            cur.exps[i] = std::uint16_t(e);
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

Poly::Poly(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

Poly Poly::constant(FieldPtr field, std::size_t nvars, FqElem c) {
    Poly out(std::move(field), nvars);
    out.add_term(Monomial{std::vector<std::uint16_t>(nvars, 0)}, c);
    return out;
}

Poly Poly::variable(FieldPtr field, std::size_t nvars, std::size_t i, unsigned power) {
    if (i >= nvars) throw Error(Errc::ArityMismatch, "variable index out of range");
    Monomial m{std::vector<std::uint16_t>(nvars, 0)};
    m.exps[i] = std::uint16_t(power);
    return term(std::move(field), std::move(m), Field::one());
}

Poly Poly::term(FieldPtr field, Monomial m, FqElem c) {
    Poly out(std::move(field), m.exps.size());
    out.add_term(m, c);
    return out;
}

Poly Poly::linear(FieldPtr field, std::span<const FqElem> coeffs) {
    Poly out(field, coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Monomial m{std::vector<std::uint16_t>(coeffs.size(), 0)};
        m.exps[i] = 1;
        out.add_term(m, coeffs[i]);
    }
    return out;
}

FqElem Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Field::zero() : it->second;
}

void Poly::add_term(const Monomial& m, FqElem c) {
    if (m.exps.size() != nvars_) throw Error(Errc::ArityMismatch, "monomial length differs from ring");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Homogeneity Poly::homogeneity() const {
    if (terms_.empty()) return {true, std::nullopt};
    const unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return {false, std::nullopt};
    return {true, d};
}

unsigned Poly::total_degree() const {
    // the leading term has the largest degree in graded order
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

FqElem Poly::eval(std::span<const FqElem> point) const {
    if (point.size() != nvars_) throw Error(Errc::ArityMismatch, "point has wrong number of coordinates");
    const Field& F = *field_;
    std::vector<std::vector<FqElem>> powers(nvars_);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) {
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Field::one());
            while (pw.size() <= m.exps[i]) pw.push_back(F.mul(pw.back(), point[i]));
        }
    FqElem acc = Field::zero();
    for (const auto& [m, c] : terms_) {
        FqElem t = c;
        for (std::size_t i = 0; i < nvars_ && !t.is_zero(); ++i)
            if (m.exps[i]) t = F.mul(t, powers[i][m.exps[i]]);
        acc = F.add(acc, t);
    }
    return acc;
}

Poly Poly::derivative(std::size_t i) const {
    if (i >= nvars_) throw Error(Errc::ArityMismatch, "variable index out of range");
    Poly out(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[i] == 0) continue;
        const FqElem factor = field_->from_int(m.exps[i]);
        if (factor.is_zero()) continue;
        Monomial dm = m;
        --dm.exps[i];
        out.add_term(dm, field_->mul(c, factor));
    }
    return out;
}

Poly Poly::scaled(FqElem c) const {
    Poly out(field_, nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_->mul(a, c));
    return out;
}

Poly Poly::pow(unsigned k) const {
    Poly result = constant(field_, nvars_, Field::one());
    Poly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Poly Poly::substitute(std::span<const Poly> images) const {
    if (images.size() != nvars_) throw Error(Errc::ArityMismatch, "substitution needs one image per variable");
    if (images.empty()) return *this;
    const FieldPtr& target_field = images.front().field_ptr();
    const std::size_t target_vars = images.front().nvars();
    for (const auto& img : images)
        if (!img.field().same_as(*target_field) || img.nvars() != target_vars)
            throw Error(Errc::RingMismatch, "substitution images live in different rings");
    if (!target_field->same_as(*field_)) throw Error(Errc::RingMismatch, "substitution changes the field");

    std::vector<std::vector<Poly>> powers(nvars_);
    Poly out(target_field, target_vars);
    for (const auto& [m, c] : terms_) {
        Poly t = constant(target_field, target_vars, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!m.exps[i]) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(target_field, target_vars, Field::one()));
            while (pw.size() <= m.exps[i]) pw.push_back(pw.back() * images[i]);
            t = t * pw[m.exps[i]];
        }
        out = out + t;
    }
    return out;
}

Poly Poly::embedded(const FieldExtension& ext) const {
    if (!ext.base->same_as(*field_)) throw Error(Errc::RingMismatch, "extension of a different field");
    Poly out(ext.ext, nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, ext.embed(c));
    return out;
}

std::vector<std::string> default_var_names(std::size_t nvars) {
    if (nvars == 3) return {"X", "Y", "Z"};
    if (nvars == 2) return {"s", "t"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nvars; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

std::string Poly::to_string(std::span<const std::string> names) const {
    std::vector<std::string> own;
    if (names.empty()) {
        own = default_var_names(nvars_);
        names = own;
    }
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += '+';
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!m.exps[i]) continue;
            if (!mono.empty()) mono += '*';
            mono += names[i];
            if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
        }
        std::string cs = field_->to_string(c);
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        if (mono.empty()) out += cs;
        else if (c == Field::one()) out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

void Poly::check_ring(const Poly& other) const {
    if (nvars_ != other.nvars_ || !field_->same_as(*other.field_))
        throw Error(Errc::RingMismatch, "polynomials live in different rings");
}

Poly Poly::operator-() const {
    Poly out(field_, nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_->neg(c));
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly out(a.field_, a.nvars_);
    const Field& F = *a.field_;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, F.mul(ca, cb));
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_ || !a.field_->same_as(*b.field_)) return false;
    return a.terms_.size() == b.terms_.size() && std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin());
}

namespace {

class PolyParser {
public:
    PolyParser(const FieldPtr& field, std::size_t nvars, std::string_view text)
        : field_(field), nvars_(nvars), text_(text) {}

    Poly parse() {
        Poly out = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(Errc::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char ch) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    bool starts_primary() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const char ch = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(ch)) || std::isalpha(static_cast<unsigned char>(ch)) ||
               ch == '(';
    }

    Poly expr() {
        Poly acc(field_, nvars_);
        bool first = true;
        for (;;) {
            bool negate = false;
            if (peek('+') || peek('-')) {
                negate = text_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            first = false;
            Poly t = term();
            acc = negate ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (starts_primary()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = primary();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(unsigned(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Poly inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const auto v = std::stoll(std::string(text_.substr(start, pos_ - start)));
            return Poly::constant(field_, nvars_, field_->from_int(v));
        }
        if (ch == 't') {
            ++pos_;
            if (field_->is_prime_field()) fail("'t' requires an extension field");
            return Poly::constant(field_, nvars_, field_->generator());
        }
        if (nvars_ == 3 && (ch == 'X' || ch == 'Y' || ch == 'Z')) {
            ++pos_;
            return Poly::variable(field_, nvars_, std::size_t(ch - 'X'));
        }
        if (ch == 'x') {
            ++pos_;
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected variable index after 'x'");
            const auto i = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (i >= nvars_) fail("variable x" + std::to_string(i) + " out of range");
            return Poly::variable(field_, nvars_, i);
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    FieldPtr field_;
    std::size_t nvars_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const FieldPtr& field, std::size_t nvars, std::string_view text) {
    return PolyParser(field, nvars, text).parse();
}

Poly restrict_to_line(const Poly& f, const ProjPoint& p, const ProjPoint& q) {
    const Field& F = f.field();
    if (p.size() != f.nvars() || q.size() != f.nvars())
        throw Error(Errc::ArityMismatch, "points do not match polynomial arity");
    if (normalize(F, p.coords) == normalize(F, q.coords))
        throw Error(Errc::DegeneratePoints, "restriction needs two distinct points");
    std::vector<Poly> images;
    images.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        const FqElem lin[2] = {p.coords[i], q.coords[i]};
        images.push_back(Poly::linear(f.field_ptr(), lin));
    }
    return f.substitute(images);
}

bool divides_linear(const Poly& linear_form, const Poly& f) {
    const Homogeneity h = linear_form.homogeneity();
    if (linear_form.is_zero() || !h.homogeneous || h.degree != 1u)
        throw Error(Errc::NotLinear, "divisor must be a nonzero linear form");
    if (linear_form.nvars() != f.nvars() || !linear_form.field().same_as(f.field()))
        throw Error(Errc::RingMismatch, "linear form and polynomial live in different rings");
    const Field& F = f.field();
    const std::size_t n = f.nvars();
    std::vector<FqElem> a(n);
    for (const auto& [m, c] : linear_form.terms())
        for (std::size_t i = 0; i < n; ++i)
            if (m.exps[i]) a[i] = c;
    if (n == 1) {
        return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.first.exps[0] > 0; });
    }
    const std::size_t pivot = std::size_t(std::find_if(a.begin(), a.end(), [](FqElem x) { return !x.is_zero(); }) - a.begin());
    // basis of the hyperplane {L = 0}: e_i - (a_i / a_pivot) e_pivot
    std::vector<std::vector<FqElem>> basis;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == pivot) continue;
        std::vector<FqElem> v(n, Field::zero());
        v[i] = Field::one();
        v[pivot] = F.neg(F.div(a[i], a[pivot]));
        basis.push_back(std::move(v));
    }
    if (n == 3) {
        const ProjPoint p = normalize(F, basis[0]);
        const ProjPoint q = normalize(F, basis[1]);
        return restrict_to_line(f, p, q).is_zero();
    }
    std::vector<Poly> images;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<FqElem> lin(n - 1);
        for (std::size_t j = 0; j < basis.size(); ++j) lin[j] = basis[j][i];
        images.push_back(Poly::linear(f.field_ptr(), lin));
    }
    return f.substitute(images).is_zero();
}

} // namespace fqc
