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

#include "fqc/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <utility>

namespace fqc {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over Z_p.
Coeffs poly_mod(Coeffs f, const Coeffs& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            const std::uint64_t sub = std::uint64_t(lead) * g[i] % p;
            f[shift + i] = std::uint32_t((f[shift + i] + p - sub) % p);
        }
        trim(f);
    }
    return f;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Coeffs f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (std::size_t k = 1; k <= deg / 2; ++k) {
        const std::uint64_t count = ipow(p, std::uint32_t(k));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs g(k + 1);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < k; ++i) {
                g[i] = std::uint32_t(v % p);
                v /= p;
            }
            g[k] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, std::uint32_t e) {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, Coeffs> table = {
        {{2, 2}, {1, 1, 1}},    // t^2+t+1
        {{2, 3}, {1, 1, 0, 1}}, // t^3+t+1
        {{3, 2}, {1, 0, 1}},    // t^2+1
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{5, 2}, {2, 1, 1}},    // t^2+t+2
        {{3, 3}, {1, 2, 0, 1}}, // t^3+2t+1
    };
    if (e == 1) return Coeffs{0, 1};
    if (auto it = table.find({p, e}); it != table.end()) return it->second;
    return std::nullopt;
}

namespace {

Coeffs least_irreducible(std::uint32_t p, std::uint32_t e) {
    const std::uint64_t count = ipow(p, e);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Coeffs f(e + 1);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = std::uint32_t(v % p);
            v /= p;
        }
        f[e] = 1;
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw Error(Errc::NoDefaultModulus, "no irreducible polynomial found");
}

} // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t e, std::optional<Coeffs> modulus) {
    if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (e == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    if (ipow(p, e) > kMaxOrder || e > 32)
        throw Error(Errc::NoDefaultModulus, "field order exceeds supported size");
    Coeffs mod;
    if (e == 1) {
        mod = {0, 1};
    } else if (modulus) {
        mod = *modulus;
        if (mod.size() != e + 1 || mod.back() != 1)
            throw Error(Errc::ReducibleModulus, "modulus must be monic of degree e");
        for (auto c : mod)
            if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    } else if (auto b = builtin_modulus(p, e)) {
        mod = *b;
    } else {
        mod = least_irreducible(p, e);
    }
    if (e > 1 && !is_irreducible_mod_p(mod, p))
        throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    return FieldPtr(new Field(p, e, std::move(mod)));
}

FieldPtr Field::parse(std::string_view text) {
    auto to_u32 = [&](std::string_view s) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw Error(Errc::ParseError, "bad field '" + std::string(text) + "'");
        return v;
    };
    if (auto caret = text.find('^'); caret != std::string_view::npos)
        return make(to_u32(text.substr(0, caret)), to_u32(text.substr(caret + 1)));
    const std::uint32_t q = to_u32(text);
    if (q < 2) throw Error(Errc::NonPrime, "field order must be >= 2");
    const std::uint32_t p = prime_factors(q).front();
    std::uint32_t e = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw Error(Errc::NonPrime, std::to_string(q) + " is not a prime power");
    return make(p, e);
}

Field::Field(std::uint32_t p, std::uint32_t e, Coeffs modulus)
    : p_(p), e_(e), q_(std::uint32_t(ipow(p, e))), modulus_(std::move(modulus)) {
    build_tables();
}

std::string Field::name() const {
    return e_ == 1 ? "F_" + std::to_string(q_)
                   : "F_" + std::to_string(q_) + " (" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
}

std::string Field::spec() const {
    return e_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(e_);
}

FqElem Field::element(std::uint32_t index) const {
    if (index >= q_) throw Error(Errc::InvalidArgument, "element index out of range");
    return {index};
}

FqElem Field::from_int(std::int64_t v) const {
    const std::int64_t r = ((v % std::int64_t(p_)) + p_) % p_;
    return {std::uint32_t(r)};
}

FqElem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > e_) throw Error(Errc::InvalidArgument, "too many coefficients");
    std::uint32_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) throw Error(Errc::InvalidArgument, "coefficient out of range");
        v = v * p_ + coeffs[i];
    }
    return {v};
}

std::vector<std::uint32_t> Field::coeffs(FqElem a) const {
    Coeffs out(e_);
    std::uint32_t v = a.value;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

std::vector<FqElem> Field::enumerate() const {
    std::vector<FqElem> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
    return out;
}

FqElem Field::add_digits(FqElem a, FqElem b) const noexcept {
    std::uint32_t x = a.value, y = b.value, r = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return {r};
}

FqElem Field::mul_slow(FqElem a, FqElem b) const {
    const Coeffs ca = coeffs(a), cb = coeffs(b);
    Coeffs prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_);
    Coeffs r = e_ == 1 ? prod : poly_mod(prod, modulus_, p_);
    r.resize(e_, 0);
    return from_coeffs(r);
}

void Field::build_tables() {
    neg_table_.resize(q_);
    for (std::uint32_t i = 0; i < q_; ++i) {
        Coeffs c = coeffs({i});
        for (auto& x : c) x = (p_ - x) % p_;
        neg_table_[i] = from_coeffs(c).value;
    }
    if (e_ > 1 && p_ != 2 && q_ <= 1024) {
        add_table_.resize(std::size_t(q_) * q_);
        for (std::uint32_t i = 0; i < q_; ++i)
            for (std::uint32_t j = 0; j < q_; ++j)
                add_table_[std::size_t(i) * q_ + j] = std::uint16_t(add_digits({i}, {j}).value);
    }

    // primitive element: order exactly q-1
    const std::uint32_t n = q_ - 1;
    const auto factors = prime_factors(n);
    auto slow_pow = [&](FqElem g, std::uint32_t k) {
        FqElem r = one();
        while (k) {
            if (k & 1u) r = mul_slow(r, g);
            g = mul_slow(g, g);
            k >>= 1;
        }
        return r;
    };
    for (std::uint32_t g = 1; g < q_; ++g) {
        bool ok = true;
        for (auto f : factors)
            if (slow_pow({g}, n / f) == one()) {
                ok = false;
                break;
            }
        if (ok) {
            primitive_ = {g};
            break;
        }
    }
    exp_.assign(2 * std::size_t(n), 0);
    log_.assign(q_, 0);
    FqElem x = one();
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = x.value;
        exp_[i + n] = x.value;
        log_[x.value] = i;
        x = mul_slow(x, primitive_);
    }
}

FqElem Field::inv(FqElem a) const {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    const std::uint32_t n = q_ - 1;
    return {exp_[(n - log_[a.value]) % n]};
}

FqElem Field::pow(FqElem a, std::int64_t k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    FqElem r = one();
    while (k > 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

std::string Field::to_string(FqElem a) const {
    if (e_ == 1) return std::to_string(a.value);
    if (a.is_zero()) return "0";
    const Coeffs c = coeffs(a);
    std::string out;
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += 't';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

FqElem Field::parse_element(std::string_view text) const {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(Errc::ParseError, "empty element");
    std::size_t pos = 0;
    auto read_int = [&](std::int64_t& out) {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) return false;
        out = std::stoll(s.substr(start, pos - start));
        return true;
    };
    Coeffs acc(e_, 0);
    bool first = true;
    while (pos < s.size()) {
        std::int64_t sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw Error(Errc::ParseError, "expected '+' or '-' in '" + s + "'");
        }
        first = false;
        std::int64_t coeff = 1;
        std::int64_t power = 0;
        const bool has_int = read_int(coeff);
        if (has_int && pos < s.size() && s[pos] == '*') ++pos;
        if (pos < s.size() && s[pos] == 't') {
            if (e_ == 1) throw Error(Errc::ParseError, "'t' not allowed in prime field");
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                if (!read_int(power)) throw Error(Errc::ParseError, "bad exponent in '" + s + "'");
            }
        } else if (!has_int) {
            throw Error(Errc::ParseError, "bad element '" + s + "'");
        }
        // t^power reduced through the field, scaled by the integer coefficient
        FqElem term = e_ == 1 ? one() : pow(generator(), power);
        term = mul(term, from_int(sign * coeff));
        const Coeffs tc = coeffs(term);
        for (std::uint32_t i = 0; i < e_; ++i) acc[i] = (acc[i] + tc[i]) % p_;
    }
    return from_coeffs(acc);
}

FieldExtension extend(const FieldPtr& base, std::uint32_t m) {
    if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    FieldExtension out;
    out.base = base;
    out.degree = m;
    if (m == 1) {
        out.ext = base;
        out.image = base->enumerate();
        return out;
    }
    out.ext = Field::make(base->p(), base->e() * m);
    const Field& E = *out.ext;
    // root of base modulus inside the extension (least in canonical order)
    FqElem root = E.zero();
    if (base->e() > 1) {
        const auto& mod = base->modulus();
        bool found = false;
        for (std::uint32_t r = 0; r < E.q() && !found; ++r) {
            FqElem acc = E.zero();
            for (std::size_t i = mod.size(); i-- > 0;) acc = E.add(E.mul(acc, {r}), E.from_int(mod[i]));
            if (acc.is_zero()) {
                root = {r};
                found = true;
            }
        }
        if (!found) throw Error(Errc::InvalidArgument, "no root of base modulus in extension");
    }
    out.image.resize(base->q());
    for (std::uint32_t a = 0; a < base->q(); ++a) {
        const auto c = base->coeffs({a});
        FqElem acc = E.zero();
        for (std::size_t i = c.size(); i-- > 0;) acc = E.add(E.mul(acc, root), E.from_int(c[i]));
        out.image[a] = acc;
    }
    return out;
}

} // namespace fqc
