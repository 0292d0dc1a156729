/*
   Copyright 2026 The hnlat authors

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

#include "core/fq.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace hnlat {

namespace {

// Dense polynomial over F_p, little-endian coefficients, no trailing zeros.
using Poly = std::vector<unsigned>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    poly_trim(c);
    return c;
}

// a mod m, with m monic.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    poly_trim(a);
    while (a.size() >= m.size()) {
        unsigned lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[i + shift] = (a[i + shift] + (p - lead % p) * m[i]) % p;
        poly_trim(a);
    }
    return a;
}

Poly code_to_poly(FqElem code, unsigned p) {
    Poly a;
    while (code) {
        a.push_back(code % p);
        code /= p;
    }
    return a;
}

FqElem poly_to_code(const Poly& a, unsigned p) {
    FqElem code = 0;
    for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
}

bool poly_divides(const Poly& d, const Poly& a, unsigned p) {
    // d monic; true iff a mod d == 0.
    return poly_mod(a, d, p).empty();
}

bool is_irreducible(const Poly& f, unsigned p) {
    // Trial division by all monic polynomials of degree <= deg(f)/2.
    // Fields here are tiny, so this is plenty.
    if (f.size() < 2) return false;
    size_t deg = f.size() - 1;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        FqElem count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (FqElem low = 0; low < count; ++low) {
            Poly g = code_to_poly(low, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

void factor_prime_power(unsigned q, unsigned* p, unsigned* e) {
    if (q < 2) raise(ErrorKind::BadArgument, "q must be a prime power >= 2");
    unsigned base = 2;
    while (q % base != 0) {
        ++base;
        if (base * base > q) {
            base = q; // q itself prime
            break;
        }
    }
    if (!is_prime(base)) raise(ErrorKind::BadArgument, "q is not a prime power");
    unsigned n = q, exp = 0;
    while (n % base == 0) {
        n /= base;
        ++exp;
    }
    if (n != 1) raise(ErrorKind::BadArgument, "q is not a prime power");
    *p = base;
    *e = exp;
}

FqField::FqField(unsigned p, unsigned d) : p_(p), d_(d) {
    if (!is_prime(p)) raise(ErrorKind::BadArgument, "field characteristic must be prime");
    if (d == 0 || d > 12) raise(ErrorKind::BadArgument, "unsupported extension degree");
    unsigned long long q = 1;
    for (unsigned i = 0; i < d; ++i) {
        q *= p;
        if (q > (1u << 20)) raise(ErrorKind::SizeLimit, "field too large");
    }
    q_ = static_cast<unsigned>(q);

    // Least monic irreducible of degree d (codes ascending <=> lex on coefficients).
    Poly modulus;
    if (d == 1) {
        modulus = {0, 1}; // x; arithmetic below never actually reduces for d == 1
        modulus_ = poly_to_code(modulus, p);
    } else {
        bool found = false;
        for (FqElem low = 0; low < q_ && !found; ++low) {
            Poly f = code_to_poly(low, p);
            f.resize(d + 1, 0);
            f[d] = 1;
            if (is_irreducible(f, p)) {
                modulus = f;
                found = true;
            }
        }
        if (!found) raise(ErrorKind::Validate, "no irreducible modulus found");
        modulus_ = poly_to_code(modulus, p);
    }

    mul_.assign(static_cast<size_t>(q_) * q_, 0);
    for (FqElem a = 0; a < q_; ++a) {
        Poly pa = code_to_poly(a, p);
        for (FqElem b = a; b < q_; ++b) {
            Poly pb = code_to_poly(b, p);
            FqElem c = poly_to_code(poly_mod(poly_mul(pa, pb, p), modulus, p), p);
            mul_[static_cast<size_t>(a) * q_ + b] = c;
            mul_[static_cast<size_t>(b) * q_ + a] = c;
        }
    }

    inv_.assign(q_, 0);
    for (FqElem a = 1; a < q_; ++a) {
        for (FqElem b = 1; b < q_; ++b) {
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] == 0) raise(ErrorKind::Validate, "modulus is not irreducible");
    }
}

FqElem FqField::add(FqElem a, FqElem b) const {
    FqElem out = 0, place = 1;
    for (unsigned i = 0; i < d_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

FqElem FqField::neg(FqElem a) const {
    FqElem out = 0, place = 1;
    for (unsigned i = 0; i < d_; ++i) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

FqElem FqField::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FqField::inv(FqElem a) const {
    if (a == 0) raise(ErrorKind::BadArgument, "inverse of zero field element");
    return inv_[a];
}

FqElem FqField::pow(FqElem a, std::uint64_t e) const {
    FqElem out = 1;
    while (e) {
        if (e & 1) out = mul(out, a);
        a = mul(a, a);
        e >>= 1;
    }
    return out;
}

std::vector<FqElem> FqField::subfield(unsigned qsub) const {
    std::vector<FqElem> out;
    for (FqElem a = 0; a < q_; ++a)
        if (pow(a, qsub) == a) out.push_back(a);
    if (out.size() != qsub) raise(ErrorKind::BadArgument, "not a subfield order");
    return out;
}

std::vector<FqElem> FqField::embedding_from(const FqField& sub) const {
    if (sub.p_ != p_ || d_ % sub.d_ != 0) raise(ErrorKind::BadArgument, "no subfield embedding");
    if (sub.d_ == d_) {
        std::vector<FqElem> id(q_);
        for (FqElem a = 0; a < q_; ++a) id[a] = a;
        return id;
    }
    // Send the generator to the least root of sub's modulus in this field.
    Poly m = code_to_poly(sub.modulus_, p_);
    FqElem root = 0;
    bool found = false;
    for (FqElem a = 0; a < q_ && !found; ++a) {
        FqElem value = 0;
        for (size_t i = m.size(); i-- > 0;) value = add(mul(value, a), m[i] % p_);
        if (value == 0) {
            root = a;
            found = true;
        }
    }
    if (!found) raise(ErrorKind::Validate, "subfield modulus has no root");
    std::vector<FqElem> table(sub.q_);
    for (FqElem c = 0; c < sub.q_; ++c) {
        Poly coeffs = code_to_poly(c, sub.p_);
        FqElem value = 0;
        for (size_t i = coeffs.size(); i-- > 0;) value = add(mul(value, root), coeffs[i] % p_);
        table[c] = value;
    }
    return table;
}

const FqField* FqField::get(unsigned p, unsigned d) {
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FqField>> cache;
    auto key = std::make_pair(p, d);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<FqField>(new FqField(p, d))).first;
    return it->second.get();
}

const FqField* FqField::of_order(unsigned q) {
    unsigned p = 0, e = 0;
    factor_prime_power(q, &p, &e);
    return get(p, e);
}

} // namespace hnlat
