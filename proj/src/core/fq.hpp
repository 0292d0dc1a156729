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

#ifndef HNLAT_CORE_FQ_HPP
#define HNLAT_CORE_FQ_HPP

#include <cstdint>
#include <vector>

namespace hnlat {

using FqElem = std::uint32_t;

// The finite field F_{p^d}. Elements are codes in [0, p^d): the code of
// c_0 + c_1 x + ... + c_{d-1} x^{d-1} is sum c_i p^i. The modulus is the
// lexicographically least monic irreducible of degree d over F_p (lex on
// (c_0, ..., c_{d-1}), i.e. ascending code order), so codes are reproducible
// across runs and serialized objects mean the same thing everywhere.
//
// All fields are interned: get(p, d) returns a stable pointer, and two
// FqElem codes are only comparable within the same field instance.
class FqField {
  public:
    static const FqField* get(unsigned p, unsigned d);
    // q = p^d for a prime power q (q <= 2^20 or so; we only ever need tiny fields).
    static const FqField* of_order(unsigned q);

    unsigned p() const { return p_; }
    unsigned degree() const { return d_; }
    unsigned q() const { return q_; }
    FqElem modulus_code() const { return modulus_; }

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const { return mul_[a * q_ + b]; }
    FqElem inv(FqElem a) const;
    FqElem pow(FqElem a, std::uint64_t e) const;

    // a -> a^qsub, the relative Frobenius over the subfield of order qsub.
    FqElem frobenius(FqElem a, unsigned qsub) const { return pow(a, qsub); }

    // The elements fixed by x -> x^qsub, in ascending code order. qsub must be
    // p^e with e dividing d; the result is the subfield of order qsub.
    std::vector<FqElem> subfield(unsigned qsub) const;

    // Image of the standalone field F_qsub inside this field: entry [c] is the
    // code of the embedding of F_qsub::code c, where the generator of F_qsub
    // maps to the least root of F_qsub's modulus in this field.
    std::vector<FqElem> embedding_from(const FqField& sub) const;

  private:
    FqField(unsigned p, unsigned d);

    unsigned p_, d_, q_;
    FqElem modulus_;              // code of the monic modulus with the leading 1 included
    std::vector<FqElem> mul_;     // q x q
    std::vector<FqElem> inv_;     // q
};

// Factors a prime power: q = p^e. Throws Error(BadArgument) if q is not one.
void factor_prime_power(unsigned q, unsigned* p, unsigned* e);

} // namespace hnlat

#endif
