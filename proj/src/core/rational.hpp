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

#ifndef HNLAT_CORE_RATIONAL_HPP
#define HNLAT_CORE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hnlat {

// Exact arbitrary-precision rational, always canonical (reduced, denominator > 0).
// Every slope, jump, degree, pairing and squared distance in this library is one
// of these; floating point never enters a comparison.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or a bare integer "n". Throws Error(Parse) on anything else.
Rational rat_parse(const std::string& text);

// "p/q", or "n" when the denominator is 1 (matches rat_parse).
std::string rat_str(const Rational& value);

// Decimal expansion of sqrt(value) truncated to `digits` fractional digits.
// Display only; value must be >= 0.
std::string sqrt_decimal(const Rational& value, int digits = 12);

std::string join_rationals(const std::vector<Rational>& values, const std::string& sep = ",");

} // namespace hnlat

#endif
