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

#include "core/rational.hpp"

#include "core/error.hpp"

#include <cctype>
#include <sstream>

namespace hnlat {

Rational rat_parse(const std::string& text) {
    // mpq_class accepts far more than we want to admit in files (whitespace,
    // bases, ...), so validate the shape first: -?digits(/digits)?
    auto bad = [&]() { raise(ErrorKind::Parse, "invalid rational '" + text + "'"); };
    if (text.empty()) bad();
    size_t i = 0;
    auto digits = [&]() {
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) bad();
    };
    digits();
    if (i < text.size()) {
        if (text[i] != '/') bad();
        ++i;
        digits();
    }
    if (i != text.size()) bad();

    Rational r;
    if (r.set_str(text, 10) != 0) bad();
    if (r.get_den() == 0) raise(ErrorKind::Parse, "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rational& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

std::string sqrt_decimal(const Rational& value, int digits) {
    if (sgn(value) < 0) raise(ErrorKind::BadArgument, "sqrt of negative rational");
    if (digits < 0) digits = 0;
    // sqrt(n/d) = sqrt(n*d)/d; scale by 10^digits and take the integer square root.
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = value.get_num() * value.get_den() * scale * scale;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    root /= value.get_den();

    std::string s = root.get_str();
    if (digits == 0) return s;
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
    return s;
}

std::string join_rationals(const std::vector<Rational>& values, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += rat_str(values[i]);
    }
    return out;
}

} // namespace hnlat
