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

#include "core/fqlinalg.hpp"

#include "core/error.hpp"

#include <algorithm>

namespace hnlat {

FqMat FqMat::identity(const FqField* field, unsigned n) {
    FqMat m(field, n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

unsigned rref_in_place(FqMat& m) {
    const FqField& F = *m.F;
    unsigned rank = 0;
    for (unsigned col = 0; col < m.cols && rank < m.rows; ++col) {
        unsigned pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != rank)
            for (unsigned j = col; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        FqElem s = F.inv(m.at(rank, col));
        for (unsigned j = col; j < m.cols; ++j) m.at(rank, j) = F.mul(s, m.at(rank, j));
        for (unsigned i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            FqElem f = m.at(i, col);
            for (unsigned j = col; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

FqMat subspace_canon(const FqMat& rows) {
    FqMat m = rows;
    unsigned rank = rref_in_place(m);
    FqMat out(m.F, rank, m.cols);
    std::copy(m.a.begin(), m.a.begin() + size_t(rank) * m.cols, out.a.begin());
    return out;
}

FqMat mat_mul(const FqMat& a, const FqMat& b) {
    if (a.cols != b.rows || a.F != b.F) raise(ErrorKind::BadArgument, "matrix shape mismatch");
    const FqField& F = *a.F;
    FqMat c(a.F, a.rows, b.cols);
    for (unsigned i = 0; i < a.rows; ++i)
        for (unsigned k = 0; k < a.cols; ++k) {
            FqElem v = a.at(i, k);
            if (v == 0) continue;
            for (unsigned j = 0; j < b.cols; ++j) c.at(i, j) = F.add(c.at(i, j), F.mul(v, b.at(k, j)));
        }
    return c;
}

FqMat stack_rows(const FqMat& a, const FqMat& b) {
    if (a.cols != b.cols || a.F != b.F) raise(ErrorKind::BadArgument, "row stack shape mismatch");
    FqMat c(a.F, a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), c.a.begin());
    std::copy(b.a.begin(), b.a.end(), c.a.begin() + a.a.size());
    return c;
}

FqMat kron(const FqMat& a, const FqMat& b) {
    if (a.F != b.F) raise(ErrorKind::BadArgument, "kron field mismatch");
    const FqField& F = *a.F;
    FqMat c(a.F, a.rows * b.rows, a.cols * b.cols);
    for (unsigned i = 0; i < a.rows; ++i)
        for (unsigned j = 0; j < a.cols; ++j) {
            FqElem v = a.at(i, j);
            if (v == 0) continue;
            for (unsigned k = 0; k < b.rows; ++k)
                for (unsigned l = 0; l < b.cols; ++l)
                    c.at(i * b.rows + k, j * b.cols + l) = F.mul(v, b.at(k, l));
        }
    return c;
}

FqMat subspace_sum(const FqMat& a, const FqMat& b) { return subspace_canon(stack_rows(a, b)); }

FqMat subspace_intersect(const FqMat& a, const FqMat& b) {
    // Zassenhaus: row reduce [a|a; b|0]; rows whose left half is zero carry an
    // intersection basis in their right half.
    const unsigned n = a.cols;
    FqMat big(a.F, a.rows + b.rows, 2 * n);
    for (unsigned i = 0; i < a.rows; ++i)
        for (unsigned j = 0; j < n; ++j) big.at(i, j) = big.at(i, j + n) = a.at(i, j);
    for (unsigned i = 0; i < b.rows; ++i)
        for (unsigned j = 0; j < n; ++j) big.at(a.rows + i, j) = b.at(i, j);
    rref_in_place(big);
    FqMat out(a.F, 0, n);
    for (unsigned i = 0; i < big.rows; ++i) {
        bool left_zero = true;
        for (unsigned j = 0; j < n && left_zero; ++j) left_zero = big.at(i, j) == 0;
        bool right_zero = true;
        for (unsigned j = n; j < 2 * n && right_zero; ++j) right_zero = big.at(i, j) == 0;
        if (left_zero && !right_zero) {
            out.rows += 1;
            for (unsigned j = 0; j < n; ++j) out.a.push_back(big.at(i, j + n));
        }
    }
    return subspace_canon(out);
}

bool subspace_leq(const FqMat& a, const FqMat& b) {
    if (a.rows > b.rows) return false;
    const FqField& F = *a.F;
    auto pivots = pivot_columns(b);
    for (unsigned i = 0; i < a.rows; ++i) {
        // Reduce a_i against b's echelon rows; must vanish.
        std::vector<FqElem> v(a.cols);
        for (unsigned j = 0; j < a.cols; ++j) v[j] = a.at(i, j);
        for (unsigned r = 0; r < b.rows; ++r) {
            FqElem f = v[pivots[r]];
            if (f == 0) continue;
            for (unsigned j = 0; j < a.cols; ++j) v[j] = F.sub(v[j], F.mul(f, b.at(r, j)));
        }
        for (unsigned j = 0; j < a.cols; ++j)
            if (v[j] != 0) return false;
    }
    return true;
}

FqMat kernel_basis(const FqMat& m) {
    FqMat e = m;
    unsigned rank = rref_in_place(e);
    const unsigned n = m.cols;
    std::vector<unsigned> piv;
    std::vector<bool> is_piv(n, false);
    for (unsigned i = 0, col = 0; i < rank; ++i) {
        while (e.at(i, col) == 0) ++col;
        piv.push_back(col);
        is_piv[col] = true;
    }
    FqMat out(m.F, n - rank, n);
    unsigned row = 0;
    const FqField& F = *m.F;
    for (unsigned j = 0; j < n; ++j) {
        if (is_piv[j]) continue;
        out.at(row, j) = 1;
        for (unsigned i = 0; i < rank; ++i) out.at(row, piv[i]) = F.neg(e.at(i, j));
        ++row;
    }
    return subspace_canon(out);
}

std::vector<unsigned> pivot_columns(const FqMat& echelon) {
    std::vector<unsigned> piv;
    for (unsigned i = 0; i < echelon.rows; ++i) {
        unsigned j = 0;
        while (j < echelon.cols && echelon.at(i, j) == 0) ++j;
        if (j == echelon.cols) raise(ErrorKind::BadArgument, "zero row in echelon basis");
        piv.push_back(j);
    }
    return piv;
}

FqMat select_columns(const FqMat& m, const std::vector<unsigned>& which) {
    FqMat out(m.F, m.rows, static_cast<unsigned>(which.size()));
    for (unsigned i = 0; i < m.rows; ++i)
        for (unsigned j = 0; j < which.size(); ++j) out.at(i, j) = m.at(i, which[j]);
    return out;
}

FqMat coords_in(const FqMat& u, const FqMat& w) { return select_columns(u, pivot_columns(w)); }

FqMat quotient_map(const FqMat& w, unsigned n) {
    const FqField& F = *w.F;
    auto piv = pivot_columns(w);
    std::vector<bool> is_piv(n, false);
    for (unsigned p : piv) is_piv[p] = true;
    FqMat q(w.F, n - w.rows, n);
    unsigned row = 0;
    for (unsigned j = 0; j < n; ++j) {
        if (is_piv[j]) continue;
        q.at(row, j) = 1;
        for (unsigned i = 0; i < w.rows; ++i) q.at(row, piv[i]) = F.neg(w.at(i, j));
        ++row;
    }
    return q;
}

FqMat map_entries(const FqMat& m, const std::vector<FqElem>& table, const FqField* target) {
    FqMat out(target, m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = table[m.a[i]];
    return out;
}

std::uint64_t count_subspaces(std::uint64_t q, unsigned n) {
    const std::uint64_t kMax = ~0ULL >> 1;
    if (n > 40) return kMax;
    // Gaussian binomial [n choose d]_q via the product formula, saturating.
    std::uint64_t total = 0;
    for (unsigned d = 0; d <= n; ++d) {
        // [n d]_q = prod_{i=0}^{d-1} (q^{n-i}-1)/(q^{i+1}-1); compute in rationals of u64
        // via repeated multiply/divide in exact integer steps.
        unsigned __int128 num = 1;
        for (unsigned i = 0; i < d; ++i) {
            unsigned __int128 qn = 1, qd = 1;
            for (unsigned e = 0; e < n - i; ++e) qn *= q;
            for (unsigned e = 0; e < i + 1; ++e) qd *= q;
            num = num * (qn - 1) / (qd - 1); // binomial is integral after each step in this order
            if (num > kMax) return kMax;
        }
        total += static_cast<std::uint64_t>(num);
        if (total > kMax) return kMax;
    }
    return total;
}

std::vector<FqMat> enumerate_subspaces(const FqField* F, unsigned n, std::uint64_t limit) {
    std::uint64_t count = count_subspaces(F->q(), n);
    if (count > limit) raise(ErrorKind::SizeLimit, "subspace lattice would have " + std::to_string(count) + " elements (limit " + std::to_string(limit) + ")");

    std::vector<FqMat> out;
    out.reserve(count);
    const unsigned q = F->q();
    for (unsigned d = 0; d <= n; ++d) {
        // Pivot sets in lexicographic order.
        std::vector<unsigned> piv(d);
        for (unsigned i = 0; i < d; ++i) piv[i] = i;
        while (true) {
            // Free positions: (i, j) with j > piv[i] and j not a pivot.
            std::vector<bool> is_piv(n, false);
            for (unsigned p : piv) is_piv[p] = true;
            std::vector<std::pair<unsigned, unsigned>> free_pos;
            for (unsigned i = 0; i < d; ++i)
                for (unsigned j = piv[i] + 1; j < n; ++j)
                    if (!is_piv[j]) free_pos.emplace_back(i, j);

            std::vector<FqElem> vals(free_pos.size(), 0);
            while (true) {
                FqMat m(F, d, n);
                for (unsigned i = 0; i < d; ++i) m.at(i, piv[i]) = 1;
                for (size_t k = 0; k < free_pos.size(); ++k) m.at(free_pos[k].first, free_pos[k].second) = vals[k];
                out.push_back(std::move(m));
                // ascending counter over free values
                size_t k = 0;
                while (k < vals.size() && vals[k] == q - 1) vals[k++] = 0;
                if (k == vals.size()) break;
                ++vals[k];
            }

            // next pivot combination
            if (d == 0) break;
            int i = static_cast<int>(d) - 1;
            while (i >= 0 && piv[i] == n - d + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (unsigned j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

std::string subspace_label(const FqMat& canon) {
    std::string s = std::to_string(canon.rows) + ":[";
    for (unsigned i = 0; i < canon.rows; ++i) {
        std::uint64_t code = 0;
        for (unsigned j = canon.cols; j-- > 0;) code = code * canon.F->q() + canon.at(i, j);
        if (i) s += ",";
        s += std::to_string(code);
    }
    s += "]";
    return s;
}

} // namespace hnlat
