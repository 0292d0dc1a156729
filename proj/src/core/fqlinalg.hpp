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

#ifndef HNLAT_CORE_FQLINALG_HPP
#define HNLAT_CORE_FQLINALG_HPP

#include "core/fq.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hnlat {

// Dense row-major matrix over a finite field. Subspaces of F_q^n are always
// carried around as their canonical reduced-row-echelon basis (zero rows
// dropped), which makes equality and hashing structural.
struct FqMat {
    const FqField* F = nullptr;
    unsigned rows = 0, cols = 0;
    std::vector<FqElem> a;

    FqMat() = default;
    FqMat(const FqField* field, unsigned r, unsigned c) : F(field), rows(r), cols(c), a(size_t(r) * c, 0) {}

    FqElem& at(unsigned i, unsigned j) { return a[size_t(i) * cols + j]; }
    FqElem at(unsigned i, unsigned j) const { return a[size_t(i) * cols + j]; }

    static FqMat identity(const FqField* field, unsigned n);
    bool operator==(const FqMat& o) const { return F == o.F && rows == o.rows && cols == o.cols && a == o.a; }
};

// In-place reduced row echelon form; returns the rank.
unsigned rref_in_place(FqMat& m);

// Canonical basis of the row space: rref with zero rows dropped.
FqMat subspace_canon(const FqMat& rows);

FqMat mat_mul(const FqMat& a, const FqMat& b);
FqMat stack_rows(const FqMat& a, const FqMat& b);
FqMat kron(const FqMat& a, const FqMat& b);

FqMat subspace_sum(const FqMat& a, const FqMat& b);
FqMat subspace_intersect(const FqMat& a, const FqMat& b);
bool subspace_leq(const FqMat& a, const FqMat& b); // row space containment a <= b

// Canonical basis of { x : m x^T = 0 }, one row per kernel basis vector.
FqMat kernel_basis(const FqMat& m);

// Pivot column indices of an echelon basis.
std::vector<unsigned> pivot_columns(const FqMat& echelon);

// Columns of m restricted to `which`, in order.
FqMat select_columns(const FqMat& m, const std::vector<unsigned>& which);

// Coordinates of the rows of u (which must lie in span(w)) with respect to the
// echelon basis w: since w is reduced, these are just the entries of u at w's
// pivot columns.
FqMat coords_in(const FqMat& u, const FqMat& w);

// Matrix of the quotient map F^n -> F^n / span(w) in the coordinates given by
// the images of the non-pivot standard basis vectors; shape (n-dim w) x n.
FqMat quotient_map(const FqMat& w, unsigned n);

// Entry-wise image under a field embedding table (codes indexed by source code).
FqMat map_entries(const FqMat& m, const std::vector<FqElem>& table, const FqField* target);

// All subspaces of F^n as canonical echelon bases, ordered by dimension and
// then by enumeration order (pivot sets lexicographic, then free entries in
// ascending counter order). Deterministic. Throws Error(SizeLimit) if the
// subspace count exceeds `limit`.
std::vector<FqMat> enumerate_subspaces(const FqField* F, unsigned n, std::uint64_t limit);

// Total number of subspaces of F_q^n (sum of Gaussian binomials); saturates
// at 2^63-1 instead of overflowing.
std::uint64_t count_subspaces(std::uint64_t q, unsigned n);

// "d:[r0,r1,...]" with q-ary row codes; stable display/interchange label.
std::string subspace_label(const FqMat& canon);

} // namespace hnlat

#endif
