#include "ei/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <gmpxx.h>

namespace ei {

namespace {

struct I64Overflow {};

// Fraction-free (Bareiss) rank of an integer matrix. Division steps are exact.
// int64 fast path signals I64Overflow so the caller can redo with mpz.
int rank_bareiss_i64(std::vector<long long>& a, int rows, int cols) {
    auto at = [&](int i, int j) -> long long& { return a[static_cast<std::size_t>(i) * cols + j]; };
    long long prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        long long pv = at(rank, c);
        for (int i = rank + 1; i < rows; ++i) {
            long long f = at(i, c);
            if (f == 0 && pv == prev) continue;
            for (int j = c + 1; j < cols; ++j) {
                __int128 num = static_cast<__int128>(at(i, j)) * pv -
                               static_cast<__int128>(f) * at(rank, j);
                __int128 q = num / prev;
                if (q > INT64_MAX / 2 || q < INT64_MIN / 2) throw I64Overflow{};
                at(i, j) = static_cast<long long>(q);
            }
            at(i, c) = 0;
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

int rank_bareiss_mpz(const std::vector<long long>& src, int rows, int cols) {
    std::vector<mpz_class> a;
    a.reserve(src.size());
    for (long long v : src) a.emplace_back(static_cast<long>(v));
    auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * cols + j]; };
    mpz_class prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        mpz_class pv = at(rank, c);
        for (int i = rank + 1; i < rows; ++i) {
            mpz_class f = at(i, c);
            for (int j = c + 1; j < cols; ++j)
                at(i, j) = (at(i, j) * pv - f * at(rank, j)) / prev;
            at(i, c) = 0;
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

int rank_mod_p(std::vector<long long>& a, int rows, int cols, long long p) {
    auto at = [&](int i, int j) -> long long& { return a[static_cast<std::size_t>(i) * cols + j]; };
    for (auto& x : a) { x %= p; if (x < 0) x += p; }
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        // modular inverse of the pivot by Fermat
        long long pv = at(rank, c), inv = 1, base = pv, e = p - 2;
        while (e) {
            if (e & 1) inv = (__int128)inv * base % p;
            base = (__int128)base * base % p;
            e >>= 1;
        }
        for (int j = c; j < cols; ++j) at(rank, j) = (__int128)at(rank, j) * inv % p;
        for (int i = rank + 1; i < rows; ++i) {
            long long f = at(i, c);
            if (!f) continue;
            for (int j = c; j < cols; ++j) {
                at(i, j) = (at(i, j) - (__int128)f * at(rank, j)) % p;
                if (at(i, j) < 0) at(i, j) += p;
            }
        }
        ++rank;
    }
    return rank;
}

// Smith normal form rank of an integer matrix (number of nonzero invariant
// factors). Used as the independent oracle backend.
int rank_snf(const std::vector<long long>& src, int rows, int cols) {
    std::vector<mpz_class> a;
    a.reserve(src.size());
    for (long long v : src) a.emplace_back(static_cast<long>(v));
    auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * cols + j]; };
    int rank = 0;
    int r = 0, c = 0;
    while (r < rows && c < cols) {
        // find a pivot of minimal absolute value
        int pi = -1, pj = -1;
        mpz_class best = 0;
        for (int i = r; i < rows; ++i)
            for (int j = c; j < cols; ++j)
                if (at(i, j) != 0) {
                    mpz_class v = abs(at(i, j));
                    if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
                }
        if (pi < 0) break;
        for (int j = c; j < cols; ++j) std::swap(at(pi, j), at(r, j));
        for (int i = r; i < rows; ++i) std::swap(at(i, pj), at(i, c));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (at(i, c) == 0) continue;
                mpz_class q = at(i, c) / at(r, c);
                for (int j = c; j < cols; ++j) at(i, j) -= q * at(r, j);
                if (at(i, c) != 0) {
                    for (int j = c; j < cols; ++j) std::swap(at(i, j), at(r, j));
                    clean = false;
                }
            }
            for (int j = c + 1; j < cols; ++j) {
                if (at(r, j) == 0) continue;
                mpz_class q = at(r, j) / at(r, c);
                for (int i = r; i < rows; ++i) at(i, j) -= q * at(i, c);
                if (at(r, j) != 0) {
                    for (int i = r; i < rows; ++i) std::swap(at(i, j), at(i, c));
                    clean = false;
                }
            }
        }
        ++rank;
        ++r;
        ++c;
    }
    return rank;
}

// Builds the boundary matrix from cardinality-c faces to cardinality-(c-1)
// faces. Faces of equal cardinality are numerically sorted, so row lookup is a
// binary search. Sign convention: deleting the i-th smallest member gives
// (-1)^i.
void build_boundary(const std::vector<Vmask>& faces, const std::vector<int>& offsets, int c,
                    std::vector<long long>& mat, int& rows, int& cols) {
    int lo_prev = offsets[static_cast<std::size_t>(c) - 1];
    int hi_prev = offsets[static_cast<std::size_t>(c)];
    int lo = offsets[static_cast<std::size_t>(c)];
    int hi = offsets[static_cast<std::size_t>(c) + 1];
    rows = hi_prev - lo_prev;
    cols = hi - lo;
    mat.assign(static_cast<std::size_t>(rows) * cols, 0);
    auto row_begin = faces.begin() + lo_prev;
    auto row_end = faces.begin() + hi_prev;
    for (int j = 0; j < cols; ++j) {
        Vmask f = faces[static_cast<std::size_t>(lo + j)];
        int sign = 1;
        for (Vmask m = f; m; m &= m - 1) {
            Vmask sub = f & ~(m & -m);
            auto it = std::lower_bound(row_begin, row_end, sub);
            int i = static_cast<int>(it - row_begin);
            mat[static_cast<std::size_t>(i) * cols + j] = sign;
            sign = -sign;
        }
    }
}

} // namespace

namespace detail {

void homology_ranks_sorted(const std::vector<Vmask>& faces, const FieldSpec& field,
                           std::vector<long long>& out, HomologyScratch& scratch) {
    if (faces.empty()) throw VoidComplex("void complex has no homology");
    int cmax = vcount(faces.back());
    auto& offsets = scratch.offsets;
    offsets.assign(static_cast<std::size_t>(cmax) + 2, 0);
    for (Vmask f : faces) ++offsets[static_cast<std::size_t>(vcount(f)) + 1];
    for (int c = 0; c <= cmax; ++c) offsets[static_cast<std::size_t>(c) + 1] += offsets[static_cast<std::size_t>(c)];

    std::vector<int> ranks(static_cast<std::size_t>(cmax) + 2, 0); // ranks[c] = rank of ∂ from card-c faces
    for (int c = 1; c <= cmax; ++c) {
        int rows = 0, cols = 0;
        build_boundary(faces, offsets, c, scratch.mat, rows, cols);
        if (rows == 0 || cols == 0) { ranks[static_cast<std::size_t>(c)] = 0; continue; }
        if (field.rational) {
            std::vector<long long> copy = scratch.mat;
            try {
                ranks[static_cast<std::size_t>(c)] = rank_bareiss_i64(copy, rows, cols);
            } catch (const I64Overflow&) {
                ranks[static_cast<std::size_t>(c)] = rank_bareiss_mpz(scratch.mat, rows, cols);
            }
        } else {
            ranks[static_cast<std::size_t>(c)] = rank_mod_p(scratch.mat, rows, cols, field.p);
        }
    }
    out.assign(static_cast<std::size_t>(cmax) + 1, 0);
    for (int c = 0; c <= cmax; ++c) {
        long long count = offsets[static_cast<std::size_t>(c) + 1] - offsets[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(c)] =
            count - ranks[static_cast<std::size_t>(c)] - ranks[static_cast<std::size_t>(c) + 1];
    }
}

void homology_ranks_sorted_snf(const std::vector<Vmask>& faces, std::vector<long long>& out,
                               HomologyScratch& scratch) {
    if (faces.empty()) throw VoidComplex("void complex has no homology");
    int cmax = vcount(faces.back());
    auto& offsets = scratch.offsets;
    offsets.assign(static_cast<std::size_t>(cmax) + 2, 0);
    for (Vmask f : faces) ++offsets[static_cast<std::size_t>(vcount(f)) + 1];
    for (int c = 0; c <= cmax; ++c) offsets[static_cast<std::size_t>(c) + 1] += offsets[static_cast<std::size_t>(c)];

    std::vector<int> ranks(static_cast<std::size_t>(cmax) + 2, 0);
    for (int c = 1; c <= cmax; ++c) {
        int rows = 0, cols = 0;
        build_boundary(faces, offsets, c, scratch.mat, rows, cols);
        if (rows == 0 || cols == 0) continue;
        ranks[static_cast<std::size_t>(c)] = rank_snf(scratch.mat, rows, cols);
    }
    out.assign(static_cast<std::size_t>(cmax) + 1, 0);
    for (int c = 0; c <= cmax; ++c) {
        long long count = offsets[static_cast<std::size_t>(c) + 1] - offsets[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(c)] =
            count - ranks[static_cast<std::size_t>(c)] - ranks[static_cast<std::size_t>(c) + 1];
    }
}

} // namespace detail

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& k, const FieldSpec& field) {
    detail::HomologyScratch scratch;
    std::vector<long long> out;
    detail::homology_ranks_sorted(k.faces(), field, out, scratch);
    return out;
}

std::vector<long long> reduced_homology_ranks_snf(const SimplicialComplex& k) {
    detail::HomologyScratch scratch;
    std::vector<long long> out;
    detail::homology_ranks_sorted_snf(k.faces(), out, scratch);
    return out;
}

} // namespace ei
