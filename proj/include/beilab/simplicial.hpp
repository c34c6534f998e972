#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "beilab/errors.hpp"
#include "beilab/field.hpp"
#include "beilab/monomial.hpp"

namespace beilab {

// Squarefree monomial ideal stored as the supports of its minimal
// generators, bitmasks over the ground variables. The Stanley-Reisner
// complex has as faces exactly the subsets containing no generator support.
struct SquarefreeIdeal {
    int nvars = 0;
    std::vector<std::uint32_t> supports;

    std::uint32_t ground() const {
        std::uint32_t g = 0;
        for (std::uint32_t s : supports) g |= s;
        return g;
    }
};

inline SquarefreeIdeal squarefree_ideal_from_monomials(int nvars, const std::vector<Monomial>& gens) {
    SquarefreeIdeal ideal;
    ideal.nvars = nvars;
    for (const Monomial& m : gens) {
        if (!m.squarefree()) throw std::invalid_argument("squarefree_ideal_from_monomials: non-squarefree generator");
        if (m.is_one()) throw std::invalid_argument("squarefree_ideal_from_monomials: unit generator");
        ideal.supports.push_back(m.support());
    }
    // minimize: drop supports containing another
    std::sort(ideal.supports.begin(), ideal.supports.end(),
              [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t s : ideal.supports) {
        bool redundant = false;
        for (std::uint32_t t : minimal)
            if ((t & ~s) == 0) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end());
    ideal.supports = std::move(minimal);
    return ideal;
}

namespace homology_detail {

using BigInt = boost::multiprecision::cpp_int;

// Rank of a small integer matrix over GF(P).
template <std::uint32_t P>
int rank_mod_p(std::vector<std::vector<int>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    auto norm = [](int v) {
        int r = v % static_cast<int>(P);
        return r < 0 ? r + static_cast<int>(P) : r;
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (norm(m[r][c]) != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) continue;
        std::swap(m[rank], m[pivot]);
        Gf<P> inv = Gf<P>(m[rank][c]).inverse();
        for (int r = rank + 1; r < rows; ++r) {
            Gf<P> factor = Gf<P>(m[r][c]) * inv;
            if (factor.is_zero()) continue;
            for (int k = c; k < cols; ++k)
                m[r][k] = static_cast<int>((Gf<P>(m[r][k]) - factor * Gf<P>(m[rank][k])).value());
        }
        ++rank;
    }
    return rank;
}

// Exact rank over Q via fraction-free (Bareiss) elimination.
inline int rank_bareiss(std::vector<std::vector<int>> m0) {
    int rows = static_cast<int>(m0.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m0[0].size());
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(rows), std::vector<BigInt>(static_cast<std::size_t>(cols)));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m[r][c] = m0[r][c];
    BigInt prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int k = c + 1; k < cols; ++k) m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

template <std::uint32_t P>
int matrix_rank_impl(std::vector<std::vector<int>> m, const Gf<P>*) {
    return rank_mod_p<P>(std::move(m));
}

inline int matrix_rank_impl(std::vector<std::vector<int>> m, const Rational*) {
    return rank_bareiss(std::move(m));
}

template <class K>
int matrix_rank(std::vector<std::vector<int>> m) {
    return matrix_rank_impl(std::move(m), static_cast<const K*>(nullptr));
}

}  // namespace homology_detail

// Dimensions of reduced simplicial homology of the Stanley-Reisner complex
// of I restricted to the vertex subset sigma, over the field K. Entry d+1
// of the result is dim H~_d, for d = -1 .. |sigma| - 1. Straight
// boundary-matrix rank computation; this is the oracle the faster Hochster
// evaluation is checked against.
template <class K>
std::vector<std::int64_t> reduced_homology_dims(const SquarefreeIdeal& ideal, std::uint32_t sigma) {
    if (ideal.nvars > 16) throw ScaleGuardError("reduced_homology_dims: ground set exceeds 16 vertices");
    const int nverts = std::popcount(sigma);
    // faces by dimension; dimension d faces have d+1 vertices
    std::vector<std::vector<std::uint32_t>> faces(static_cast<std::size_t>(nverts) + 1);
    // iterate all submasks of sigma, including 0 (the empty face)
    std::uint32_t sub = sigma;
    while (true) {
        bool is_face = true;
        for (std::uint32_t s : ideal.supports)
            if ((s & ~sub) == 0) {
                is_face = false;
                break;
            }
        if (is_face) faces[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & sigma;
    }
    for (auto& level : faces) std::sort(level.begin(), level.end());

    std::vector<std::int64_t> dims(static_cast<std::size_t>(nverts) + 1, 0);
    if (faces[0].empty()) return dims;  // void complex: nothing, all homology zero

    // boundary_k maps k-vertex faces to (k-1)-vertex faces; rank via K
    std::vector<int> ranks(static_cast<std::size_t>(nverts) + 2, 0);
    for (int k = 1; k <= nverts; ++k) {
        const auto& dom = faces[static_cast<std::size_t>(k)];
        const auto& cod = faces[static_cast<std::size_t>(k - 1)];
        if (dom.empty() || cod.empty()) continue;
        std::vector<std::vector<int>> m(cod.size(), std::vector<int>(dom.size(), 0));
        for (std::size_t c = 0; c < dom.size(); ++c) {
            std::uint32_t f = dom[c];
            int sign = 1;
            std::uint32_t rest = f;
            while (rest != 0) {
                std::uint32_t vbit = rest & (~rest + 1);
                rest &= rest - 1;
                std::uint32_t sub_face = f & ~vbit;
                auto it = std::lower_bound(cod.begin(), cod.end(), sub_face);
                m[static_cast<std::size_t>(it - cod.begin())][c] = sign;
                sign = -sign;
            }
        }
        ranks[static_cast<std::size_t>(k)] = homology_detail::matrix_rank<K>(std::move(m));
    }
    // H~_d uses chains with d+1 vertices: dim = f_{d+1 verts} - rank in - rank out
    for (int k = 0; k <= nverts; ++k) {
        std::int64_t dim = static_cast<std::int64_t>(faces[static_cast<std::size_t>(k)].size()) -
                           ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1];
        dims[static_cast<std::size_t>(k)] = dim;
    }
    return dims;
}

}  // namespace beilab
