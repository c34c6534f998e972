#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "beilab/betti.hpp"
#include "beilab/simplicial.hpp"

namespace beilab {

namespace hochster_detail {

// Reduced homology of the restriction to `part`, as the coefficient vector
// of the polynomial sum_d dim H~_d z^{d+1}. Cached per part mask.
template <class K>
const std::vector<std::int64_t>& part_poly(const SquarefreeIdeal& ideal, std::uint32_t part,
                                           std::unordered_map<std::uint32_t, std::vector<std::int64_t>>& cache) {
    auto it = cache.find(part);
    if (it != cache.end()) return it->second;
    std::vector<std::int64_t> dims = reduced_homology_dims<K>(ideal, part);
    // trim trailing zeros
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return cache.emplace(part, std::move(dims)).first->second;
}

inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace hochster_detail

// Graded Betti numbers of S/I for a squarefree monomial ideal I, by
// Hochster's formula: beta_{i,sigma} = dim H~_{|sigma|-i-1} of the
// Stanley-Reisner complex restricted to sigma. Only subsets of the union
// of generator supports can contribute; a vertex of sigma lying in no
// generator inside sigma is a cone point and kills the homology, and the
// restriction splits as a join over the connected components of the
// generators inside sigma (reduced Kunneth over a field).
template <class K>
BettiTable hochster_betti(const SquarefreeIdeal& ideal) {
    BettiTable table;
    table.field = K::field_name();
    if (ideal.supports.empty()) {
        table.add(0, 0, 1);
        return table;
    }
    const std::uint32_t ground = ideal.ground();
    std::unordered_map<std::uint32_t, std::vector<std::int64_t>> cache;

    std::uint32_t sigma = ground;
    while (true) {
        // generators fully inside sigma
        std::vector<std::uint32_t> inside;
        for (std::uint32_t s : ideal.supports)
            if ((s & ~sigma) == 0) inside.push_back(s);
        std::uint32_t covered = 0;
        for (std::uint32_t s : inside) covered |= s;

        if (covered == sigma) {  // no cone points
            // split sigma into connected parts of the generator hypergraph
            std::vector<std::uint32_t> parts;
            std::uint32_t left = sigma;
            while (left != 0) {
                std::uint32_t part = left & (~left + 1);
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (std::uint32_t s : inside)
                        if ((s & part) != 0 && (s & ~part) != 0) {
                            part |= s;
                            grew = true;
                        }
                }
                parts.push_back(part);
                left &= ~part;
            }
            std::vector<std::int64_t> poly = {1};
            for (std::uint32_t part : parts) {
                poly = hochster_detail::poly_mul(poly, hochster_detail::part_poly<K>(ideal, part, cache));
                if (poly.empty()) break;
            }
            const int size = std::popcount(sigma);
            for (std::size_t idx = 0; idx < poly.size(); ++idx) {
                if (poly[idx] == 0) continue;
                int d = static_cast<int>(idx) - 1;  // homology degree
                int i = size - d - 1;
                table.add(i, size, static_cast<std::uint64_t>(poly[idx]));
            }
        }
        if (sigma == 0) break;
        sigma = (sigma - 1) & ground;
    }
    return table;
}

// Castelnuovo-Mumford regularity of S/I for squarefree monomial I.
template <class K>
int squarefree_monomial_regularity(const SquarefreeIdeal& ideal, BettiTable* table_out = nullptr) {
    BettiTable t = hochster_betti<K>(ideal);
    int reg = t.regularity();
    if (table_out) *table_out = std::move(t);
    return reg;
}

}  // namespace beilab
