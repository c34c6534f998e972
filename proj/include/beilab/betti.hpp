#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace beilab {

// Graded Betti numbers beta_{i,j} of a quotient S/I over a named field.
// Regularity is max(j - i) over the nonzero entries.
struct BettiTable {
    std::string field;
    std::map<std::pair<int, int>, std::uint64_t> entries;  // (i, j) -> beta

    void add(int i, int j, std::uint64_t v) {
        if (v != 0) entries[{i, j}] += v;
    }

    std::uint64_t get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    int regularity() const {
        int r = 0;
        for (const auto& [ij, v] : entries) r = std::max(r, ij.second - ij.first);
        return r;
    }

    int projective_dimension() const {
        int p = 0;
        for (const auto& [ij, v] : entries) p = std::max(p, ij.first);
        return p;
    }

    bool operator==(const BettiTable& o) const { return entries == o.entries; }

    // Dense CSV in the standard Betti-diagram layout: one row per
    // homological degree i, one column per j - i.
    std::string csv() const {
        int pd = projective_dimension();
        int reg = regularity();
        std::ostringstream out;
        out << "i";
        for (int s = 0; s <= reg; ++s) out << "," << s;
        out << "\n";
        for (int i = 0; i <= pd; ++i) {
            out << i;
            for (int s = 0; s <= reg; ++s) out << "," << get(i, i + s);
            out << "\n";
        }
        return out.str();
    }
};

}  // namespace beilab
