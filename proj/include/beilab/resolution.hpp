#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "beilab/betti.hpp"
#include "beilab/errors.hpp"
#include "beilab/groebner.hpp"

namespace beilab {

namespace resolution_detail {

// Term m * e_pos of a free module element.
template <class K>
struct ModTerm {
    Monomial m;
    int pos;
    K c;
};

// Basis data of a free module F_k: for each basis element, the base-ring
// monomial it tracks (the image of its leading term down the resolution),
// its internal degree shift, and the chain of leading positions down the
// tower of modules. The chain resolves ties in the iterated Schreyer
// order: when two terms have the same base image, the comparison of the
// underlying leading terms bottoms out at the deepest level where the two
// descent chains differ, smaller index winning.
struct FreeBasis {
    std::vector<Monomial> anchor;
    std::vector<int> shift;
    std::vector<std::vector<int>> chain;  // chain[i] = [i, leadpos(g_i), ..., 0]
    std::size_t rank() const { return anchor.size(); }
};

// Iterated Schreyer order on module terms.
template <class K>
int term_compare(const ModTerm<K>& a, const ModTerm<K>& b, const FreeBasis& basis) {
    int c = lex_compare(a.m * basis.anchor[static_cast<std::size_t>(a.pos)],
                        b.m * basis.anchor[static_cast<std::size_t>(b.pos)]);
    if (c != 0) return c;
    if (a.pos == b.pos) return 0;  // equal images at the same position force equal monomials
    const std::vector<int>& ca = basis.chain[static_cast<std::size_t>(a.pos)];
    const std::vector<int>& cb = basis.chain[static_cast<std::size_t>(b.pos)];
    for (std::size_t t = ca.size(); t-- > 0;)
        if (ca[t] != cb[t]) return ca[t] < cb[t] ? 1 : -1;
    return 0;
}

template <class K>
using ModElt = std::vector<ModTerm<K>>;  // sorted descending in the induced order

template <class K>
ModElt<K> normalize(ModElt<K> terms, const FreeBasis& basis) {
    std::sort(terms.begin(), terms.end(),
              [&](const ModTerm<K>& a, const ModTerm<K>& b) { return term_compare(a, b, basis) > 0; });
    ModElt<K> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    return out;
}

// elt - (m, c) * gen, both sorted; result sorted.
template <class K>
ModElt<K> subtract_multiple(const ModElt<K>& elt, const Monomial& m, const K& c, const ModElt<K>& gen,
                            const FreeBasis& basis) {
    ModElt<K> scaled;
    scaled.reserve(gen.size());
    for (const auto& t : gen) scaled.push_back({t.m * m, t.pos, -(t.c * c)});
    ModElt<K> merged;
    merged.reserve(elt.size() + scaled.size());
    std::size_t i = 0, j = 0;
    while (i < elt.size() && j < scaled.size()) {
        int cmp = term_compare(elt[i], scaled[j], basis);
        if (cmp > 0)
            merged.push_back(elt[i++]);
        else if (cmp < 0)
            merged.push_back(scaled[j++]);
        else {
            K s = elt[i].c + scaled[j].c;
            if (!s.is_zero()) merged.push_back({elt[i].m, elt[i].pos, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < elt.size()) merged.push_back(elt[i++]);
    while (j < scaled.size()) merged.push_back(scaled[j++]);
    return merged;
}

// Full reduction of elt against the (monic) generators; records the
// quotient terms used per generator. Generators form a Groebner basis of
// the module they generate whenever this is used with remainder zero.
template <class K>
ModElt<K> module_reduce(ModElt<K> elt, const std::vector<ModElt<K>>& gens, const FreeBasis& basis,
                        std::vector<std::vector<std::pair<Monomial, K>>>* quotients) {
    ModElt<K> remainder;
    while (!elt.empty()) {
        const ModTerm<K>& lead = elt.front();
        bool reduced = false;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].empty()) continue;
            const ModTerm<K>& glt = gens[g].front();
            if (glt.pos != lead.pos || !glt.m.divides(lead.m)) continue;
            Monomial q = lead.m.quotient(glt.m);
            K c = lead.c / glt.c;
            if (quotients) (*quotients)[g].emplace_back(q, c);
            elt = subtract_multiple(elt, q, c, gens[g], basis);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lead);
            elt.erase(elt.begin());
        }
    }
    return remainder;
}

}  // namespace resolution_detail

namespace resolution_detail {

template <class K>
std::vector<std::vector<K>> strand_block(const std::vector<std::tuple<int, int, K>>& entries,
                                         const std::vector<int>& row_shift, const std::vector<int>& col_shift,
                                         int degree, std::vector<int>& rows_of_degree, std::vector<int>& cols_of_degree) {
    rows_of_degree.clear();
    cols_of_degree.clear();
    std::vector<int> row_index(row_shift.size(), -1), col_index(col_shift.size(), -1);
    for (std::size_t r = 0; r < row_shift.size(); ++r)
        if (row_shift[r] == degree) {
            row_index[r] = static_cast<int>(rows_of_degree.size());
            rows_of_degree.push_back(static_cast<int>(r));
        }
    for (std::size_t c = 0; c < col_shift.size(); ++c)
        if (col_shift[c] == degree) {
            col_index[c] = static_cast<int>(cols_of_degree.size());
            cols_of_degree.push_back(static_cast<int>(c));
        }
    std::vector<std::vector<K>> m(rows_of_degree.size(), std::vector<K>(cols_of_degree.size(), K::zero()));
    for (const auto& [r, c, v] : entries) {
        if (col_shift[static_cast<std::size_t>(c)] != degree) continue;
        // a degree-0 entry always joins equal shifts
        m[static_cast<std::size_t>(row_index[static_cast<std::size_t>(r)])]
         [static_cast<std::size_t>(col_index[static_cast<std::size_t>(c)])] = v;
    }
    return m;
}

template <class K>
int rank_field(std::vector<std::vector<K>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == -1) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
        K inv = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)].inverse();
        for (int r = rank + 1; r < rows; ++r) {
            K factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * inv;
            if (factor.is_zero()) continue;
            for (int k = c; k < cols; ++k)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -=
                    factor * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(k)];
        }
        ++rank;
    }
    return rank;
}

}  // namespace resolution_detail

// Graded Betti numbers of S/I for a homogeneous ideal I, via a Schreyer
// resolution built on the reduced Groebner basis and the ranks of its
// constant strand: beta_{i,j} = dim H_i(F ot K)_j for any free resolution
// F of S/I, which removes the non-minimal part exactly.
template <class K>
BettiTable graded_betti_numbers(const std::vector<Poly<K>>& gens, int nvars) {
    using namespace resolution_detail;
    if (nvars > 14) throw ScaleGuardError("graded_betti_numbers: more than 14 variables");
    for (const auto& g : gens)
        if (!g.is_homogeneous()) throw std::invalid_argument("graded_betti_numbers: generators must be homogeneous");

    BettiTable table;
    table.field = K::field_name();

    GroebnerBasis<K> gb = buchberger(gens, MonomialOrder{nvars, 0});
    if (!gb.gens.empty() && gb.gens.front().degree() == 0)
        throw std::invalid_argument("graded_betti_numbers: unit ideal");
    if (gb.gens.empty()) {
        table.add(0, 0, 1);
        return table;
    }

    // level data
    std::vector<FreeBasis> bases;               // bases[k] = F_k, k = 0..
    std::vector<std::vector<std::tuple<int, int, K>>> strands;  // strands[k] = constant entries of d_k; strands[0] unused
    bases.push_back(FreeBasis{{Monomial(nvars)}, {0}, {{0}}});

    // level 1: the Groebner basis as module elements of F_0
    std::vector<ModElt<K>> current;
    for (const auto& g : gb.gens) {
        ModElt<K> e;
        for (const auto& t : g.terms()) e.push_back({t.mono, 0, t.coef});
        current.push_back(std::move(e));
    }

    strands.emplace_back();  // d_0 = 0
    int level = 1;
    while (!current.empty()) {
        if (level > nvars + 2) throw ScaleGuardError("graded_betti_numbers: resolution exceeded the length bound");
        if (current.size() > 20000) throw ScaleGuardError("graded_betti_numbers: intermediate module too large");
        const FreeBasis& prev = bases.back();

        // sort generators descending in the induced order (within a fixed
        // position this is descending lex, which keeps the construction
        // finite), then record F_level and the constant strand of d_level
        std::sort(current.begin(), current.end(), [&](const ModElt<K>& a, const ModElt<K>& b) {
            return term_compare(a.front(), b.front(), prev) > 0;
        });
        FreeBasis next;
        for (const auto& gen : current) {
            const ModTerm<K>& lt = gen.front();
            next.anchor.push_back(lt.m * prev.anchor[static_cast<std::size_t>(lt.pos)]);
            next.shift.push_back(lt.m.degree() + prev.shift[static_cast<std::size_t>(lt.pos)]);
            std::vector<int> descent;
            descent.push_back(static_cast<int>(next.chain.size()));
            const std::vector<int>& below = prev.chain[static_cast<std::size_t>(lt.pos)];
            descent.insert(descent.end(), below.begin(), below.end());
            next.chain.push_back(std::move(descent));
        }
        std::vector<std::tuple<int, int, K>> strand;
        for (std::size_t col = 0; col < current.size(); ++col)
            for (const auto& t : current[col])
                if (t.m.is_one()) strand.emplace_back(t.pos, static_cast<int>(col), t.c);
        strands.push_back(std::move(strand));

        // syzygies: for each position group, candidate leads
        // lcm(m_i,m_j)/m_i at e_i for i < j; keep one pair per minimal
        // candidate monomial (Schreyer's theorem plus lead-coverage
        // minimization), reduce its S-element to zero, record the syzygy.
        std::map<int, std::vector<std::size_t>> groups;
        for (std::size_t idx = 0; idx < current.size(); ++idx) groups[current[idx].front().pos].push_back(idx);

        std::vector<ModElt<K>> syzygies;
        for (const auto& [pos, members] : groups) {
            for (std::size_t a = 0; a < members.size(); ++a) {
                std::size_t i = members[a];
                const Monomial& mi = current[i].front().m;
                // candidate quotient monomials from partners after i
                std::vector<std::pair<Monomial, std::size_t>> cands;
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    std::size_t j = members[b];
                    cands.emplace_back(Monomial::lcm(mi, current[j].front().m).quotient(mi), j);
                }
                std::sort(cands.begin(), cands.end(), [](const auto& p, const auto& q) {
                    if (p.first.degree() != q.first.degree()) return p.first.degree() < q.first.degree();
                    int c = lex_compare(p.first, q.first);
                    if (c != 0) return c < 0;
                    return p.second < q.second;
                });
                std::vector<std::pair<Monomial, std::size_t>> kept;
                for (const auto& cand : cands) {
                    bool covered = false;
                    for (const auto& k : kept)
                        if (k.first.divides(cand.first)) {
                            covered = true;
                            break;
                        }
                    if (!covered) kept.push_back(cand);
                }
                for (const auto& [u, j] : kept) {
                    const Monomial& mj = current[j].front().m;
                    Monomial l = Monomial::lcm(mi, mj);
                    ModElt<K> spair = subtract_multiple<K>(
                        ModElt<K>{}, l.quotient(mi), -current[i].front().c.inverse(), current[i], prev);
                    spair = subtract_multiple(spair, l.quotient(mj), current[j].front().c.inverse(), current[j], prev);
                    std::vector<std::vector<std::pair<Monomial, K>>> quots(current.size());
                    ModElt<K> rem = module_reduce(std::move(spair), current, prev, &quots);
                    if (!rem.empty())
                        throw std::logic_error("graded_betti_numbers: S-element did not reduce to zero");
                    ModElt<K> syz;
                    syz.push_back({l.quotient(mi), static_cast<int>(i), current[i].front().c.inverse()});
                    syz.push_back({l.quotient(mj), static_cast<int>(j), -current[j].front().c.inverse()});
                    for (std::size_t gidx = 0; gidx < quots.size(); ++gidx)
                        for (auto& [qm, qc] : quots[gidx]) syz.push_back({qm, static_cast<int>(gidx), -qc});
                    syz = normalize(std::move(syz), next);
                    // monic in the induced order
                    K lead_inv = syz.front().c.inverse();
                    for (auto& t : syz) t.c = t.c * lead_inv;
                    syzygies.push_back(std::move(syz));
                }
            }
        }
        bases.push_back(std::move(next));
        current = std::move(syzygies);
        ++level;
    }

    // Betti numbers from the constant strand, degree block by degree block.
    strands.emplace_back();  // zero map after the last level
    for (std::size_t k = 0; k < bases.size(); ++k) {
        std::map<int, std::uint64_t> count;
        for (int s : bases[k].shift) ++count[s];
        for (const auto& [degree, total] : count) {
            std::vector<int> rows, cols;
            int rank_out = 0, rank_in = 0;
            if (k > 0) {
                auto block = strand_block<K>(strands[k], bases[k - 1].shift, bases[k].shift, degree, rows, cols);
                rank_out = rank_field(std::move(block));
            }
            if (k + 1 < bases.size()) {
                auto block = strand_block<K>(strands[k + 1], bases[k].shift, bases[k + 1].shift, degree, rows, cols);
                rank_in = rank_field(std::move(block));
            }
            std::int64_t beta = static_cast<std::int64_t>(total) - rank_out - rank_in;
            if (beta < 0) throw std::logic_error("graded_betti_numbers: negative Betti number");
            table.add(static_cast<int>(k), degree, static_cast<std::uint64_t>(beta));
        }
    }
    return table;
}

}  // namespace beilab
