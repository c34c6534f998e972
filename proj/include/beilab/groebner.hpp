#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "beilab/errors.hpp"
#include "beilab/polynomial.hpp"

namespace beilab {

template <class K>
struct ReduceResult {
    Poly<K> remainder;
    std::vector<Poly<K>> quotients;  // aligned with the basis: f = sum q_i b_i + r
};

// Multivariate division: normal form of f against basis (nonzero
// polynomials), recording quotients. No term of the remainder is divisible
// by any leading monomial of the basis. The reducer is always the first
// basis element whose leading monomial divides the current lead, so the
// result is deterministic in the basis order.
template <class K>
ReduceResult<K> reduce(const Poly<K>& f, std::span<const Poly<K>> basis) {
    ReduceResult<K> res{Poly<K>::zero(f.nvars()), std::vector<Poly<K>>(basis.size(), Poly<K>::zero(f.nvars()))};
    std::vector<Term<K>> rem_terms;
    Poly<K> p = f;
    while (!p.is_zero()) {
        const Term<K>& lt = p.leading_term();
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            if (!basis[i].leading_monomial().divides(lt.mono)) continue;
            Monomial q = lt.mono.quotient(basis[i].leading_monomial());
            K c = lt.coef / basis[i].leading_coefficient();
            p = p - basis[i].times_term(q, c);
            res.quotients[i] = res.quotients[i] + Poly<K>::term(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem_terms.push_back(lt);
            p = p - Poly<K>::term(lt.mono, lt.coef);
        }
    }
    res.remainder = Poly<K>::from_terms(f.nvars(), std::move(rem_terms));
    return res;
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, std::span<const Poly<K>> basis) {
    return reduce(f, basis).remainder;
}

template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Poly<K> a = f.times_term(l.quotient(f.leading_monomial()), f.leading_coefficient().inverse());
    Poly<K> b = g.times_term(l.quotient(g.leading_monomial()), g.leading_coefficient().inverse());
    return a - b;
}

template <class K>
struct GroebnerBasis {
    std::vector<Poly<K>> gens;  // monic, fully inter-reduced, descending by leading monomial
    MonomialOrder order;
};

namespace gb_detail {

// Pair queue entry ordered by the normal strategy: smallest lcm degree
// first, ties by lex on the lcm, then by index.
struct PairKey {
    int degree;
    Monomial lcm;
    std::size_t i, j;

    bool operator<(const PairKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        int c = lex_compare(lcm, o.lcm);
        if (c != 0) return c < 0;
        return std::tie(i, j) < std::tie(o.i, o.j);
    }
};

}  // namespace gb_detail

// Buchberger's algorithm with the product criterion, followed by
// minimization and full inter-reduction. Output is the reduced Groebner
// basis: monic generators, no leading monomial dividing another, each
// generator in normal form against the rest, sorted descending by leading
// monomial.
template <class K>
GroebnerBasis<K> buchberger(std::vector<Poly<K>> gens, MonomialOrder order = {}) {
    std::vector<Poly<K>> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (order.nvars == 0 && !basis.empty()) order.nvars = basis.front().nvars();

    std::set<gb_detail::PairKey> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (basis[i].leading_monomial().coprime_with(basis[j].leading_monomial())) continue;
            Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            queue.insert({l.degree(), l, i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto key = *queue.begin();
        queue.erase(queue.begin());
        Poly<K> s = s_polynomial(basis[key.i], basis[key.j]);
        Poly<K> r = normal_form(s, std::span<const Poly<K>>(basis));
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            push_pairs(basis.size() - 1);
        }
    }

    // Minimize: drop generators whose leading monomial is divisible by
    // another surviving one.
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && !(mi == mj && j > i)) {
                keep[i] = 0;
                break;
            }
        }
    }
    std::vector<Poly<K>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // Inter-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly<K>> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly<K> r = normal_form(minimal[i], std::span<const Poly<K>>(others)).monic();
            if (!(r == minimal[i])) {
                if (r.is_zero())
                    minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                else
                    minimal[i] = r;
                changed = true;
                break;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [](const Poly<K>& a, const Poly<K>& b) {
        return lex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return GroebnerBasis<K>{std::move(minimal), order};
}

// Do the given generators already form a Groebner basis? Checks that every
// S-polynomial reduces to zero; no completion, no criteria.
template <class K>
bool generators_are_groebner(std::span<const Poly<K>> gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i].is_zero() || gens[j].is_zero()) continue;
            if (!normal_form(s_polynomial(gens[i], gens[j]), gens).is_zero()) return false;
        }
    return true;
}

// Minimal monomial generators of the ideal of leading monomials. For a
// reduced basis the leading monomials are already minimal.
template <class K>
std::vector<Monomial> initial_ideal(const GroebnerBasis<K>& gb) {
    std::vector<Monomial> lms;
    for (const auto& g : gb.gens) lms.push_back(g.leading_monomial());
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < lms.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < lms.size(); ++j) {
            if (i == j) continue;
            if (lms[j].divides(lms[i]) && !(lms[i] == lms[j] && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(lms[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; });
    return minimal;
}

template <class K>
bool ideal_membership(const Poly<K>& f, const GroebnerBasis<K>& gb) {
    return normal_form(f, std::span<const Poly<K>>(gb.gens)).is_zero();
}

template <class K>
std::vector<Poly<K>> ideal_sum(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b) {
    std::vector<Poly<K>> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Equality of ideals given by generators: compare reduced Groebner bases.
template <class K>
bool ideal_equal(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b, MonomialOrder order = {}) {
    GroebnerBasis<K> ga = buchberger(a, order);
    GroebnerBasis<K> gb = buchberger(b, order);
    return ga.gens == gb.gens;
}

namespace gb_detail {

// Lift a polynomial on `nvars` variables into the ring with one auxiliary
// variable t in front.
template <class K>
Poly<K> lift_with_aux(const Poly<K>& p) {
    std::vector<Term<K>> ts;
    for (const auto& t : p.terms()) {
        Monomial m(p.nvars() + 1);
        for (int i = 0; i < p.nvars(); ++i) m.set_exponent(i + 1, t.mono.exponent(i));
        ts.push_back({m, t.coef});
    }
    return Poly<K>::from_terms(p.nvars() + 1, std::move(ts));
}

template <class K>
Poly<K> drop_aux(const Poly<K>& p) {
    std::vector<Term<K>> ts;
    for (const auto& t : p.terms()) {
        Monomial m(p.nvars() - 1);
        for (int i = 1; i < p.nvars(); ++i) m.set_exponent(i - 1, t.mono.exponent(i));
        ts.push_back({m, t.coef});
    }
    return Poly<K>::from_terms(p.nvars() - 1, std::move(ts));
}

}  // namespace gb_detail

// Intersection via one auxiliary variable: I cap J is the elimination of t
// from t*I + (1-t)*J under lex with t first. Guarded to small rings; an
// empty generator list means the zero ideal.
template <class K>
std::vector<Poly<K>> ideal_intersection(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b, int nvars) {
    if (nvars > 8) throw ScaleGuardError("ideal_intersection: more than 8 base variables");
    auto is_unit = [](const std::vector<Poly<K>>& gens) {
        for (const auto& g : gens)
            if (!g.is_zero() && g.degree() == 0) return true;
        return false;
    };
    if (is_unit(a)) return b;
    if (is_unit(b)) return a;
    if (a.empty() || b.empty()) return {};

    const int lifted_vars = nvars + 1;
    Monomial t = Monomial::variable(lifted_vars, 0);
    Poly<K> t_poly = Poly<K>::term(t, K::one());
    Poly<K> one_minus_t = Poly<K>::constant(lifted_vars, K::one()) - t_poly;

    std::vector<Poly<K>> gens;
    for (const auto& f : a) gens.push_back(t_poly * gb_detail::lift_with_aux(f));
    for (const auto& g : b) gens.push_back(one_minus_t * gb_detail::lift_with_aux(g));

    GroebnerBasis<K> gb = buchberger(std::move(gens), MonomialOrder{lifted_vars, 1});
    std::vector<Poly<K>> result;
    for (const auto& g : gb.gens)
        if (g.leading_monomial().exponent(0) == 0) result.push_back(gb_detail::drop_aux(g));
    return result;
}

}  // namespace beilab
