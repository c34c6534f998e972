#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "beilab/field.hpp"
#include "beilab/monomial.hpp"

namespace beilab {

template <class K>
struct Term {
    Monomial mono;
    K coef;
};

// Exact multivariate polynomial: terms sorted by descending lex monomial,
// no zero coefficients stored.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly term(Monomial m, K c) {
        Poly p(m.nvars());
        if (!c.is_zero()) p.ts_.push_back({std::move(m), std::move(c)});
        return p;
    }

    static Poly constant(int nvars, K c) { return term(Monomial(nvars), std::move(c)); }

    static Poly from_terms(int nvars, std::vector<Term<K>> ts) {
        Poly p(nvars);
        std::sort(ts.begin(), ts.end(),
                  [](const Term<K>& a, const Term<K>& b) { return lex_compare(a.mono, b.mono) > 0; });
        for (auto& t : ts) {
            if (t.mono.nvars() != nvars) throw std::invalid_argument("Poly: term variable count mismatch");
            if (!p.ts_.empty() && p.ts_.back().mono == t.mono)
                p.ts_.back().coef += t.coef;
            else
                p.ts_.push_back(std::move(t));
            if (!p.ts_.empty() && p.ts_.back().coef.is_zero()) p.ts_.pop_back();
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return ts_.empty(); }
    const std::vector<Term<K>>& terms() const { return ts_; }
    std::size_t term_count() const { return ts_.size(); }

    const Term<K>& leading_term() const {
        if (ts_.empty()) throw std::domain_error("Poly: leading term of zero");
        return ts_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const K& leading_coefficient() const { return leading_term().coef; }

    // Max total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : ts_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (ts_.empty()) return true;
        int d = ts_.front().mono.degree();
        for (const auto& t : ts_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    Poly operator-() const {
        Poly r(nvars_);
        r.ts_.reserve(ts_.size());
        for (const auto& t : ts_) r.ts_.push_back({t.mono, -t.coef});
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
        Poly r(a.nvars_);
        std::size_t i = 0, j = 0;
        while (i < a.ts_.size() && j < b.ts_.size()) {
            int c = lex_compare(a.ts_[i].mono, b.ts_[j].mono);
            if (c > 0)
                r.ts_.push_back(a.ts_[i++]);
            else if (c < 0)
                r.ts_.push_back(b.ts_[j++]);
            else {
                K s = a.ts_[i].coef + b.ts_[j].coef;
                if (!s.is_zero()) r.ts_.push_back({a.ts_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        while (i < a.ts_.size()) r.ts_.push_back(a.ts_[i++]);
        while (j < b.ts_.size()) r.ts_.push_back(b.ts_[j++]);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    // Multiply by a single term.
    Poly times_term(const Monomial& m, const K& c) const {
        Poly r(nvars_);
        if (c.is_zero()) return r;
        r.ts_.reserve(ts_.size());
        for (const auto& t : ts_) r.ts_.push_back({t.mono * m, t.coef * c});
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
        Poly r(a.nvars_);
        for (const auto& t : a.ts_) r = r + b.times_term(t.mono, t.coef);
        return r;
    }

    Poly scaled(const K& c) const { return times_term(Monomial(nvars_), c); }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coefficient().inverse());
    }

    bool operator==(const Poly& o) const {
        if (nvars_ != o.nvars_ || ts_.size() != o.ts_.size()) return false;
        for (std::size_t i = 0; i < ts_.size(); ++i)
            if (!(ts_[i].mono == o.ts_[i].mono) || !(ts_[i].coef == o.ts_[i].coef)) return false;
        return true;
    }

private:
    int nvars_ = 0;
    std::vector<Term<K>> ts_;
};

// Ring descriptor for printing and parsing: n base variable pairs
// x_1..x_n, y_1..y_n, preceded by naux elimination variables (printed as
// t, t2, ...).
struct PolyRing {
    int n = 0;
    int naux = 0;
    int nvars() const { return 2 * n + naux; }

    std::string var_name(int i) const {
        if (i < naux) return naux == 1 ? "t" : "t" + std::to_string(i + 1);
        int k = i - naux;
        if (k < n) return "x" + std::to_string(k + 1);
        return "y" + std::to_string(k - n + 1);
    }

    int x_index(int i) const { return naux + i - 1; }      // x_i, 1-based i
    int y_index(int i) const { return naux + n + i - 1; }  // y_i, 1-based i

    Monomial x(int i) const { return Monomial::variable(nvars(), x_index(i)); }
    Monomial y(int i) const { return Monomial::variable(nvars(), y_index(i)); }
};

// Text form: terms like `3*x1*y2^2` joined by ` + ` / ` - `; coefficient 1
// is omitted except on the constant term. Round-trips exactly with
// parse_poly.
template <class K>
std::string poly_to_string(const Poly<K>& p, const PolyRing& ring) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms()) {
        K c = t.coef;
        if (first) {
            if (c.negative()) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c.negative() ? " - " : " + ");
            if (c.negative()) c = -c;
        }
        first = false;
        bool printed_coef = false;
        if (t.mono.is_one() || !(c == K::one())) {
            out << c.str();
            printed_coef = true;
        }
        bool first_var = !printed_coef;
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << ring.var_name(i);
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace poly_detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace poly_detail

template <class K>
Poly<K> parse_poly(const std::string& s, const PolyRing& ring) {
    using poly_detail::skip_ws;
    std::vector<Term<K>> terms;
    std::size_t i = 0;
    skip_ws(s, i);
    if (i < s.size() && s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return Poly<K>::zero(ring.nvars());
    bool negate = false;
    while (i < s.size()) {
        skip_ws(s, i);
        if (i >= s.size()) break;
        if (s[i] == '+' || s[i] == '-') {
            negate = (s[i] == '-');
            ++i;
            skip_ws(s, i);
        }
        // coefficient (optional): digits, optionally /digits
        std::string num;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num.push_back(s[i++]);
        if (!num.empty() && i < s.size() && s[i] == '/') {
            num.push_back(s[i++]);
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num.push_back(s[i++]);
        }
        K coef = num.empty() ? K::one() : K::parse(num);
        if (negate) coef = -coef;
        Monomial mono(ring.nvars());
        bool expect_factor = num.empty();
        while (true) {
            skip_ws(s, i);
            if (!expect_factor) {
                if (i < s.size() && s[i] == '*') {
                    ++i;
                    skip_ws(s, i);
                } else
                    break;
            }
            expect_factor = false;
            if (i >= s.size() || (s[i] != 'x' && s[i] != 'y' && s[i] != 't'))
                throw std::invalid_argument("parse_poly: expected variable at position " + std::to_string(i));
            char kind = s[i++];
            std::string idx;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) idx.push_back(s[i++]);
            int var;
            if (kind == 't') {
                int t_no = idx.empty() ? 1 : std::stoi(idx);
                if (t_no < 1 || t_no > ring.naux) throw std::invalid_argument("parse_poly: bad aux variable");
                var = t_no - 1;
            } else {
                if (idx.empty()) throw std::invalid_argument("parse_poly: missing variable index");
                int k = std::stoi(idx);
                if (k < 1 || k > ring.n) throw std::invalid_argument("parse_poly: variable index out of range");
                var = kind == 'x' ? ring.x_index(k) : ring.y_index(k);
            }
            int exp = 1;
            skip_ws(s, i);
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws(s, i);
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
                if (e.empty()) throw std::invalid_argument("parse_poly: missing exponent");
                exp = std::stoi(e);
            }
            mono.set_exponent(var, mono.exponent(var) + exp);
        }
        terms.push_back({mono, coef});
        negate = false;
    }
    if (terms.empty()) throw std::invalid_argument("parse_poly: empty input");
    return Poly<K>::from_terms(ring.nvars(), std::move(terms));
}

}  // namespace beilab
