#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace beilab {

// Exponent vector over a fixed variable list. Variable 0 is the largest in
// the lex order. The standard ring on 2n variables uses the layout
// x_1 > ... > x_n > y_1 > ... > y_n; an elimination ring prepends a block
// of auxiliary variables.
class Monomial {
public:
    static constexpr int kMaxVars = 20;

    Monomial() = default;
    explicit Monomial(int nvars) : n_(static_cast<std::uint8_t>(nvars)) {
        if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("Monomial: bad variable count");
    }

    static Monomial variable(int nvars, int index, int power = 1) {
        Monomial m(nvars);
        m.set_exponent(index, power);
        return m;
    }

    int nvars() const { return n_; }
    int exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }
    void set_exponent(int i, int e) {
        if (i < 0 || i >= n_) throw std::invalid_argument("Monomial: variable index out of range");
        if (e < 0 || e > 255) throw std::invalid_argument("Monomial: exponent out of range");
        e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    }

    int degree() const {
        int d = 0;
        for (int i = 0; i < n_; ++i) d += e_[i];
        return d;
    }

    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < n_; ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    bool coprime_with(const Monomial& m) const {
        for (int i = 0; i < n_; ++i)
            if (e_[i] != 0 && m.e_[i] != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] + m.e_[i]);
        return r;
    }

    // *this / d; requires d.divides(*this).
    Monomial quotient(const Monomial& d) const {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) {
            if (d.e_[i] > e_[i]) throw std::invalid_argument("Monomial: quotient does not divide");
            r.e_[i] = static_cast<std::uint8_t>(e_[i] - d.e_[i]);
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        for (int i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }

    bool squarefree() const {
        for (int i = 0; i < n_; ++i)
            if (e_[i] > 1) return false;
        return true;
    }

    // Bitmask of variables with positive exponent.
    std::uint32_t support() const {
        std::uint32_t s = 0;
        for (int i = 0; i < n_; ++i)
            if (e_[i] != 0) s |= 1u << i;
        return s;
    }

    bool operator==(const Monomial& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }

private:
    std::uint8_t n_ = 0;
    std::array<std::uint8_t, kMaxVars> e_{};
};

// Lex comparison: the earlier variable with the larger exponent wins.
// Returns negative/zero/positive like a three-way compare.
inline int lex_compare(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("lex_compare: variable count mismatch");
    for (int i = 0; i < a.nvars(); ++i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d;
    }
    return 0;
}

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

// Order tag: plain lex, or lex with a leading block of naux elimination
// variables (the block order eliminates those variables).
struct MonomialOrder {
    int nvars = 0;
    int naux = 0;
};

}  // namespace beilab
