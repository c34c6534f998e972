#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace beilab {

// Prime field GF(P) with compile-time modulus. The default working field is
// GF(32003); GF(2) is the characteristic cross-check field.
template <std::uint32_t P>
class Gf {
public:
    static_assert(P >= 2);

    constexpr Gf() = default;
    constexpr Gf(long long x) {
        long long r = x % static_cast<long long>(P);
        if (r < 0) r += P;
        v_ = static_cast<std::uint32_t>(r);
    }

    static constexpr Gf zero() { return Gf(); }
    static constexpr Gf one() { return Gf(1); }

    bool is_zero() const { return v_ == 0; }
    std::uint32_t value() const { return v_; }

    Gf operator-() const {
        Gf r;
        r.v_ = v_ == 0 ? 0 : P - v_;
        return r;
    }
    Gf& operator+=(Gf o) {
        v_ += o.v_;
        if (v_ >= P) v_ -= P;
        return *this;
    }
    Gf& operator-=(Gf o) {
        v_ += P - o.v_;
        if (v_ >= P) v_ -= P;
        return *this;
    }
    Gf& operator*=(Gf o) {
        v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % P);
        return *this;
    }
    friend Gf operator+(Gf a, Gf b) { return a += b; }
    friend Gf operator-(Gf a, Gf b) { return a -= b; }
    friend Gf operator*(Gf a, Gf b) { return a *= b; }

    Gf inverse() const {
        if (v_ == 0) throw std::domain_error("Gf: inverse of zero");
        // Fermat: v^(P-2); P is prime.
        Gf base = *this, acc = one();
        std::uint32_t e = P - 2;
        while (e != 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
    friend Gf operator/(Gf a, Gf b) { return a * b.inverse(); }

    bool operator==(const Gf&) const = default;

    bool negative() const { return false; }
    std::string str() const { return std::to_string(v_); }

    static std::string field_name() { return "p" + std::to_string(P); }
    static Gf parse(const std::string& s) { return Gf(std::stoll(s)); }

private:
    std::uint32_t v_ = 0;
};

// Exact rationals over arbitrary-precision integers, always in lowest terms.
class Rational {
public:
    using Rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long long x) : r_(x) {}
    explicit Rational(Rep r) : r_(std::move(r)) {}

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return r_.is_zero(); }
    const Rep& rep() const { return r_; }

    Rational operator-() const { return Rational(Rep(-r_)); }
    Rational& operator+=(const Rational& o) {
        r_ += o.r_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        r_ -= o.r_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        r_ *= o.r_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(Rep(1) / r_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    bool operator==(const Rational&) const = default;

    bool negative() const { return r_ < 0; }
    std::string str() const { return r_.str(); }

    static std::string field_name() { return "Q"; }
    static Rational parse(const std::string& s) { return Rational(Rep(s)); }

private:
    Rep r_;
};

template <class K>
inline constexpr bool is_rational_field_v = false;
template <>
inline constexpr bool is_rational_field_v<Rational> = true;

}  // namespace beilab
