#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <weilptb/rational.hpp>

namespace weilptb {

// An element re + im*i of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(std::int64_t re) : re_(make_rational(re)) {}
    GaussianRational(Rational re, Rational im = 0);

    [[nodiscard]] const Rational &re() const noexcept { return re_; }
    [[nodiscard]] const Rational &im() const noexcept { return im_; }

    [[nodiscard]] bool is_zero() const { return re_ == 0 && im_ == 0; }
    [[nodiscard]] bool is_real() const { return im_ == 0; }
    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
    [[nodiscard]] Rational norm() const { return Rational(re_ * re_ + im_ * im_); }
    // Throws Error(invalid_argument) on zero. Only matrix code needs this.
    [[nodiscard]] GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    // Lexicographic on (re, im); used only for canonical orderings.
    friend std::strong_ordering operator<=>(const GaussianRational &a, const GaussianRational &b);

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

private:
    Rational re_{0};
    Rational im_{0};
};

// "p/q", or "p/q+r/s i" written without spaces as "p/q+r/si".
std::string to_string(const GaussianRational &z);
std::ostream &operator<<(std::ostream &os, const GaussianRational &z);

} // namespace weilptb
