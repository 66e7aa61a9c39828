#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <weilptb/rational.hpp>

namespace weilptb {

// a + b*i + c*j + d*k in Hamilton's quaternions over Q.
class RationalQuaternion {
public:
    RationalQuaternion() = default;
    RationalQuaternion(std::int64_t a) : a_(make_rational(a)) {}
    RationalQuaternion(Rational a, Rational b, Rational c, Rational d);

    static RationalQuaternion i() { return {0, 1, 0, 0}; }
    static RationalQuaternion j() { return {0, 0, 1, 0}; }
    static RationalQuaternion k() { return {0, 0, 0, 1}; }

    [[nodiscard]] const Rational &a() const noexcept { return a_; }
    [[nodiscard]] const Rational &b() const noexcept { return b_; }
    [[nodiscard]] const Rational &c() const noexcept { return c_; }
    [[nodiscard]] const Rational &d() const noexcept { return d_; }

    [[nodiscard]] bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    // Lies in R + R*i, the copy of C fixed by conjugation with i.
    [[nodiscard]] bool is_complex() const { return c_ == 0 && d_ == 0; }
    [[nodiscard]] RationalQuaternion conj() const { return {a_, -b_, -c_, -d_}; }
    // Reduced norm x * conj(x).
    [[nodiscard]] Rational norm() const;
    [[nodiscard]] RationalQuaternion inverse() const;

    RationalQuaternion operator-() const { return {-a_, -b_, -c_, -d_}; }
    RationalQuaternion &operator+=(const RationalQuaternion &o);
    RationalQuaternion &operator-=(const RationalQuaternion &o);

    friend RationalQuaternion operator+(RationalQuaternion x, const RationalQuaternion &y) { return x += y; }
    friend RationalQuaternion operator-(RationalQuaternion x, const RationalQuaternion &y) { return x -= y; }
    // Hamilton product; noncommutative.
    friend RationalQuaternion operator*(const RationalQuaternion &x, const RationalQuaternion &y);
    RationalQuaternion &operator*=(const RationalQuaternion &o) { return *this = *this * o; }

    friend bool operator==(const RationalQuaternion &x, const RationalQuaternion &y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

private:
    Rational a_{0}, b_{0}, c_{0}, d_{0};
};

inline RationalQuaternion quat_mul(const RationalQuaternion &x, const RationalQuaternion &y)
{
    return x * y;
}

// e.g. "1", "-j", "1/2+3i-k".
std::string to_string(const RationalQuaternion &q);
std::ostream &operator<<(std::ostream &os, const RationalQuaternion &q);

} // namespace weilptb
