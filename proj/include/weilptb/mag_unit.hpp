#pragma once

#include <ostream>
#include <string>

#include <weilptb/gaussian.hpp>
#include <weilptb/rational.hpp>

namespace weilptb {

// Symbolic value (sqrt(-1))^e * base^exponent with e in Z/4, base > 0 rational
// and a Gaussian-rational exponent. The real power is never evaluated, so
// equality is decided on (e, base, exponent).
//
// Canonical form: exponent == 0 forces base == 1, and base == 1 forces
// exponent == 0 (1^x is 1 for every x).
class MagUnitValue {
public:
    MagUnitValue() = default;
    MagUnitValue(int i_exponent, Rational base, GaussianRational exponent);

    static MagUnitValue unit(int i_exponent) { return {i_exponent, Rational(1), GaussianRational()}; }

    [[nodiscard]] int i_exponent() const noexcept { return i_exponent_; }
    [[nodiscard]] const Rational &base() const noexcept { return base_; }
    [[nodiscard]] const GaussianRational &exponent() const noexcept { return exponent_; }

    // True when the value is +1 or -1.
    [[nodiscard]] bool is_sign() const { return exponent_.is_zero() && i_exponent_ % 2 == 0; }
    [[nodiscard]] int sign() const;

    friend bool operator==(const MagUnitValue &, const MagUnitValue &) = default;

private:
    int i_exponent_ = 0;
    Rational base_{1};
    GaussianRational exponent_;
};

// Throws Error(mixed_bases) when both factors carry a nontrivial power of
// different bases.
MagUnitValue muv_mul(const MagUnitValue &x, const MagUnitValue &y);

inline MagUnitValue operator*(const MagUnitValue &x, const MagUnitValue &y)
{
    return muv_mul(x, y);
}

// "1", "-1", "i" or "-i", followed by "*|b|^{e}" when the power is nontrivial.
std::string to_string(const MagUnitValue &v);
std::ostream &operator<<(std::ostream &os, const MagUnitValue &v);

} // namespace weilptb
