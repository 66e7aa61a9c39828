#include <weilptb/error.hpp>
#include <weilptb/mag_unit.hpp>

#include <utility>

namespace weilptb {

MagUnitValue::MagUnitValue(int i_exponent, Rational base, GaussianRational exponent)
    : i_exponent_(((i_exponent % 4) + 4) % 4), base_(std::move(base)), exponent_(std::move(exponent))
{
    base_.canonicalize();
    if (base_ <= 0) {
        throw Error(Errc::invalid_argument, "magnitude base must be positive, got " + to_string(base_));
    }
    if (exponent_.is_zero() || base_ == 1) {
        base_ = 1;
        exponent_ = GaussianRational();
    }
}

int MagUnitValue::sign() const
{
    if (!is_sign()) {
        throw Error(Errc::invalid_argument, "value " + to_string(*this) + " is not a sign");
    }
    return i_exponent_ == 0 ? 1 : -1;
}

MagUnitValue muv_mul(const MagUnitValue &x, const MagUnitValue &y)
{
    const int e = x.i_exponent() + y.i_exponent();
    if (x.exponent().is_zero()) {
        return {e, y.base(), y.exponent()};
    }
    if (y.exponent().is_zero()) {
        return {e, x.base(), x.exponent()};
    }
    if (x.base() != y.base()) {
        throw Error(Errc::mixed_bases,
                    "cannot multiply powers of " + to_string(x.base()) + " and " + to_string(y.base()));
    }
    return {e, x.base(), x.exponent() + y.exponent()};
}

std::string to_string(const MagUnitValue &v)
{
    static constexpr const char *units[] = {"1", "i", "-1", "-i"};
    std::string out = units[v.i_exponent()];
    if (!v.exponent().is_zero()) {
        out += "*|" + to_string(v.base()) + "|^{" + to_string(v.exponent()) + "}";
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const MagUnitValue &v)
{
    return os << to_string(v);
}

} // namespace weilptb
