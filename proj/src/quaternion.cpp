#include <weilptb/error.hpp>
#include <weilptb/quaternion.hpp>

#include <array>
#include <utility>

namespace weilptb {

RationalQuaternion::RationalQuaternion(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
}

Rational RationalQuaternion::norm() const
{
    return Rational(a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_);
}

RationalQuaternion RationalQuaternion::inverse() const
{
    if (is_zero()) {
        throw Error(Errc::invalid_argument, "inverse of zero quaternion");
    }
    const Rational n = norm();
    return {Rational(a_ / n), Rational(-b_ / n), Rational(-c_ / n), Rational(-d_ / n)};
}

RationalQuaternion &RationalQuaternion::operator+=(const RationalQuaternion &o)
{
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

RationalQuaternion &RationalQuaternion::operator-=(const RationalQuaternion &o)
{
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

RationalQuaternion operator*(const RationalQuaternion &x, const RationalQuaternion &y)
{
    return {Rational(x.a_ * y.a_ - x.b_ * y.b_ - x.c_ * y.c_ - x.d_ * y.d_),
            Rational(x.a_ * y.b_ + x.b_ * y.a_ + x.c_ * y.d_ - x.d_ * y.c_),
            Rational(x.a_ * y.c_ - x.b_ * y.d_ + x.c_ * y.a_ + x.d_ * y.b_),
            Rational(x.a_ * y.d_ + x.b_ * y.c_ - x.c_ * y.b_ + x.d_ * y.a_)};
}

std::string to_string(const RationalQuaternion &q)
{
    const std::array<const Rational *, 4> parts{&q.a(), &q.b(), &q.c(), &q.d()};
    const std::array<const char *, 4> units{"", "i", "j", "k"};
    std::string out;
    for (std::size_t n = 0; n < 4; ++n) {
        const Rational &x = *parts[n];
        if (x == 0) {
            continue;
        }
        if (x < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        const Rational mag = abs(x);
        if (n == 0 || mag != 1) {
            out += to_string(mag);
        }
        out += units[n];
    }
    return out.empty() ? "0" : out;
}

std::ostream &operator<<(std::ostream &os, const RationalQuaternion &q)
{
    return os << to_string(q);
}

} // namespace weilptb
