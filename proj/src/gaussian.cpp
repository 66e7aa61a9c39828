#include <weilptb/error.hpp>
#include <weilptb/gaussian.hpp>

#include <utility>

namespace weilptb {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero()) {
        throw Error(Errc::invalid_argument, "inverse of zero Gaussian rational");
    }
    const Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::strong_ordering operator<=>(const GaussianRational &a, const GaussianRational &b)
{
    if (const int c = cmp(a.re_, b.re_); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const int c = cmp(a.im_, b.im_);
    if (c == 0) {
        return std::strong_ordering::equal;
    }
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(const GaussianRational &z)
{
    std::string out = to_string(z.re());
    if (z.im() == 0) {
        return out;
    }
    if (z.im() > 0) {
        out += '+' + to_string(z.im());
    } else {
        out += '-' + to_string(Rational(-z.im()));
    }
    out += 'i';
    return out;
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z)
{
    return os << to_string(z);
}

} // namespace weilptb
