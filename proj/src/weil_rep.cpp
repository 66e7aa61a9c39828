#include <weilptb/weil_rep.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <weilptb/error.hpp>

namespace weilptb {

namespace {

std::int64_t mod2(std::int64_t k)
{
    return ((k % 2) + 2) % 2;
}

const GaussianRational &half()
{
    static const GaussianRational h(make_rational(1, 2));
    return h;
}

} // namespace

WeilIrred WeilIrred::one_dim(std::int64_t k, GaussianRational lambda)
{
    if (k != 0 && k != 1) {
        throw Error(Errc::bad_parity, "phi1 needs k in {0,1}, got " + std::to_string(k));
    }
    return {Kind::one_dim, k, std::move(lambda)};
}

WeilIrred WeilIrred::two_dim(std::int64_t k, GaussianRational lambda)
{
    if (k == 0) {
        throw Error(Errc::reducible, "phi2 with k = 0 splits as phi1(0;lam)+phi1(1;lam)");
    }
    return {Kind::two_dim, std::llabs(k), std::move(lambda)};
}

std::strong_ordering operator<=>(const WeilIrred &a, const WeilIrred &b)
{
    if (auto c = a.dim() <=> b.dim(); c != 0) {
        return c;
    }
    if (auto c = a.k_ <=> b.k_; c != 0) {
        return c;
    }
    return a.lambda_ <=> b.lambda_;
}

WeilRep::WeilRep(std::vector<WeilIrred> summands) : summands_(std::move(summands))
{
    std::sort(summands_.begin(), summands_.end());
}

int WeilRep::dim() const
{
    int d = 0;
    for (const auto &s : summands_) {
        d += s.dim();
    }
    return d;
}

WeilRep direct_sum(const WeilRep &x, const WeilRep &y)
{
    std::vector<WeilIrred> all = x.summands();
    all.insert(all.end(), y.summands().begin(), y.summands().end());
    return WeilRep(std::move(all));
}

WeilIrred make_irred(int dim, std::int64_t k, const GaussianRational &lambda)
{
    switch (dim) {
    case 1:
        return WeilIrred::one_dim(k, lambda);
    case 2:
        return WeilIrred::two_dim(k, lambda);
    default:
        throw Error(Errc::invalid_argument, "irreducible dimension must be 1 or 2");
    }
}

WeilRep induce(const CxCharacter &theta)
{
    if (theta.k == 0) {
        return {WeilIrred::one_dim(0, theta.lambda), WeilIrred::one_dim(1, theta.lambda)};
    }
    return {WeilIrred::two_dim(theta.k, theta.lambda)};
}

WeilRep tensor(const WeilIrred &x, const WeilIrred &y)
{
    const GaussianRational lam = x.lambda() + y.lambda();
    if (x.dim() == 1 && y.dim() == 1) {
        return {WeilIrred::one_dim(mod2(x.k() + y.k()), lam)};
    }
    if (x.dim() == 1) {
        return {WeilIrred::two_dim(y.k(), lam)};
    }
    if (y.dim() == 1) {
        return {WeilIrred::two_dim(x.k(), lam)};
    }
    return direct_sum(induce({x.k() + y.k(), lam}), induce({x.k() - y.k(), lam}));
}

WeilRep tensor(const WeilRep &x, const WeilRep &y)
{
    std::vector<WeilIrred> out;
    for (const auto &a : x.summands()) {
        for (const auto &b : y.summands()) {
            const WeilRep t = tensor(a, b);
            out.insert(out.end(), t.summands().begin(), t.summands().end());
        }
    }
    return WeilRep(std::move(out));
}

WeilIrred dual(const WeilIrred &x)
{
    return x.kind() == WeilIrred::Kind::one_dim ? WeilIrred::one_dim(x.k(), -x.lambda())
                                                : WeilIrred::two_dim(x.k(), -x.lambda());
}

WeilRep dual(const WeilRep &x)
{
    std::vector<WeilIrred> out;
    out.reserve(x.summands().size());
    for (const auto &s : x.summands()) {
        out.push_back(dual(s));
    }
    return WeilRep(std::move(out));
}

WeilIrred det_rep(const WeilIrred &x)
{
    if (x.kind() == WeilIrred::Kind::one_dim) {
        return x;
    }
    return WeilIrred::one_dim(mod2(x.k() + 1), x.lambda() + x.lambda());
}

WeilIrred det_rep(const WeilRep &x)
{
    std::int64_t k = 0;
    GaussianRational lam;
    for (const auto &s : x.summands()) {
        const WeilIrred d = det_rep(s);
        k += d.k();
        lam += d.lambda();
    }
    return WeilIrred::one_dim(mod2(k), lam);
}

RxCharacter restrict_to_rx(const WeilIrred &x)
{
    if (x.kind() != WeilIrred::Kind::one_dim) {
        throw Error(Errc::not_one_dim, "restriction to R^x needs a one-dimensional parameter, got " + to_string(x));
    }
    return {static_cast<int>(x.k()), x.lambda()};
}

WeilIrred from_rx(const RxCharacter &c)
{
    return WeilIrred::one_dim(mod2(c.parity), c.exponent);
}

MagUnitValue epsilon(const GaussianRational &s, const WeilIrred &x, const Rational &a)
{
    if (a == 0) {
        throw Error(Errc::invalid_argument, "additive character parameter a must be nonzero");
    }
    const Rational base = abs(a);
    const bool negative = a < 0;
    if (x.kind() == WeilIrred::Kind::one_dim) {
        const std::int64_t e = x.k() + (negative ? 2 * x.k() : 0);
        return {static_cast<int>(e % 4), base, x.lambda() + s - half()};
    }
    const std::int64_t m = x.k() + 1;
    const std::int64_t e = m + (negative ? 2 * m : 0);
    const GaussianRational ls = x.lambda() + s;
    return {static_cast<int>(e % 4), base, ls + ls - GaussianRational(1)};
}

MagUnitValue epsilon(const GaussianRational &s, const WeilRep &x, const Rational &a)
{
    if (a == 0) {
        throw Error(Errc::invalid_argument, "additive character parameter a must be nonzero");
    }
    MagUnitValue acc;
    for (const auto &summand : x.summands()) {
        acc = muv_mul(acc, epsilon(s, summand, a));
    }
    return acc;
}

const std::vector<Rational> &root_number_samples()
{
    static const std::vector<Rational> samples{Rational(1), Rational(-1), Rational(2), Rational(-3)};
    return samples;
}

int root_number(const WeilRep &x)
{
    if (dual(x) != x) {
        throw Error(Errc::not_self_dual, "root number needs a self-dual parameter, got " + to_string(x));
    }
    if (det_rep(x) != WeilIrred::one_dim(0, 0)) {
        throw Error(Errc::det_not_trivial, "root number needs trivial determinant, got det " + to_string(det_rep(x)));
    }
    std::optional<MagUnitValue> first;
    for (const auto &a : root_number_samples()) {
        const MagUnitValue v = epsilon(half(), x, a);
        if (!v.is_sign()) {
            throw Error(Errc::well_definedness_violation, "epsilon(1/2) = " + to_string(v) + " is not a sign for " + to_string(x));
        }
        if (first && *first != v) {
            throw Error(Errc::well_definedness_violation, "epsilon(1/2) depends on psi for " + to_string(x));
        }
        first = v;
    }
    return first ? first->sign() : 1;
}

std::string to_string(const WeilIrred &x)
{
    return std::string(x.kind() == WeilIrred::Kind::one_dim ? "phi1(" : "phi2(") + std::to_string(x.k()) + ";" +
           to_string(x.lambda()) + ")";
}

std::string to_string(const WeilRep &x)
{
    if (x.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &s : x.summands()) {
        if (!out.empty()) {
            out += "+";
        }
        out += to_string(s);
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const WeilIrred &x)
{
    return os << to_string(x);
}

std::ostream &operator<<(std::ostream &os, const WeilRep &x)
{
    return os << to_string(x);
}

} // namespace weilptb
