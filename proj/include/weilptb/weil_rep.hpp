#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <weilptb/gaussian.hpp>
#include <weilptb/mag_unit.hpp>
#include <weilptb/rational.hpp>

namespace weilptb {

// theta_{k,lambda}(z) = (z/|z|)^k |z|^{2 lambda} on C^x.
struct CxCharacter {
    std::int64_t k = 0;
    GaussianRational lambda;

    friend bool operator==(const CxCharacter &, const CxCharacter &) = default;
};

// Irreducible representation of the real Weil group: phi1(k;lambda) with
// k in {0,1}, or phi2(k;lambda) with k >= 1.
class WeilIrred {
public:
    enum class Kind { one_dim, two_dim };

    // Validating constructors; see make_irred for the error contract.
    static WeilIrred one_dim(std::int64_t k, GaussianRational lambda);
    static WeilIrred two_dim(std::int64_t k, GaussianRational lambda);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] int dim() const noexcept { return kind_ == Kind::one_dim ? 1 : 2; }
    [[nodiscard]] std::int64_t k() const noexcept { return k_; }
    [[nodiscard]] const GaussianRational &lambda() const noexcept { return lambda_; }

    friend bool operator==(const WeilIrred &, const WeilIrred &) = default;
    // Canonical key (dim, k, re lambda, im lambda).
    friend std::strong_ordering operator<=>(const WeilIrred &a, const WeilIrred &b);

private:
    WeilIrred(Kind kind, std::int64_t k, GaussianRational lambda)
        : kind_(kind), k_(k), lambda_(std::move(lambda))
    {
    }

    Kind kind_;
    std::int64_t k_;
    GaussianRational lambda_;
};

// Semisimple representation as a canonically sorted multiset of irreducibles.
class WeilRep {
public:
    WeilRep() = default;
    explicit WeilRep(std::vector<WeilIrred> summands);
    WeilRep(std::initializer_list<WeilIrred> summands) : WeilRep(std::vector<WeilIrred>(summands)) {}

    [[nodiscard]] const std::vector<WeilIrred> &summands() const noexcept { return summands_; }
    [[nodiscard]] int dim() const;
    [[nodiscard]] bool empty() const noexcept { return summands_.empty(); }

    friend bool operator==(const WeilRep &, const WeilRep &) = default;

private:
    std::vector<WeilIrred> summands_;
};

WeilRep direct_sum(const WeilRep &x, const WeilRep &y);

// dim 2 with negative k is canonicalized to |k|. Throws Reducible for
// (2, 0, _) and BadParity for dim 1 outside k in {0,1}.
WeilIrred make_irred(int dim, std::int64_t k, const GaussianRational &lambda);

WeilRep induce(const CxCharacter &theta);

WeilRep tensor(const WeilIrred &x, const WeilIrred &y);
WeilRep tensor(const WeilRep &x, const WeilRep &y);

WeilIrred dual(const WeilIrred &x);
WeilRep dual(const WeilRep &x);

// Always one-dimensional.
WeilIrred det_rep(const WeilIrred &x);
WeilIrred det_rep(const WeilRep &x);

// The character sgn^parity |.|^exponent of R^x obtained by composing a
// one-dimensional parameter with the reciprocity map.
struct RxCharacter {
    int parity = 0;
    GaussianRational exponent;

    friend bool operator==(const RxCharacter &, const RxCharacter &) = default;
};

// Throws NotOneDim on phi2.
RxCharacter restrict_to_rx(const WeilIrred &x);
WeilIrred from_rx(const RxCharacter &c);

// Local epsilon factor with respect to psi_a(x) = exp(2 pi i a x). a != 0.
MagUnitValue epsilon(const GaussianRational &s, const WeilIrred &x, const Rational &a);
MagUnitValue epsilon(const GaussianRational &s, const WeilRep &x, const Rational &a);

// Sample values of a used to check psi-independence.
const std::vector<Rational> &root_number_samples();

// Sign epsilon(1/2, x) for self-dual x with trivial determinant. Throws
// NotSelfDual, DetNotTrivial, or WellDefinednessViolation.
int root_number(const WeilRep &x);

// phi1(k;lam) / phi2(k;lam); summands joined with '+', "0" for the zero rep.
std::string to_string(const WeilIrred &x);
std::string to_string(const WeilRep &x);
std::ostream &operator<<(std::ostream &os, const WeilIrred &x);
std::ostream &operator<<(std::ostream &os, const WeilRep &x);

} // namespace weilptb
