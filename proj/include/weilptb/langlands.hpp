#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <weilptb/gaussian.hpp>
#include <weilptb/weil_rep.hpp>

namespace weilptb {

enum class DivAlg { R, H };

// -1 for R, +1 for H.
int epsilon_of(DivAlg d) noexcept;
std::string to_string(DivAlg d);

// Essentially square-integrable block: P1 (GL_1(R) character sgn^k|.|^lam),
// P2 (GL_2(R), k >= 1) or T (GL_1(H), dimension k >= 1).
class EssDiscrete {
public:
    enum class Kind { P1, P2, T };

    // Validating constructors: P1 needs k in {0,1}; P2, T need k >= 1.
    static EssDiscrete p1(std::int64_t k, GaussianRational lambda);
    static EssDiscrete p2(std::int64_t k, GaussianRational lambda);
    static EssDiscrete t(std::int64_t k, GaussianRational lambda);
    static EssDiscrete make(Kind kind, std::int64_t k, GaussianRational lambda);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] std::int64_t k() const noexcept { return k_; }
    [[nodiscard]] const GaussianRational &lambda() const noexcept { return lambda_; }

    // n_i: 1 for P1 and T, 2 for P2.
    [[nodiscard]] int block_size() const noexcept { return kind_ == Kind::P2 ? 2 : 1; }
    // Dimension of the attached parameter: 1 for P1, 2 otherwise.
    [[nodiscard]] int param_dim() const noexcept { return kind_ == Kind::P1 ? 1 : 2; }
    [[nodiscard]] bool legal_for(DivAlg d) const noexcept { return (kind_ == Kind::T) == (d == DivAlg::H); }

    [[nodiscard]] EssDiscrete with_lambda(GaussianRational lambda) const { return make(kind_, k_, std::move(lambda)); }

    friend bool operator==(const EssDiscrete &, const EssDiscrete &) = default;
    // Canonical key (n_i, k, re lambda, im lambda); P1 and T share n_i = 1 but
    // never coexist in one module, the kind breaks the remaining tie.
    friend std::strong_ordering operator<=>(const EssDiscrete &a, const EssDiscrete &b);

private:
    EssDiscrete(Kind kind, std::int64_t k, GaussianRational lambda) : kind_(kind), k_(k), lambda_(std::move(lambda)) {}

    Kind kind_;
    std::int64_t k_;
    GaussianRational lambda_;
};

// chi(z) = (z/|z|)^l |z|^eta on C^x.
struct HeckeCharacter {
    std::int64_t l = 0;
    GaussianRational eta;

    // chi as theta_{l, eta/2}.
    [[nodiscard]] CxCharacter as_cx() const;
    // chi(-1) = (-1)^l.
    [[nodiscard]] int sign_at_minus_one() const noexcept { return l % 2 == 0 ? 1 : -1; }
    // chi restricted to R^x, as the one-dimensional parameter phi1(l mod 2; eta).
    [[nodiscard]] WeilIrred restriction_to_rx() const;

    friend bool operator==(const HeckeCharacter &, const HeckeCharacter &) = default;
};

// Blocks in Langlands order: nonincreasing n_i^{-1} Re(lambda_i), ties broken
// by the canonical key.
class StandardModule {
public:
    StandardModule() = default;

    [[nodiscard]] DivAlg D() const noexcept { return d_; }
    [[nodiscard]] const std::vector<EssDiscrete> &blocks() const noexcept { return blocks_; }
    [[nodiscard]] std::size_t r() const noexcept { return blocks_.size(); }
    // 2n for R, n for H: Sum of block sizes.
    [[nodiscard]] int total_size() const;
    // The n of GL_{2n}(R) or GL_n(H).
    [[nodiscard]] int n() const;

    friend bool operator==(const StandardModule &, const StandardModule &) = default;
    friend StandardModule make_standard(DivAlg d, std::vector<EssDiscrete> blocks);

private:
    DivAlg d_ = DivAlg::R;
    std::vector<EssDiscrete> blocks_;
};

// Throws IllegalBlock if a block kind does not belong to D.
StandardModule make_standard(DivAlg d, std::vector<EssDiscrete> blocks);

// Langlands quotient of a standard module, recorded by its block multiset.
class IrrRepGL {
public:
    IrrRepGL() = default;
    // Throws IllegalBlock.
    IrrRepGL(DivAlg d, std::vector<EssDiscrete> blocks);
    explicit IrrRepGL(const StandardModule &sm) : IrrRepGL(sm.D(), sm.blocks()) {}

    [[nodiscard]] DivAlg D() const noexcept { return sm_.D(); }
    [[nodiscard]] const std::vector<EssDiscrete> &blocks() const noexcept { return sm_.blocks(); }
    [[nodiscard]] const StandardModule &standard_module() const noexcept { return sm_; }
    [[nodiscard]] int n() const { return sm_.n(); }

    friend bool operator==(const IrrRepGL &, const IrrRepGL &) = default;

private:
    StandardModule sm_;
};

WeilIrred llc(const EssDiscrete &block);
WeilRep llc(const IrrRepGL &pi);
// Throws NotRelevant when D = H and a one-dimensional summand is present.
IrrRepGL llc_inverse(const WeilRep &phi, DivAlg d);

EssDiscrete dual_block(const EssDiscrete &b);
IrrRepGL dual_irr(const IrrRepGL &pi);

EssDiscrete twist_by_chi(const EssDiscrete &b, const HeckeCharacter &chi);
IrrRepGL twist_by_chi(const IrrRepGL &pi, const HeckeCharacter &chi);

// Ind_{C^x}^{W_R}(chi^{-1}).
WeilRep ind_chi_inverse(const HeckeCharacter &chi);

// "P1(k;lam)", "T(k;lam)", blocks joined by " x ", "chi(l;eta)".
std::string to_string(const EssDiscrete &b);
std::string to_string(const std::vector<EssDiscrete> &blocks);
std::string to_string(const StandardModule &sm);
std::string to_string(const IrrRepGL &pi);
std::string to_string(const HeckeCharacter &chi);
std::ostream &operator<<(std::ostream &os, const EssDiscrete &b);
std::ostream &operator<<(std::ostream &os, const StandardModule &sm);
std::ostream &operator<<(std::ostream &os, const IrrRepGL &pi);
std::ostream &operator<<(std::ostream &os, const HeckeCharacter &chi);

} // namespace weilptb
