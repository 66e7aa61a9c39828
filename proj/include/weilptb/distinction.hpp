#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <weilptb/langlands.hpp>
#include <weilptb/mag_unit.hpp>
#include <weilptb/weil_rep.hpp>

namespace weilptb {

// Involutive permutation of {0..r-1}, printed 1-based in cycle notation.
class Involution {
public:
    Involution() = default;
    // Throws InvalidArgument unless image is an involutive permutation.
    explicit Involution(std::vector<int> image);
    static Involution identity(int r);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(image_.size()); }
    [[nodiscard]] int operator()(int i) const { return image_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] const std::vector<int> &image() const noexcept { return image_; }
    [[nodiscard]] bool is_fixed(int i) const { return (*this)(i) == i; }
    // 2-cycles (i, j) with i < j, increasing in i.
    [[nodiscard]] std::vector<std::pair<int, int>> cycles() const;

    friend bool operator==(const Involution &, const Involution &) = default;
    // Lexicographic on cycles(), so the identity comes first.
    friend bool operator<(const Involution &a, const Involution &b);

private:
    std::vector<int> image_;
};

// "id" or e.g. "(1 2)(3 4)".
std::string to_string(const Involution &s);

// All involutions of r points in the order above.
std::vector<Involution> all_involutions(int r);

// Fixed-point criterion for an essentially square-integrable block. Throws
// NotEligible for P1.
bool esi_distinguished(const EssDiscrete &pi, const HeckeCharacter &chi);

// pi1 is the chi-twisted contragredient of pi2. Throws MixedVariants.
bool pair_distinguished(const EssDiscrete &pi1, const EssDiscrete &pi2, const HeckeCharacter &chi);

std::vector<Involution> enumerate_T(const StandardModule &sm, const HeckeCharacter &chi);

// Existence of a W_R-invariant symplectic form with similitude chi|_{R^x}.
// Throws OddDimension.
bool is_gsp_with_similitude(const WeilRep &phi, const HeckeCharacter &chi);

struct EpsilonIdentity {
    MagUnitValue lhs;
    int rhs = 1;
    bool ok = false;
};

// Throws PreconditionFailed when the GSp condition fails.
EpsilonIdentity epsilon_identity(const IrrRepGL &pi, const HeckeCharacter &chi);

struct Abc {
    int a = 0;
    int b = 0;
    int c = 0;
    // (epsilon(D) chi(-1))^{a+c}
    int prediction = 1;

    friend bool operator==(const Abc &, const Abc &) = default;
};

// Throws NotInT if varsigma is not in enumerate_T(sm, chi).
Abc abc_bookkeeping(const StandardModule &sm, const Involution &varsigma, const HeckeCharacter &chi);

struct DistinctionReport {
    StandardModule sm;
    HeckeCharacter chi;
    std::vector<Involution> T_set;
    int hom_upper_bound = 0;
    bool gsp_ok = false;
    // Present when gsp_ok.
    std::optional<MagUnitValue> epsilon_lhs;
    std::optional<int> epsilon_rhs;
    std::optional<bool> identity_ok;
    // One entry per element of T_set.
    std::vector<Abc> abc;
    // Human-readable failures of the theorem's predictions; empty when all hold.
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

DistinctionReport check_main_theorem(const StandardModule &sm, const HeckeCharacter &chi);

bool check_duality_corollary(const StandardModule &sm, const HeckeCharacter &chi);

} // namespace weilptb
