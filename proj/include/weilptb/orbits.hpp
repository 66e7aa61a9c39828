#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <weilptb/distinction.hpp>
#include <weilptb/gaussian.hpp>
#include <weilptb/langlands.hpp>
#include <weilptb/matrix.hpp>
#include <weilptb/quaternion.hpp>
#include <weilptb/rational.hpp>
#include <weilptb/root_datum.hpp>

namespace weilptb {

// Block sizes of the standard parabolic: n_i in {1,2} summing to 2n for R,
// all ones for H.
struct PartitionSpec {
    DivAlg D = DivAlg::R;
    std::vector<int> parts;

    // Throws InvalidArgument on an illegal spec.
    void validate() const;
    // Size of the matrices of G over D: 2n for R, n for H.
    [[nodiscard]] int matrix_size() const;
    [[nodiscard]] std::vector<int> offsets() const;

    friend bool operator==(const PartitionSpec &, const PartitionSpec &) = default;
};

// An element of the orbit parameter set.
struct OrbitMatrix {
    PartitionSpec spec;
    std::vector<std::vector<int>> S;

    [[nodiscard]] int r() const { return static_cast<int>(S.size()); }
    friend bool operator==(const OrbitMatrix &, const OrbitMatrix &) = default;
};

// Scalar-tagged exact matrix: "rat", "gauss" or "quat".
using ExactMatrix = std::variant<Matrix<Rational>, Matrix<GaussianRational>, Matrix<RationalQuaternion>>;
std::string scalar_tag(const ExactMatrix &m);

// Row-major lexicographic order.
std::vector<OrbitMatrix> enumerate_J(const PartitionSpec &spec);

std::optional<Involution> is_monomial(const OrbitMatrix &S);

ExactMatrix representative_gS(const OrbitMatrix &S);

// The matrix w defining sigma: (0,-J_n;J_n,0) for R, i*I_n for H.
ExactMatrix sigma_matrix(const PartitionSpec &spec);

// u = g_S^{-1} w g_S; sigma_S(x) = u x u^{-1}.
ExactMatrix sigma_S_conjugator(const OrbitMatrix &S);

// Checks is_monomial against conjugation of elementary block-diagonal
// matrices; throws ConsistencyViolation if they disagree.
bool levi_stable(const OrbitMatrix &S);

struct BlockImage {
    int target = 0;
    // Block (target, i) of u; sigma_S acts on L_i as x -> C x C^{-1}.
    ExactMatrix conjugator;
    // "id", "Psi((0,-1;1,0))", "Psi(J_2)" or "Psi(i)".
    std::string stated_form;
    // conjugator is a nonzero rational multiple of the stated matrix.
    bool matches_stated = false;
    // Real dimension of the sigma_S-fixed subalgebra of L_i, fixed blocks only.
    std::optional<int> fixed_dim;
};

struct BlockMap {
    Involution varsigma;
    std::vector<BlockImage> blocks;
};

// Throws NotLeviStable.
BlockMap block_map(const OrbitMatrix &S);

// Compares det over C of g Upsilon_i(x) g^{-1} with the determinant of x on
// a fixed sample of block elements. Block index i is 0-based and must
// satisfy i <= varsigma(i). Throws NotLeviStable or SampleNotInH.
bool chi_composite_check(const OrbitMatrix &S, int i);

// Diagonal-torus root datum: blocks from the partition, sigma the coordinate
// permutation induced by u.
RootDatum root_datum(const OrbitMatrix &S);

std::string to_string(const OrbitMatrix &S);

} // namespace weilptb
