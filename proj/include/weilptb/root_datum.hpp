#pragma once

#include <optional>
#include <string>
#include <vector>

#include <weilptb/rational.hpp>

namespace weilptb {

using Weight = std::vector<int>;

// Root datum of GL_rank on its diagonal torus, with the standard parabolic of
// the given block sizes and an involution sigma acting on weights by an integer
// signed permutation matrix (column a is sigma(e_a)).
class RootDatum {
public:
    // Throws InvalidArgument if sizes do not add up to rank, or if sigma is not
    // an involution preserving the roots.
    RootDatum(int rank, std::vector<int> block_sizes, std::vector<std::vector<int>> sigma);

    [[nodiscard]] int rank() const noexcept { return rank_; }
    [[nodiscard]] const std::vector<int> &block_sizes() const noexcept { return block_sizes_; }
    [[nodiscard]] const std::vector<std::vector<int>> &sigma_matrix() const noexcept { return sigma_; }

    [[nodiscard]] const std::vector<Weight> &roots() const noexcept { return roots_; }
    [[nodiscard]] const std::vector<Weight> &positive() const noexcept { return positive_; }
    [[nodiscard]] const std::vector<Weight> &levi_roots() const noexcept { return levi_; }
    [[nodiscard]] const std::vector<Weight> &nilradical_roots() const noexcept { return nilradical_; }

    [[nodiscard]] Weight sigma(const Weight &w) const;
    [[nodiscard]] std::vector<Rational> sigma(const std::vector<Rational> &x) const;

    // (Sigma_N cap sigma Sigma_L) cup (sigma Sigma_N cap Sigma_L) cup (Sigma_N cap sigma Sigma_N).
    [[nodiscard]] std::vector<Weight> xi() const;
    // Sigma_L cap sigma Sigma_L.
    [[nodiscard]] std::vector<Weight> stable_levi_roots() const;

private:
    int rank_;
    std::vector<int> block_sizes_;
    std::vector<std::vector<int>> sigma_;
    std::vector<int> block_of_;
    std::vector<Weight> roots_;
    std::vector<Weight> positive_;
    std::vector<Weight> levi_;
    std::vector<Weight> nilradical_;
};

Rational pair(const Weight &alpha, const std::vector<Rational> &x);

struct Witness {
    std::vector<Rational> X;
    // Coefficient of each orbit generator, in orbit order.
    std::vector<Rational> coefficients;
    // Gamma-orbits of Xi (Gamma generated by sigma and the reflections in
    // the sigma-stable Levi roots).
    std::vector<std::vector<Weight>> orbits;
};

// std::nullopt when Xi is empty. Throws Infeasible if the cone is empty.
std::optional<Witness> find_positive_witness(const RootDatum &rd);

// Exact check of the three witness conditions.
bool witness_ok(const RootDatum &rd, const std::vector<Rational> &X);

std::string to_string(const Weight &w);

} // namespace weilptb
