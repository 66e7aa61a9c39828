#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include <weilptb/distinction.hpp>
#include <weilptb/langlands.hpp>
#include <weilptb/weil_rep.hpp>

namespace weilptb {

struct SweepConfig {
    std::vector<DivAlg> D{DivAlg::R, DivAlg::H};
    std::int64_t k_min = 1;
    std::int64_t k_max = 10;
    std::int64_t l_min = -10;
    std::int64_t l_max = 10;
    std::vector<GaussianRational> lambda;
    std::vector<GaussianRational> eta;
    int max_blocks = 4;
    std::uint64_t seed = 1;
    // Number of generated standard modules in the family.
    int samples = 600;
    // Restrict the ESI grid to 2 lambda = eta.
    bool esi_diagonal_only = false;

    // Default grids: lambda, eta in {0, +-1/2, +-1}.
    static SweepConfig defaults();
    // Missing keys keep their defaults. Throws InvalidArgument or SyntaxError.
    static SweepConfig from_json(const nlohmann::json &j);
};

// One standard module with a character.
struct Sample {
    StandardModule sm;
    HeckeCharacter chi;
};

// Every ESI block of the grid as a one-block module, in grid order.
std::vector<Sample> esi_grid(const SweepConfig &cfg);

// Deterministic family: most members are built around a random involution
// so that T is nonempty, the rest are unconstrained random modules.
std::vector<Sample> generate_family(const SweepConfig &cfg);

struct Failure {
    std::string check;
    std::string D;
    std::string blocks;
    std::string chi;
    std::string detail;
};

struct SweepResult {
    std::vector<DistinctionReport> esi_reports;
    std::vector<DistinctionReport> family_reports;
    std::size_t esi_points = 0;
    std::size_t family_size = 0;
    std::size_t family_nonempty_T = 0;
    std::size_t root_numbers_checked = 0;
    std::size_t corollary_checked = 0;
    std::vector<Failure> failures;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

// Worker count: WEIL_PTB_THREADS if set and positive, else hardware threads.
unsigned worker_count();

// Runs f(i) for i in [0, n) on the worker pool. f must be thread-safe.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &f);

// ESI equivalence, main theorem, abc cross-check, corollary and root-number
// well-definedness over the grid and the family. Output order is the input
// order regardless of threading.
SweepResult run_sweep(const SweepConfig &cfg);

// Checks that epsilon(1/2, phi, psi_a) agrees for every sample a and squares
// to 1. Returns an empty string on success, else a description.
std::string check_root_number_well_defined(const WeilRep &phi);

// Every WeilRep of dimension <= max_dim whose summands come from
// phi1(0|1;lam) and phi2(1..k_max;lam) with lam in lambdas.
std::vector<WeilRep> enumerate_weil_reps(int max_dim, std::int64_t k_max, const std::vector<GaussianRational> &lambdas);

nlohmann::ordered_json to_json(const SweepResult &r);

} // namespace weilptb
