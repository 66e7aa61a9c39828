#pragma once

#include <random>
#include <vector>

#include <weilptb/langlands.hpp>
#include <weilptb/weil_rep.hpp>

namespace testing_support {

using namespace weilptb;

inline GaussianRational q(std::int64_t p, std::int64_t d = 1)
{
    return GaussianRational(make_rational(p, d));
}

inline GaussianRational gq(std::int64_t p, std::int64_t d, std::int64_t r, std::int64_t s)
{
    return GaussianRational(make_rational(p, d), make_rational(r, s));
}

inline const std::vector<GaussianRational> &lambda_grid()
{
    static const std::vector<GaussianRational> grid{q(0), q(1, 2), q(-1, 2), q(1), q(-1), gq(1, 3, 1, 2)};
    return grid;
}

inline GaussianRational random_lambda(std::mt19937_64 &rng)
{
    const auto &g = lambda_grid();
    return g[std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng)];
}

inline WeilIrred random_irred(std::mt19937_64 &rng, std::int64_t k_max = 4)
{
    if (std::bernoulli_distribution(0.4)(rng)) {
        return WeilIrred::one_dim(std::uniform_int_distribution<std::int64_t>(0, 1)(rng), random_lambda(rng));
    }
    return WeilIrred::two_dim(std::uniform_int_distribution<std::int64_t>(1, k_max)(rng), random_lambda(rng));
}

inline WeilRep random_rep(std::mt19937_64 &rng, int max_dim)
{
    std::vector<WeilIrred> s;
    int dim = 0;
    const int target = std::uniform_int_distribution<int>(1, max_dim)(rng);
    while (dim < target) {
        WeilIrred x = random_irred(rng);
        if (dim + x.dim() > max_dim) {
            x = WeilIrred::one_dim(0, random_lambda(rng));
        }
        dim += x.dim();
        s.push_back(x);
    }
    return WeilRep(s);
}

inline EssDiscrete random_block(std::mt19937_64 &rng, DivAlg d)
{
    if (d == DivAlg::H) {
        return EssDiscrete::t(std::uniform_int_distribution<std::int64_t>(1, 4)(rng), random_lambda(rng));
    }
    if (std::bernoulli_distribution(0.4)(rng)) {
        return EssDiscrete::p1(std::uniform_int_distribution<std::int64_t>(0, 1)(rng), random_lambda(rng));
    }
    return EssDiscrete::p2(std::uniform_int_distribution<std::int64_t>(1, 4)(rng), random_lambda(rng));
}

inline IrrRepGL random_irr(std::mt19937_64 &rng, DivAlg d, int max_blocks = 4)
{
    std::vector<EssDiscrete> b;
    const int r = std::uniform_int_distribution<int>(1, max_blocks)(rng);
    for (int i = 0; i < r; ++i) {
        b.push_back(random_block(rng, d));
    }
    return IrrRepGL(d, b);
}

inline HeckeCharacter random_chi(std::mt19937_64 &rng)
{
    return {std::uniform_int_distribution<std::int64_t>(-5, 5)(rng), random_lambda(rng)};
}

} // namespace testing_support
