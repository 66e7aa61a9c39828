#pragma once

#include <vector>

#include <weilptb/rational.hpp>

namespace weilptb {

enum class Sense { le, eq, ge };

// minimize c.x subject to A_i.x (sense_i) b_i, x >= 0.
struct LinearProgram {
    std::vector<std::vector<Rational>> A;
    std::vector<Sense> sense;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

struct LpResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    std::vector<Rational> x;
    Rational value;
};

// Exact two-phase simplex with Bland's rule.
LpResult solve_lp(const LinearProgram &lp);

} // namespace weilptb
