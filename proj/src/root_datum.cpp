#include <weilptb/root_datum.hpp>

#include <algorithm>
#include <set>

#include <weilptb/error.hpp>
#include <weilptb/lp.hpp>

namespace weilptb {

namespace {

bool contains(const std::vector<Weight> &set, const Weight &w)
{
    return std::binary_search(set.begin(), set.end(), w);
}

Weight reflect(const Weight &v, const Weight &beta)
{
    int d = 0;
    for (std::size_t a = 0; a < v.size(); ++a) {
        d += v[a] * beta[a];
    }
    Weight out = v;
    for (std::size_t a = 0; a < v.size(); ++a) {
        out[a] -= d * beta[a];
    }
    return out;
}

} // namespace

RootDatum::RootDatum(int rank, std::vector<int> block_sizes, std::vector<std::vector<int>> sigma)
    : rank_(rank), block_sizes_(std::move(block_sizes)), sigma_(std::move(sigma))
{
    int total = 0;
    for (std::size_t i = 0; i < block_sizes_.size(); ++i) {
        const int s = block_sizes_[i];
        if (s <= 0) {
            throw Error(Errc::invalid_argument, "block sizes must be positive");
        }
        block_of_.insert(block_of_.end(), static_cast<std::size_t>(s), static_cast<int>(i));
        total += s;
    }
    if (total != rank_) {
        throw Error(Errc::invalid_argument, "block sizes do not add up to the rank");
    }
    if (static_cast<int>(sigma_.size()) != rank_) {
        throw Error(Errc::invalid_argument, "sigma has the wrong size");
    }
    for (const auto &row : sigma_) {
        if (static_cast<int>(row.size()) != rank_) {
            throw Error(Errc::invalid_argument, "sigma has the wrong size");
        }
        int nonzero = 0;
        for (int v : row) {
            if (v != 0 && v != 1 && v != -1) {
                throw Error(Errc::invalid_argument, "sigma must be a signed permutation");
            }
            nonzero += v != 0;
        }
        if (nonzero != 1) {
            throw Error(Errc::invalid_argument, "sigma must be a signed permutation");
        }
    }
    for (int a = 0; a < rank_; ++a) {
        for (int b = 0; b < rank_; ++b) {
            if (a == b) {
                continue;
            }
            Weight w(static_cast<std::size_t>(rank_), 0);
            w[static_cast<std::size_t>(a)] = 1;
            w[static_cast<std::size_t>(b)] = -1;
            roots_.push_back(w);
            if (a < b) {
                positive_.push_back(w);
            }
            const int ba = block_of_[static_cast<std::size_t>(a)];
            const int bb = block_of_[static_cast<std::size_t>(b)];
            if (ba == bb) {
                levi_.push_back(w);
            } else if (ba < bb) {
                nilradical_.push_back(w);
            }
        }
    }
    std::sort(roots_.begin(), roots_.end());
    std::sort(positive_.begin(), positive_.end());
    std::sort(levi_.begin(), levi_.end());
    std::sort(nilradical_.begin(), nilradical_.end());
    for (int a = 0; a < rank_; ++a) {
        Weight e(static_cast<std::size_t>(rank_), 0);
        e[static_cast<std::size_t>(a)] = 1;
        if (this->sigma(this->sigma(e)) != e) {
            throw Error(Errc::invalid_argument, "sigma is not an involution");
        }
    }
    for (const auto &r : roots_) {
        if (!contains(roots_, this->sigma(r))) {
            throw Error(Errc::invalid_argument, "sigma does not preserve the roots");
        }
    }
}

Weight RootDatum::sigma(const Weight &w) const
{
    Weight out(static_cast<std::size_t>(rank_), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t a = 0; a < out.size(); ++a) {
            out[i] += sigma_[i][a] * w[a];
        }
    }
    return out;
}

std::vector<Rational> RootDatum::sigma(const std::vector<Rational> &x) const
{
    std::vector<Rational> out(static_cast<std::size_t>(rank_), Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t a = 0; a < out.size(); ++a) {
            if (sigma_[i][a] != 0) {
                out[i] += sigma_[i][a] * x[a];
            }
        }
    }
    return out;
}

std::vector<Weight> RootDatum::xi() const
{
    std::set<Weight> out;
    for (const auto &r : nilradical_) {
        const Weight s = sigma(r);
        if (contains(levi_, s) || contains(nilradical_, s)) {
            out.insert(r);
        }
    }
    for (const auto &r : levi_) {
        if (contains(nilradical_, sigma(r))) {
            out.insert(r);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Weight> RootDatum::stable_levi_roots() const
{
    std::vector<Weight> out;
    for (const auto &r : levi_) {
        if (contains(levi_, sigma(r))) {
            out.push_back(r);
        }
    }
    return out;
}

Rational pair(const Weight &alpha, const std::vector<Rational> &x)
{
    Rational v = 0;
    for (std::size_t a = 0; a < alpha.size(); ++a) {
        if (alpha[a] != 0) {
            v += alpha[a] * x[a];
        }
    }
    return v;
}

std::optional<Witness> find_positive_witness(const RootDatum &rd)
{
    const std::vector<Weight> xi = rd.xi();
    if (xi.empty()) {
        return std::nullopt;
    }
    const std::vector<Weight> stable = rd.stable_levi_roots();

    Witness w;
    std::set<Weight> seen;
    for (const auto &start : xi) {
        if (seen.count(start) != 0) {
            continue;
        }
        std::vector<Weight> orbit{start};
        seen.insert(start);
        for (std::size_t q = 0; q < orbit.size(); ++q) {
            std::vector<Weight> next{rd.sigma(orbit[q])};
            for (const auto &beta : stable) {
                next.push_back(reflect(orbit[q], beta));
            }
            for (auto &v : next) {
                if (seen.insert(v).second) {
                    orbit.push_back(std::move(v));
                }
            }
        }
        for (const auto &v : orbit) {
            if (!std::binary_search(xi.begin(), xi.end(), v)) {
                throw Error(Errc::invalid_argument, "Xi is not stable under the symmetrizing group");
            }
        }
        std::sort(orbit.begin(), orbit.end());
        w.orbits.push_back(std::move(orbit));
    }

    const std::size_t rank = static_cast<std::size_t>(rd.rank());
    std::vector<std::vector<Rational>> gens;
    for (const auto &orbit : w.orbits) {
        std::vector<Rational> g(rank, Rational(0));
        for (const auto &v : orbit) {
            for (std::size_t a = 0; a < rank; ++a) {
                g[a] += v[a];
            }
        }
        gens.push_back(std::move(g));
    }

    // Variables y_O = c_O - 1 >= 0; constraints alpha(X) >= 1 on Xi.
    const std::size_t m = gens.size();
    LinearProgram lp;
    for (const auto &alpha : xi) {
        std::vector<Rational> row(m);
        Rational shift = 0;
        for (std::size_t o = 0; o < m; ++o) {
            row[o] = pair(alpha, gens[o]);
            shift += row[o];
        }
        lp.A.push_back(std::move(row));
        lp.sense.push_back(Sense::ge);
        lp.b.push_back(1 - shift);
    }
    // Lexicographic minimization: fix y_0, then y_1, ...
    std::vector<Rational> y(m, Rational(0));
    for (std::size_t o = 0; o < m; ++o) {
        lp.c.assign(m, Rational(0));
        lp.c[o] = 1;
        const LpResult res = solve_lp(lp);
        if (res.status != LpResult::Status::optimal) {
            throw Error(Errc::infeasible, "no positive witness exists for this datum");
        }
        y = res.x;
        std::vector<Rational> fix(m, Rational(0));
        fix[o] = 1;
        lp.A.push_back(std::move(fix));
        lp.sense.push_back(Sense::eq);
        lp.b.push_back(res.value);
    }

    w.X.assign(rank, Rational(0));
    for (std::size_t o = 0; o < m; ++o) {
        const Rational c = y[o] + 1;
        w.coefficients.push_back(c);
        for (std::size_t a = 0; a < rank; ++a) {
            w.X[a] += c * gens[o][a];
        }
    }
    return w;
}

bool witness_ok(const RootDatum &rd, const std::vector<Rational> &X)
{
    if (static_cast<int>(X.size()) != rd.rank() || rd.sigma(X) != X) {
        return false;
    }
    for (const auto &alpha : rd.xi()) {
        if (pair(alpha, X) <= 0) {
            return false;
        }
    }
    for (const auto &beta : rd.stable_levi_roots()) {
        if (pair(beta, X) != 0) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Weight &w)
{
    std::string out = "(";
    for (std::size_t a = 0; a < w.size(); ++a) {
        out += (a ? "," : "") + std::to_string(w[a]);
    }
    return out + ")";
}

} // namespace weilptb
