#include <weilptb/lp.hpp>

#include <cstddef>
#include <optional>

#include <weilptb/error.hpp>

namespace weilptb {

namespace {

using Row = std::vector<Rational>;

// Dense tableau: rows_[i] holds the constraint coefficients followed by the
// right-hand side; basis_[i] is the basic column of row i.
class Tableau {
public:
    Tableau(std::vector<Row> rows, std::vector<std::size_t> basis, std::size_t ncols)
        : rows_(std::move(rows)), basis_(std::move(basis)), ncols_(ncols)
    {
    }

    // Minimizes cost over the current feasible basis. Columns flagged in
    // `barred` never enter. Returns false when unbounded.
    bool minimize(const Row &cost, const std::vector<bool> &barred)
    {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < ncols_ && !enter; ++j) {
                if (!barred[j] && reduced_cost(cost, j) < 0) {
                    enter = j;
                }
            }
            if (!enter) {
                return true;
            }
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational &a = rows_[i][*enter];
                if (a <= 0) {
                    continue;
                }
                const Rational ratio = rows_[i][ncols_] / a;
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) {
                return false;
            }
            pivot(*leave, *enter);
        }
    }

    void pivot(std::size_t r, std::size_t col)
    {
        const Rational p = rows_[r][col];
        for (auto &v : rows_[r]) {
            v /= p;
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][col] == 0) {
                continue;
            }
            const Rational f = rows_[i][col];
            for (std::size_t j = 0; j <= ncols_; ++j) {
                rows_[i][j] -= f * rows_[r][j];
            }
        }
        basis_[r] = col;
    }

    [[nodiscard]] Rational objective(const Row &cost) const
    {
        Rational v = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            v += cost[basis_[i]] * rows_[i][ncols_];
        }
        return v;
    }

    [[nodiscard]] Row solution() const
    {
        Row x(ncols_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            x[basis_[i]] = rows_[i][ncols_];
        }
        return x;
    }

    // Pivots basic artificial columns (index >= first) out where possible and
    // drops rows that are redundant.
    void expel(std::size_t first)
    {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < first && !col; ++j) {
                if (rows_[i][j] != 0) {
                    col = j;
                }
            }
            if (col) {
                pivot(i, *col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

private:
    [[nodiscard]] Rational reduced_cost(const Row &cost, std::size_t j) const
    {
        Rational d = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i][j] != 0) {
                d -= cost[basis_[i]] * rows_[i][j];
            }
        }
        return d;
    }

    std::vector<Row> rows_;
    std::vector<std::size_t> basis_;
    std::size_t ncols_;
};

} // namespace

LpResult solve_lp(const LinearProgram &lp)
{
    const std::size_t m = lp.A.size();
    const std::size_t nvar = lp.c.size();
    if (lp.sense.size() != m || lp.b.size() != m) {
        throw Error(Errc::invalid_argument, "linear program shape mismatch");
    }
    for (const auto &row : lp.A) {
        if (row.size() != nvar) {
            throw Error(Errc::invalid_argument, "linear program row width mismatch");
        }
    }

    // Normalize to b >= 0.
    std::vector<Row> A = lp.A;
    std::vector<Sense> sense = lp.sense;
    Row b = lp.b;
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto &v : A[i]) {
                v = -v;
            }
            b[i] = -b[i];
            if (sense[i] != Sense::eq) {
                sense[i] = sense[i] == Sense::le ? Sense::ge : Sense::le;
            }
        }
    }

    std::size_t nslack = 0;
    std::size_t nart = 0;
    for (auto s : sense) {
        nslack += s == Sense::eq ? 0 : 1;
        nart += s == Sense::le ? 0 : 1;
    }
    const std::size_t first_art = nvar + nslack;
    const std::size_t ncols = first_art + nart;

    std::vector<Row> rows(m, Row(ncols + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    std::size_t slack = nvar;
    std::size_t art = first_art;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nvar; ++j) {
            rows[i][j] = A[i][j];
        }
        rows[i][ncols] = b[i];
        switch (sense[i]) {
        case Sense::le:
            rows[i][slack] = 1;
            basis[i] = slack++;
            break;
        case Sense::ge:
            rows[i][slack++] = -1;
            rows[i][art] = 1;
            basis[i] = art++;
            break;
        case Sense::eq:
            rows[i][art] = 1;
            basis[i] = art++;
            break;
        }
    }

    Tableau t(std::move(rows), std::move(basis), ncols);
    std::vector<bool> barred(ncols, false);
    LpResult out;
    if (nart > 0) {
        Row phase1(ncols, Rational(0));
        for (std::size_t j = first_art; j < ncols; ++j) {
            phase1[j] = 1;
        }
        t.minimize(phase1, barred);
        if (t.objective(phase1) != 0) {
            out.status = LpResult::Status::infeasible;
            return out;
        }
        t.expel(first_art);
        for (std::size_t j = first_art; j < ncols; ++j) {
            barred[j] = true;
        }
    }
    Row cost(ncols, Rational(0));
    for (std::size_t j = 0; j < nvar; ++j) {
        cost[j] = lp.c[j];
    }
    if (!t.minimize(cost, barred)) {
        out.status = LpResult::Status::unbounded;
        return out;
    }
    const Row x = t.solution();
    out.status = LpResult::Status::optimal;
    out.x.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(nvar));
    out.value = t.objective(cost);
    return out;
}

} // namespace weilptb
