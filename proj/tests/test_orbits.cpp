#include <gtest/gtest.h>

#include <weilptb/error.hpp>
#include <weilptb/lp.hpp>
#include <weilptb/orbits.hpp>
#include <weilptb/root_datum.hpp>

#include "oracles/brute_force.hpp"

using namespace weilptb;

namespace {

using RMat = Matrix<Rational>;
using QMat = Matrix<RationalQuaternion>;

OrbitMatrix om(DivAlg d, std::vector<int> parts, std::vector<std::vector<int>> S)
{
    return {{d, std::move(parts)}, std::move(S)};
}

std::vector<std::vector<int>> perm_matrix(const std::vector<int> &p)
{
    std::vector<std::vector<int>> S(p.size(), std::vector<int>(p.size(), 0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        S[i][static_cast<std::size_t>(p[i])] = 1;
    }
    return S;
}


// All compositions of total into parts from {1, 2}.
void compositions(int total, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p : {1, 2}) {
        if (p <= total) {
            cur.push_back(p);
            compositions(total - p, cur, out);
            cur.pop_back();
        }
    }
}

std::vector<PartitionSpec> specs_up_to(int max_size)
{
    std::vector<PartitionSpec> out;
    for (int n = 1; 2 * n <= max_size; ++n) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(2 * n, cur, comps);
        for (auto &c : comps) {
            out.push_back({DivAlg::R, c});
        }
    }
    for (int n = 1; n <= max_size; ++n) {
        out.push_back({DivAlg::H, std::vector<int>(static_cast<std::size_t>(n), 1)});
    }
    return out;
}

} // namespace

TEST(PartitionSpec, Validation)
{
    EXPECT_NO_THROW((PartitionSpec{DivAlg::R, {2, 1, 1}}.validate()));
    EXPECT_THROW((PartitionSpec{DivAlg::R, {1, 2}}.validate()), Error);
    EXPECT_THROW((PartitionSpec{DivAlg::R, {3, 1}}.validate()), Error);
    EXPECT_THROW((PartitionSpec{DivAlg::H, {2}}.validate()), Error);
    EXPECT_EQ((PartitionSpec{DivAlg::R, {2, 1, 1}}.matrix_size()), 4);
    EXPECT_EQ((PartitionSpec{DivAlg::H, {1, 1, 1}}.matrix_size()), 3);
}

TEST(EnumerateJ, Examples)
{
    const auto a = enumerate_J({DivAlg::R, {2}});
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].S, (std::vector<std::vector<int>>{{2}}));

    const auto b = enumerate_J({DivAlg::R, {1, 1}});
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].S, (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));

    EXPECT_EQ(enumerate_J({DivAlg::H, {1, 1, 1}}).size(), 4u);
}

TEST(EnumerateJ, CountsMatchPermutationOracle)
{
    const long h_expected[] = {1, 2, 4, 10, 26};
    for (int n = 1; n <= 5; ++n) {
        const auto got = enumerate_J({DivAlg::H, std::vector<int>(static_cast<std::size_t>(n), 1)});
        EXPECT_EQ(static_cast<long>(got.size()), oracle::count_involutions(n, false));
        EXPECT_EQ(static_cast<long>(got.size()), h_expected[n - 1]);
    }
    const long r_expected[] = {1, 3, 15, 105};
    for (int n = 1; n <= 4; ++n) {
        const auto got = enumerate_J({DivAlg::R, std::vector<int>(static_cast<std::size_t>(2 * n), 1)});
        EXPECT_EQ(static_cast<long>(got.size()), oracle::count_involutions(2 * n, true));
        EXPECT_EQ(static_cast<long>(got.size()), r_expected[n - 1]);
    }
}

TEST(EnumerateJ, MatchesUpperTriangleBruteForce)
{
    for (const auto &spec : specs_up_to(6)) {
        if (spec.D != DivAlg::R || spec.parts.size() > 4) {
            continue;
        }
        std::vector<std::vector<std::vector<int>>> got;
        for (const auto &s : enumerate_J(spec)) {
            got.push_back(s.S);
        }
        EXPECT_EQ(got, oracle::brute_force_J(spec.parts));
    }
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::vector<std::vector<int>>> expected;
        for (const auto &p : oracle::permutations(n)) {
            if (oracle::involutive(p)) {
                expected.push_back(perm_matrix(p));
            }
        }
        std::sort(expected.begin(), expected.end());
        std::vector<std::vector<std::vector<int>>> got;
        for (const auto &s : enumerate_J({DivAlg::H, std::vector<int>(static_cast<std::size_t>(n), 1)})) {
            got.push_back(s.S);
        }
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected);
    }
}

TEST(IsMonomial, Examples)
{
    const auto a = is_monomial(om(DivAlg::R, {2}, {{2}}));
    ASSERT_TRUE(a);
    EXPECT_EQ(*a, Involution::identity(1));
    const auto b = is_monomial(om(DivAlg::R, {1, 1}, {{0, 1}, {1, 0}}));
    ASSERT_TRUE(b);
    EXPECT_EQ(to_string(*b), "(1 2)");
    EXPECT_FALSE(is_monomial(om(DivAlg::R, {2, 1, 1}, {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}})));
}

TEST(RepresentativeGS, Examples)
{
    EXPECT_EQ(std::get<RMat>(representative_gS(om(DivAlg::R, {2}, {{2}}))), RMat::identity(2));
    EXPECT_EQ(std::get<RMat>(representative_gS(om(DivAlg::R, {1, 1}, {{0, 1}, {1, 0}}))), RMat::identity(2));
    QMat expected(2, 2);
    expected(0, 0) = 1;
    expected(0, 1) = 1;
    expected(1, 0) = RationalQuaternion::j();
    expected(1, 1) = -RationalQuaternion::j();
    EXPECT_EQ(std::get<QMat>(representative_gS(om(DivAlg::H, {1, 1}, {{0, 1}, {1, 0}}))), expected);
}

TEST(RepresentativeGS, InvertibleAndPermutationForR)
{
    for (const auto &spec : specs_up_to(6)) {
        for (const auto &S : enumerate_J(spec)) {
            const auto g = representative_gS(S);
            if (spec.D == DivAlg::R) {
                const auto &m = std::get<RMat>(g);
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    int ones = 0;
                    for (std::size_t j = 0; j < m.cols(); ++j) {
                        EXPECT_TRUE(m(i, j) == 0 || m(i, j) == 1);
                        ones += m(i, j) == 1 ? 1 : 0;
                    }
                    EXPECT_EQ(ones, 1);
                }
                RMat t(m.cols(), m.rows());
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    for (std::size_t j = 0; j < m.cols(); ++j) {
                        t(j, i) = m(i, j);
                    }
                }
                EXPECT_EQ(m * t, RMat::identity(m.rows()));
            } else {
                EXPECT_TRUE(inverse(std::get<QMat>(g)).has_value());
            }
        }
    }
}

TEST(SigmaConjugator, Examples)
{
    RMat j(2, 2);
    j(0, 1) = -1;
    j(1, 0) = 1;
    EXPECT_EQ(std::get<RMat>(sigma_S_conjugator(om(DivAlg::R, {1, 1}, {{0, 1}, {1, 0}}))), j);
    EXPECT_EQ(std::get<RMat>(sigma_S_conjugator(om(DivAlg::R, {2}, {{2}}))), j);
    QMat i(1, 1);
    i(0, 0) = RationalQuaternion::i();
    EXPECT_EQ(std::get<QMat>(sigma_S_conjugator(om(DivAlg::H, {1}, {{1}}))), i);
}

TEST(LeviStable, Examples)
{
    EXPECT_TRUE(levi_stable(om(DivAlg::R, {1, 1}, {{0, 1}, {1, 0}})));
    EXPECT_FALSE(levi_stable(om(DivAlg::R, {2, 1, 1}, {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}})));
    EXPECT_TRUE(levi_stable(om(DivAlg::H, {1, 1}, {{1, 0}, {0, 1}})));
}

TEST(BlockMap, Examples)
{
    const auto a = block_map(om(DivAlg::R, {1, 1}, {{0, 1}, {1, 0}}));
    EXPECT_EQ(to_string(a.varsigma), "(1 2)");
    ASSERT_EQ(a.blocks.size(), 2u);
    EXPECT_EQ(a.blocks[0].stated_form, "id");
    EXPECT_TRUE(a.blocks[0].matches_stated);

    const auto b = block_map(om(DivAlg::R, {2}, {{2}}));
    EXPECT_EQ(b.varsigma, Involution::identity(1));
    EXPECT_EQ(b.blocks[0].stated_form, "Psi((0,-1;1,0))");
    EXPECT_TRUE(b.blocks[0].matches_stated);
    EXPECT_EQ(b.blocks[0].fixed_dim, 2);

    const auto c = block_map(om(DivAlg::H, {1}, {{1}}));
    EXPECT_EQ(c.blocks[0].stated_form, "Psi(i)");
    EXPECT_TRUE(c.blocks[0].matches_stated);
    EXPECT_EQ(c.blocks[0].fixed_dim, 2);

    try {
        (void)block_map(om(DivAlg::R, {2, 1, 1}, {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::not_levi_stable);
    }
}

TEST(ChiComposite, Examples)
{
    EXPECT_TRUE(chi_composite_check(om(DivAlg::R, {1, 1}, {{0, 1}, {1, 0}}), 0));
    EXPECT_TRUE(chi_composite_check(om(DivAlg::H, {1, 1}, {{0, 1}, {1, 0}}), 0));
    EXPECT_TRUE(chi_composite_check(om(DivAlg::R, {2}, {{2}}), 0));
}

TEST(OrbitProperties, StructureOnAllSpecsUpToSix)
{
    std::size_t monomial = 0;
    for (const auto &spec : specs_up_to(6)) {
        for (const auto &S : enumerate_J(spec)) {
            const auto inv = is_monomial(S);
            EXPECT_EQ(levi_stable(S), inv.has_value()) << to_string(S);
            if (!inv) {
                continue;
            }
            ++monomial;
            const auto bm = block_map(S);
            EXPECT_EQ(bm.varsigma, *inv);
            for (int i = 0; i < S.r(); ++i) {
                const auto &blk = bm.blocks[static_cast<std::size_t>(i)];
                EXPECT_EQ(blk.target, (*inv)(i));
                EXPECT_TRUE(blk.matches_stated) << to_string(S) << " block " << i;
                if (inv->is_fixed(i)) {
                    EXPECT_EQ(blk.fixed_dim, 2);
                }
                if (i <= (*inv)(i)) {
                    EXPECT_TRUE(chi_composite_check(S, i));
                }
            }
        }
    }
    EXPECT_GT(monomial, 50u);
}

TEST(Lp, SmallPrograms)
{
    const auto r = [](std::int64_t p, std::int64_t q = 1) { return make_rational(p, q); };
    // min x + y, x + 2y >= 2, 3x + y >= 3.
    LinearProgram lp{{{r(1), r(2)}, {r(3), r(1)}}, {Sense::ge, Sense::ge}, {r(2), r(3)}, {r(1), r(1)}};
    const auto res = solve_lp(lp);
    ASSERT_EQ(res.status, LpResult::Status::optimal);
    EXPECT_EQ(res.value, r(7, 5));
    EXPECT_EQ(res.x, (std::vector<Rational>{r(4, 5), r(3, 5)}));

    LinearProgram infeasible{{{r(1)}, {r(1)}}, {Sense::le, Sense::ge}, {r(1), r(2)}, {r(1)}};
    EXPECT_EQ(solve_lp(infeasible).status, LpResult::Status::infeasible);

    LinearProgram unbounded{{{r(1)}}, {Sense::ge}, {r(1)}, {r(-1)}};
    EXPECT_EQ(solve_lp(unbounded).status, LpResult::Status::unbounded);

    LinearProgram eq{{{r(1), r(1)}}, {Sense::eq}, {r(3)}, {r(2), r(1)}};
    const auto e = solve_lp(eq);
    ASSERT_EQ(e.status, LpResult::Status::optimal);
    EXPECT_EQ(e.value, r(3));
}

TEST(Witness, Examples)
{
    const RootDatum neg_swap(2, {1, 1}, {{0, -1}, {-1, 0}});
    EXPECT_EQ(neg_swap.xi(), (std::vector<Weight>{{1, -1}}));
    const auto w = find_positive_witness(neg_swap);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->X, (std::vector<Rational>{1, -1}));
    EXPECT_EQ(pair({1, -1}, w->X), 2);
    EXPECT_TRUE(witness_ok(neg_swap, w->X));

    const RootDatum swap(2, {1, 1}, {{0, 1}, {1, 0}});
    EXPECT_TRUE(swap.xi().empty());
    EXPECT_FALSE(find_positive_witness(swap));

    const RootDatum whole(3, {3}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_FALSE(find_positive_witness(whole));

    EXPECT_THROW(RootDatum(2, {1, 1}, {{2, 0}, {0, 1}}), Error);
    EXPECT_THROW(RootDatum(2, {1, 2}, {{1, 0}, {0, 1}}), Error);
}

TEST(Witness, SoundOnOrbitData)
{
    std::size_t with_xi = 0;
    for (const auto &spec : specs_up_to(6)) {
        for (const auto &S : enumerate_J(spec)) {
            if (!is_monomial(S)) {
                continue;
            }
            const auto rd = root_datum(S);
            const auto w = find_positive_witness(rd);
            ASSERT_EQ(w.has_value(), !rd.xi().empty());
            if (!w) {
                continue;
            }
            ++with_xi;
            for (const auto &a : rd.xi()) {
                EXPECT_GT(pair(a, w->X), 0);
            }
            EXPECT_EQ(rd.sigma(w->X), w->X);
            for (const auto &b : rd.stable_levi_roots()) {
                EXPECT_EQ(pair(b, w->X), 0);
            }
            for (const auto &c : w->coefficients) {
                EXPECT_GT(c, 0);
            }
            EXPECT_TRUE(witness_ok(rd, w->X));
        }
    }
    EXPECT_GT(with_xi, 30u);
}
