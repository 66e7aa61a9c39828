#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <weilptb/distinction.hpp>
#include <weilptb/error.hpp>
#include <weilptb/sweep.hpp>

#include "oracles/brute_force.hpp"
#include "oracles/form_search.hpp"
#include "support.hpp"

using namespace weilptb;
using testing_support::q;

namespace {

StandardModule sm_of(DivAlg d, std::vector<EssDiscrete> b)
{
    return make_standard(d, std::move(b));
}

Errc code_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::invalid_argument;
}

std::vector<std::string> names(const std::vector<Involution> &v)
{
    std::vector<std::string> out;
    for (const auto &s : v) {
        out.push_back(to_string(s));
    }
    return out;
}

// Counts involutions of an arbitrary block list whose fixed points and
// 2-cycles satisfy the distinction predicates, by scanning all permutations.
std::size_t brute_force_T_size(const std::vector<EssDiscrete> &blocks, const HeckeCharacter &chi)
{
    std::size_t count = 0;
    for (const auto &p : oracle::permutations(static_cast<int>(blocks.size()))) {
        if (!oracle::involutive(p)) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i) {
            const auto j = static_cast<std::size_t>(p[i]);
            if (j == i) {
                ok = blocks[i].kind() != EssDiscrete::Kind::P1 && esi_distinguished(blocks[i], chi);
            } else if (i < j) {
                ok = blocks[i].block_size() == blocks[j].block_size() && blocks[i].kind() == blocks[j].kind() &&
                     pair_distinguished(blocks[i], blocks[j], chi);
            }
        }
        count += ok ? 1 : 0;
    }
    return count;
}

} // namespace

TEST(Involution, BasicsAndOrder)
{
    EXPECT_EQ(to_string(Involution::identity(3)), "id");
    EXPECT_EQ(to_string(Involution({1, 0, 3, 2})), "(1 2)(3 4)");
    EXPECT_THROW(Involution({1, 2, 0}), Error);
    const auto all = all_involutions(3);
    EXPECT_EQ(names(all), (std::vector<std::string>{"id", "(1 2)", "(1 3)", "(2 3)"}));
    EXPECT_EQ(all_involutions(0).size(), 1u);
}

TEST(Involution, CountsMatchPermutationBruteForce)
{
    for (int r = 0; r <= 7; ++r) {
        const auto all = all_involutions(r);
        EXPECT_EQ(static_cast<long>(all.size()), oracle::count_involutions(r, false)) << r;
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
        for (const auto &s : all) {
            for (int i = 0; i < r; ++i) {
                EXPECT_EQ(s(s(i)), i);
            }
        }
    }
}

TEST(EsiDistinguished, Examples)
{
    EXPECT_TRUE(esi_distinguished(EssDiscrete::p2(1, q(0)), {4, q(0)}));
    EXPECT_FALSE(esi_distinguished(EssDiscrete::p2(3, q(0)), {2, q(0)}));
    EXPECT_TRUE(esi_distinguished(EssDiscrete::t(1, q(0)), {0, q(0)}));
    EXPECT_FALSE(esi_distinguished(EssDiscrete::t(2, q(0)), {0, q(0)}));
    EXPECT_EQ(code_of([] { (void)esi_distinguished(EssDiscrete::p1(0, q(0)), {0, q(0)}); }), Errc::not_eligible);
}

TEST(PairDistinguished, Examples)
{
    EXPECT_TRUE(pair_distinguished(EssDiscrete::p2(2, q(1)), EssDiscrete::p2(2, q(-1)), {5, q(0)}));
    EXPECT_TRUE(pair_distinguished(EssDiscrete::p1(0, q(0)), EssDiscrete::p1(1, q(0)), {1, q(0)}));
    EXPECT_FALSE(pair_distinguished(EssDiscrete::t(1, q(0)), EssDiscrete::t(2, q(0)), {0, q(0)}));
    EXPECT_EQ(code_of([] {
                  (void)pair_distinguished(EssDiscrete::p1(0, q(0)), EssDiscrete::p2(1, q(0)), {0, q(0)});
              }),
              Errc::mixed_variants);
}

TEST(EnumerateT, Examples)
{
    const auto h = sm_of(DivAlg::H, {EssDiscrete::t(1, q(0)), EssDiscrete::t(1, q(0))});
    EXPECT_EQ(names(enumerate_T(h, {0, q(0)})), (std::vector<std::string>{"id", "(1 2)"}));

    const auto r = sm_of(DivAlg::R, {EssDiscrete::p2(1, q(0)), EssDiscrete::p1(0, q(0)), EssDiscrete::p1(1, q(0))});
    EXPECT_TRUE(enumerate_T(r, {4, q(0)}).empty());

    const auto empty = sm_of(DivAlg::R, {});
    EXPECT_EQ(names(enumerate_T(empty, {0, q(0)})), (std::vector<std::string>{"id"}));
}

TEST(EnumerateT, SizeInvariantUnderBlockReordering)
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 400; ++t) {
        const DivAlg d = t % 2 == 0 ? DivAlg::R : DivAlg::H;
        // Blocks with equal real parts so that every order satisfies the ordering rule.
        std::vector<EssDiscrete> blocks;
        const int r = std::uniform_int_distribution<int>(1, 5)(rng);
        for (int i = 0; i < r; ++i) {
            auto b = testing_support::random_block(rng, d);
            const GaussianRational im(0, make_rational(std::uniform_int_distribution<int>(-1, 1)(rng), 2));
            blocks.push_back(b.with_lambda(im));
        }
        const HeckeCharacter chi{std::uniform_int_distribution<std::int64_t>(-4, 4)(rng), GaussianRational()};
        const auto sm = sm_of(d, blocks);
        const auto size = enumerate_T(sm, chi).size();
        for (int s = 0; s < 3; ++s) {
            std::shuffle(blocks.begin(), blocks.end(), rng);
            EXPECT_EQ(brute_force_T_size(blocks, chi), size) << to_string(sm);
        }
    }
}

TEST(GspSimilitude, Examples)
{
    const auto one = [](std::int64_t k) { return WeilIrred::one_dim(k, q(0)); };
    EXPECT_TRUE(is_gsp_with_similitude(WeilRep{WeilIrred::two_dim(1, q(0))}, {0, q(0)}));
    EXPECT_TRUE(is_gsp_with_similitude(WeilRep{one(0), one(0)}, {0, q(0)}));
    EXPECT_FALSE(is_gsp_with_similitude(WeilRep{one(0), one(1)}, {0, q(0)}));
    EXPECT_EQ(code_of([&] { (void)is_gsp_with_similitude(WeilRep{one(0)}, {0, q(0)}); }), Errc::odd_dimension);

    EXPECT_TRUE(oracle::symplectic_form_exists(WeilRep{WeilIrred::two_dim(1, q(0))}, {0, q(0)}));
    EXPECT_TRUE(oracle::symplectic_form_exists(WeilRep{one(0), one(0)}, {0, q(0)}));
    EXPECT_FALSE(oracle::symplectic_form_exists(WeilRep{one(0), one(1)}, {0, q(0)}));
}

TEST(GspSimilitude, AgreesWithFormSearchUpToDimFour)
{
    const std::vector<GaussianRational> lambdas{q(0), q(1, 2), q(-1, 2)};
    const auto reps = enumerate_weil_reps(4, 3, lambdas);
    std::size_t checked = 0;
    std::size_t positive = 0;
    for (const auto &phi : reps) {
        if (phi.dim() % 2 != 0) {
            continue;
        }
        for (std::int64_t l = -3; l <= 3; ++l) {
            for (const auto &eta : {q(0), q(1), q(-1)}) {
                const HeckeCharacter chi{l, eta};
                const bool got = is_gsp_with_similitude(phi, chi);
                EXPECT_EQ(got, oracle::symplectic_form_exists(phi, chi)) << phi << " " << chi;
                ++checked;
                positive += got ? 1 : 0;
            }
        }
    }
    EXPECT_GT(checked, 1000u);
    EXPECT_GT(positive, 50u);
}

TEST(EpsilonIdentity, Examples)
{
    const auto r = epsilon_identity(IrrRepGL(DivAlg::R, {EssDiscrete::p2(1, q(0))}), {4, q(0)});
    EXPECT_EQ(r.lhs, MagUnitValue::unit(2));
    EXPECT_EQ(r.rhs, -1);
    EXPECT_TRUE(r.ok);

    const auto h = epsilon_identity(IrrRepGL(DivAlg::H, {EssDiscrete::t(1, q(0))}), {0, q(0)});
    EXPECT_EQ(h.lhs, MagUnitValue::unit(0));
    EXPECT_EQ(h.rhs, 1);
    EXPECT_TRUE(h.ok);

    EXPECT_EQ(code_of([] { (void)epsilon_identity(IrrRepGL(DivAlg::R, {EssDiscrete::p2(1, q(0))}), {1, q(0)}); }),
              Errc::precondition_failed);
}

TEST(AbcBookkeeping, Examples)
{
    const auto h = sm_of(DivAlg::H, {EssDiscrete::t(1, q(0)), EssDiscrete::t(1, q(0))});
    EXPECT_EQ(abc_bookkeeping(h, Involution::identity(2), {0, q(0)}), (Abc{0, 0, 2, 1}));
    EXPECT_EQ(abc_bookkeeping(h, Involution({1, 0}), {0, q(0)}), (Abc{0, 1, 0, 1}));

    const auto r = sm_of(DivAlg::R, {EssDiscrete::p1(0, q(0)), EssDiscrete::p1(1, q(0))});
    EXPECT_EQ(abc_bookkeeping(r, Involution({1, 0}), {1, q(0)}), (Abc{1, 0, 0, 1}));
    EXPECT_EQ(code_of([&] { (void)abc_bookkeeping(r, Involution::identity(2), {1, q(0)}); }), Errc::not_in_t);
}

TEST(MainTheorem, Examples)
{
    const auto h = check_main_theorem(sm_of(DivAlg::H, {EssDiscrete::t(1, q(0)), EssDiscrete::t(1, q(0))}), {0, q(0)});
    EXPECT_EQ(h.hom_upper_bound, 2);
    EXPECT_TRUE(h.gsp_ok);
    ASSERT_TRUE(h.identity_ok.has_value());
    EXPECT_TRUE(*h.identity_ok);
    EXPECT_EQ(*h.epsilon_lhs, MagUnitValue::unit(0));
    EXPECT_EQ(*h.epsilon_rhs, 1);
    EXPECT_TRUE(h.ok());

    const auto sm = sm_of(DivAlg::R, {EssDiscrete::p2(1, q(0)), EssDiscrete::p2(1, q(0))});
    const HeckeCharacter chi{0, q(0)};
    const auto r = check_main_theorem(sm, chi);
    EXPECT_NE(std::find(r.T_set.begin(), r.T_set.end(), Involution({1, 0})), r.T_set.end());
    const WeilRep one_copy = tensor(WeilRep{WeilIrred::two_dim(1, q(0))},
                                    WeilRep{WeilIrred::one_dim(0, q(0)), WeilIrred::one_dim(1, q(0))});
    const int w = root_number(direct_sum(one_copy, one_copy));
    EXPECT_EQ(*r.epsilon_lhs, MagUnitValue::unit(w == 1 ? 0 : 2));
    EXPECT_EQ(*r.epsilon_rhs, 1);
    EXPECT_TRUE(r.ok());

    const auto e = check_main_theorem(sm_of(DivAlg::R, {EssDiscrete::p2(3, q(0))}), {2, q(0)});
    EXPECT_TRUE(e.T_set.empty());
    EXPECT_EQ(e.hom_upper_bound, 0);
    EXPECT_TRUE(e.violations.empty());
}

TEST(DualityCorollary, Examples)
{
    EXPECT_TRUE(check_duality_corollary(sm_of(DivAlg::H, {EssDiscrete::t(1, q(0)), EssDiscrete::t(1, q(0))}), {0, q(0)}));
    EXPECT_TRUE(check_duality_corollary(sm_of(DivAlg::R, {EssDiscrete::p2(2, q(1)), EssDiscrete::p2(2, q(-1))}), {5, q(0)}));
    EXPECT_TRUE(check_duality_corollary(sm_of(DivAlg::R, {EssDiscrete::p2(3, q(0))}), {2, q(0)}));
}

TEST(DistinctionProperties, AbcMatchesRootNumberOnFamily)
{
    SweepConfig cfg = SweepConfig::defaults();
    cfg.samples = 150;
    cfg.seed = 9;
    std::size_t nonempty = 0;
    for (const auto &s : generate_family(cfg)) {
        const auto rep = check_main_theorem(s.sm, s.chi);
        EXPECT_EQ(rep.hom_upper_bound, static_cast<int>(rep.T_set.size()));
        EXPECT_EQ(rep.abc.size(), rep.T_set.size());
        if (rep.T_set.empty()) {
            continue;
        }
        ++nonempty;
        EXPECT_TRUE(rep.ok()) << to_string(s.sm) << " " << s.chi;
        const int w = root_number(tensor(llc(IrrRepGL(s.sm)), ind_chi_inverse(s.chi)));
        for (const auto &abc : rep.abc) {
            EXPECT_EQ(abc.a + 2 * abc.b + abc.c, s.sm.n());
            EXPECT_EQ(abc.prediction, w);
        }
        EXPECT_TRUE(check_duality_corollary(s.sm, s.chi));
    }
    EXPECT_GT(nonempty, 100u);
}
