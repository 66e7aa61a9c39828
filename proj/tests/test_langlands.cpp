#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <weilptb/error.hpp>
#include <weilptb/langlands.hpp>
#include <weilptb/sweep.hpp>

#include "oracles/character.hpp"
#include "support.hpp"

using namespace weilptb;
using testing_support::q;

namespace {

WeilIrred p1w(std::int64_t k, GaussianRational l)
{
    return WeilIrred::one_dim(k, std::move(l));
}

WeilIrred p2w(std::int64_t k, GaussianRational l)
{
    return WeilIrred::two_dim(k, std::move(l));
}

} // namespace

TEST(DivAlg, EpsilonValues)
{
    EXPECT_EQ(epsilon_of(DivAlg::R), -1);
    EXPECT_EQ(epsilon_of(DivAlg::H), 1);
}

TEST(EssDiscrete, Validation)
{
    EXPECT_THROW((void)EssDiscrete::p1(2, q(0)), Error);
    EXPECT_THROW((void)EssDiscrete::p2(0, q(0)), Error);
    EXPECT_THROW((void)EssDiscrete::t(0, q(0)), Error);
    EXPECT_EQ(EssDiscrete::p2(2, q(0)).block_size(), 2);
    EXPECT_EQ(EssDiscrete::t(2, q(0)).block_size(), 1);
}

TEST(MakeStandard, Examples)
{
    const auto sm = make_standard(DivAlg::R, {EssDiscrete::p2(1, q(-1)), EssDiscrete::p1(0, q(2))});
    ASSERT_EQ(sm.r(), 2u);
    EXPECT_EQ(sm.blocks()[0], EssDiscrete::p1(0, q(2)));
    EXPECT_EQ(sm.blocks()[1], EssDiscrete::p2(1, q(-1)));

    const auto a = make_standard(DivAlg::H, {EssDiscrete::t(1, q(0)), EssDiscrete::t(2, q(0))});
    const auto b = make_standard(DivAlg::H, {EssDiscrete::t(2, q(0)), EssDiscrete::t(1, q(0))});
    EXPECT_EQ(a, b);

    try {
        (void)make_standard(DivAlg::R, {EssDiscrete::t(1, q(0))});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::illegal_block);
    }
}

TEST(MakeStandard, OrderingInvariantAndIdempotent)
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        const DivAlg d = t % 2 == 0 ? DivAlg::R : DivAlg::H;
        const auto pi = testing_support::random_irr(rng, d, 5);
        const auto &b = pi.blocks();
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            const Rational lhs = b[i].lambda().re() / b[i].block_size();
            const Rational rhs = b[i + 1].lambda().re() / b[i + 1].block_size();
            EXPECT_GE(lhs, rhs);
        }
        EXPECT_EQ(make_standard(d, b), pi.standard_module());
        auto shuffled = b;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EXPECT_EQ(make_standard(d, shuffled), pi.standard_module());
    }
}

TEST(Llc, Examples)
{
    EXPECT_EQ(llc(IrrRepGL(DivAlg::R, {EssDiscrete::p2(3, q(1, 2))})), WeilRep({p2w(3, q(1, 2))}));
    EXPECT_EQ(llc(IrrRepGL(DivAlg::H, {EssDiscrete::t(2, q(0)), EssDiscrete::t(1, q(1))})),
              WeilRep({p2w(2, q(0)), p2w(1, q(1))}));
    EXPECT_EQ(llc(IrrRepGL(DivAlg::R, {EssDiscrete::p1(0, q(0)), EssDiscrete::p1(1, q(0))})),
              WeilRep({p1w(0, q(0)), p1w(1, q(0))}));
}

TEST(LlcInverse, Examples)
{
    EXPECT_EQ(llc_inverse(WeilRep{p2w(3, q(0))}, DivAlg::R), IrrRepGL(DivAlg::R, {EssDiscrete::p2(3, q(0))}));
    try {
        (void)llc_inverse(WeilRep{p1w(0, q(0)), p2w(1, q(0))}, DivAlg::H);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::not_relevant);
    }
}

TEST(LlcInverse, BijectionOnGrid)
{
    const std::vector<GaussianRational> lambdas{q(0), q(1, 2), q(-1), testing_support::gq(1, 2, 1, 1)};
    const auto reps = enumerate_weil_reps(6, 5, lambdas);
    ASSERT_GT(reps.size(), 1000u);
    std::size_t relevant_h = 0;
    for (const auto &phi : reps) {
        EXPECT_EQ(llc(llc_inverse(phi, DivAlg::R)), phi);
        const bool all_two_dim = std::all_of(phi.summands().begin(), phi.summands().end(),
                                             [](const WeilIrred &x) { return x.dim() == 2; });
        if (all_two_dim) {
            EXPECT_EQ(llc(llc_inverse(phi, DivAlg::H)), phi);
            ++relevant_h;
        } else {
            EXPECT_THROW((void)llc_inverse(phi, DivAlg::H), Error);
        }
    }
    EXPECT_GT(relevant_h, 100u);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const DivAlg d = t % 2 == 0 ? DivAlg::R : DivAlg::H;
        const auto pi = testing_support::random_irr(rng, d);
        EXPECT_EQ(llc_inverse(llc(pi), d), pi);
    }
}

TEST(DualIrr, Examples)
{
    EXPECT_EQ(dual_irr(IrrRepGL(DivAlg::R, {EssDiscrete::p2(2, q(1))})), IrrRepGL(DivAlg::R, {EssDiscrete::p2(2, q(-1))}));
    EXPECT_EQ(dual_irr(IrrRepGL(DivAlg::H, {EssDiscrete::t(1, q(0))})), IrrRepGL(DivAlg::H, {EssDiscrete::t(1, q(0))}));
}

TEST(TwistByChi, Examples)
{
    EXPECT_EQ(twist_by_chi(EssDiscrete::p2(2, q(-1)), HeckeCharacter{5, q(0)}), EssDiscrete::p2(2, q(-1)));
    EXPECT_EQ(twist_by_chi(EssDiscrete::p1(0, q(0)), HeckeCharacter{1, q(1)}), EssDiscrete::p1(1, q(1)));
    EXPECT_EQ(twist_by_chi(EssDiscrete::t(3, q(1, 2)), HeckeCharacter{0, q(-1, 2)}), EssDiscrete::t(3, q(0)));
    EXPECT_EQ(tensor(p2w(3, q(1, 2)), p1w(0, q(-1, 2))), WeilRep{p2w(3, q(0))});
}

TEST(IndChiInverse, Examples)
{
    EXPECT_EQ(ind_chi_inverse({4, q(0)}), WeilRep{p2w(4, q(0))});
    EXPECT_EQ(ind_chi_inverse({0, q(2)}), WeilRep({p1w(0, q(-1)), p1w(1, q(-1))}));
    EXPECT_EQ(ind_chi_inverse({-1, q(0)}), WeilRep{p2w(1, q(0))});
}

TEST(HeckeCharacter, Basics)
{
    const HeckeCharacter chi{3, q(1)};
    EXPECT_EQ(chi.sign_at_minus_one(), -1);
    EXPECT_EQ(chi.as_cx(), (CxCharacter{3, q(1, 2)}));
    EXPECT_EQ(chi.restriction_to_rx(), p1w(1, q(1)));
    EXPECT_EQ(to_string(chi), "chi(3;1)");
}

TEST(LanglandsProperties, TwistAndDualCompatibility)
{
    std::mt19937_64 rng(29);
    for (int t = 0; t < 400; ++t) {
        const DivAlg d = t % 2 == 0 ? DivAlg::R : DivAlg::H;
        const auto pi = testing_support::random_irr(rng, d);
        const auto chi = testing_support::random_chi(rng);
        const WeilIrred mu = from_rx({static_cast<int>(((chi.l % 2) + 2) % 2), chi.eta});
        EXPECT_EQ(llc(twist_by_chi(pi, chi)), tensor(llc(pi), WeilRep{mu}));
        EXPECT_EQ(llc(dual_irr(pi)), dual(llc(pi)));
        EXPECT_EQ(oracle::character(llc(twist_by_chi(pi, chi))),
                  oracle::product(oracle::character(llc(pi)), oracle::character(WeilRep{mu})));
    }
}

TEST(LanglandsProperties, IndChiInverseMatchesCharacterOracle)
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const auto chi = testing_support::random_chi(rng);
        const auto c = oracle::character(ind_chi_inverse(chi));
        // Induced characters vanish on the j coset and carry weights -chi and its conjugate.
        EXPECT_TRUE(c.j_trace.empty());
        std::map<std::pair<std::int64_t, GaussianRational>, int> w;
        w[{-chi.l, -chi.eta * GaussianRational(make_rational(1, 2))}] += 1;
        w[{chi.l, -chi.eta * GaussianRational(make_rational(1, 2))}] += 1;
        EXPECT_EQ(c.weights, w);
    }
}

TEST(Printing, Langlands)
{
    const auto sm = make_standard(DivAlg::R, {EssDiscrete::p2(1, q(0)), EssDiscrete::p1(0, q(0)), EssDiscrete::p1(1, q(0))});
    EXPECT_EQ(to_string(sm), "P1(0;0) x P1(1;0) x P2(1;0)");
}
