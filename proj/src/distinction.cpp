#include <weilptb/distinction.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>

#include <weilptb/error.hpp>

namespace weilptb {

namespace {

bool odd(std::int64_t x)
{
    return x % 2 != 0;
}

void extend_involutions(std::vector<int> &image, int next, std::vector<Involution> &out)
{
    const int r = static_cast<int>(image.size());
    while (next < r && image[static_cast<std::size_t>(next)] != -1) {
        ++next;
    }
    if (next == r) {
        out.emplace_back(image);
        return;
    }
    const auto i = static_cast<std::size_t>(next);
    image[i] = next;
    extend_involutions(image, next + 1, out);
    for (int j = next + 1; j < r; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        if (image[ju] != -1) {
            continue;
        }
        image[i] = j;
        image[ju] = next;
        extend_involutions(image, next + 1, out);
        image[ju] = -1;
    }
    image[i] = -1;
}

int power_sign(int base, int exponent)
{
    return (base == -1 && exponent % 2 != 0) ? -1 : 1;
}

} // namespace

Involution::Involution(std::vector<int> image) : image_(std::move(image))
{
    const int r = size();
    for (int i = 0; i < r; ++i) {
        const int j = image_[static_cast<std::size_t>(i)];
        if (j < 0 || j >= r || image_[static_cast<std::size_t>(j)] != i) {
            throw Error(Errc::invalid_argument, "not an involutive permutation");
        }
    }
}

Involution Involution::identity(int r)
{
    std::vector<int> image(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        image[static_cast<std::size_t>(i)] = i;
    }
    return Involution(std::move(image));
}

std::vector<std::pair<int, int>> Involution::cycles() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i) {
        if ((*this)(i) > i) {
            out.emplace_back(i, (*this)(i));
        }
    }
    return out;
}

bool operator<(const Involution &a, const Involution &b)
{
    const auto ca = a.cycles();
    const auto cb = b.cycles();
    if (ca != cb) {
        return ca < cb;
    }
    return a.size() < b.size();
}

std::string to_string(const Involution &s)
{
    const auto cs = s.cycles();
    if (cs.empty()) {
        return "id";
    }
    std::string out;
    for (const auto &[i, j] : cs) {
        out += "(" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ")";
    }
    return out;
}

std::vector<Involution> all_involutions(int r)
{
    if (r < 0) {
        throw Error(Errc::invalid_argument, "negative involution size");
    }
    std::vector<Involution> out;
    std::vector<int> image(static_cast<std::size_t>(r), -1);
    extend_involutions(image, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool esi_distinguished(const EssDiscrete &pi, const HeckeCharacter &chi)
{
    const std::int64_t k = pi.k();
    const std::int64_t l = chi.l;
    const bool lam_ok = pi.lambda() + pi.lambda() == chi.eta;
    switch (pi.kind()) {
    case EssDiscrete::Kind::P1:
        throw Error(Errc::not_eligible, "a P1 block cannot be a fixed point");
    case EssDiscrete::Kind::P2:
        return lam_ok && std::llabs(l) > k && odd(k - l);
    case EssDiscrete::Kind::T:
        return lam_ok && std::llabs(l) < k && odd(k - l);
    }
    return false;
}

bool pair_distinguished(const EssDiscrete &pi1, const EssDiscrete &pi2, const HeckeCharacter &chi)
{
    if (pi1.kind() != pi2.kind()) {
        throw Error(Errc::mixed_variants, "cannot pair " + to_string(pi1) + " with " + to_string(pi2));
    }
    if (pi1.lambda() + pi2.lambda() != chi.eta) {
        return false;
    }
    if (pi1.kind() == EssDiscrete::Kind::P1) {
        return !odd(pi1.k() + pi2.k() - chi.l);
    }
    return pi1.k() == pi2.k();
}

std::vector<Involution> enumerate_T(const StandardModule &sm, const HeckeCharacter &chi)
{
    const auto &blocks = sm.blocks();
    const int r = static_cast<int>(blocks.size());
    const EssDiscrete::Kind fixed_kind = sm.D() == DivAlg::R ? EssDiscrete::Kind::P2 : EssDiscrete::Kind::T;
    std::vector<Involution> out;
    for (auto &s : all_involutions(r)) {
        bool good = true;
        for (int i = 0; i < r && good; ++i) {
            const auto &bi = blocks[static_cast<std::size_t>(i)];
            const int j = s(i);
            const auto &bj = blocks[static_cast<std::size_t>(j)];
            if (bi.block_size() != bj.block_size()) {
                good = false;
            } else if (i == j) {
                good = bi.kind() == fixed_kind && esi_distinguished(bi, chi);
            } else if (i < j) {
                good = bi.kind() == bj.kind() && pair_distinguished(bi, bj, chi);
            }
        }
        if (good) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

bool is_gsp_with_similitude(const WeilRep &phi, const HeckeCharacter &chi)
{
    if (phi.dim() % 2 != 0) {
        throw Error(Errc::odd_dimension, "symplectic similitude needs even dimension, got " + to_string(phi));
    }
    const WeilIrred mu = chi.restriction_to_rx();
    const WeilRep mu_rep{mu};
    if (tensor(dual(phi), mu_rep) != phi) {
        return false;
    }
    std::map<WeilIrred, int> multiplicity;
    for (const auto &s : phi.summands()) {
        ++multiplicity[s];
    }
    for (const auto &[psi, m] : multiplicity) {
        if (tensor(WeilRep{dual(psi)}, mu_rep) != WeilRep{psi}) {
            continue;
        }
        const bool symplectic = psi.kind() == WeilIrred::Kind::two_dim && det_rep(psi) == mu;
        if (!symplectic && m % 2 != 0) {
            return false;
        }
    }
    return true;
}

EpsilonIdentity epsilon_identity(const IrrRepGL &pi, const HeckeCharacter &chi)
{
    const WeilRep phi = llc(pi);
    if (!is_gsp_with_similitude(phi, chi)) {
        throw Error(Errc::precondition_failed,
                    to_string(phi) + " does not take values in GSp with similitude " + to_string(chi));
    }
    const int lhs = root_number(tensor(phi, ind_chi_inverse(chi)));
    const int n = pi.n();
    EpsilonIdentity out;
    out.lhs = MagUnitValue::unit(lhs == 1 ? 0 : 2);
    out.rhs = power_sign(epsilon_of(pi.D()), n) * power_sign(chi.sign_at_minus_one(), n);
    out.ok = lhs == out.rhs;
    return out;
}

Abc abc_bookkeeping(const StandardModule &sm, const Involution &varsigma, const HeckeCharacter &chi)
{
    const auto T = enumerate_T(sm, chi);
    if (std::find(T.begin(), T.end(), varsigma) == T.end()) {
        throw Error(Errc::not_in_t, to_string(varsigma) + " is not in T for " + to_string(sm) + ", " + to_string(chi));
    }
    Abc out;
    int moved1 = 0;
    int moved2 = 0;
    for (int i = 0; i < varsigma.size(); ++i) {
        if (varsigma.is_fixed(i)) {
            ++out.c;
        } else if (sm.blocks()[static_cast<std::size_t>(i)].param_dim() == 1) {
            ++moved1;
        } else {
            ++moved2;
        }
    }
    out.a = moved1 / 2;
    out.b = moved2 / 2;
    if (out.a + 2 * out.b + out.c != sm.n()) {
        throw Error(Errc::consistency_violation, "a+2b+c != n for " + to_string(sm));
    }
    out.prediction = power_sign(epsilon_of(sm.D()) * chi.sign_at_minus_one(), out.a + out.c);
    return out;
}

DistinctionReport check_main_theorem(const StandardModule &sm, const HeckeCharacter &chi)
{
    DistinctionReport rep;
    rep.sm = sm;
    rep.chi = chi;
    rep.T_set = enumerate_T(sm, chi);
    rep.hom_upper_bound = static_cast<int>(rep.T_set.size());
    const IrrRepGL pi(sm);
    rep.gsp_ok = is_gsp_with_similitude(llc(pi), chi);
    if (rep.gsp_ok) {
        const EpsilonIdentity e = epsilon_identity(pi, chi);
        rep.epsilon_lhs = e.lhs;
        rep.epsilon_rhs = e.rhs;
        rep.identity_ok = e.ok;
    }
    for (const auto &s : rep.T_set) {
        rep.abc.push_back(abc_bookkeeping(sm, s, chi));
    }
    if (rep.T_set.empty()) {
        return rep;
    }
    if (!rep.gsp_ok) {
        rep.violations.push_back("GSp similitude condition fails although T is nonempty");
        return rep;
    }
    if (!*rep.identity_ok) {
        rep.violations.push_back("root number " + to_string(*rep.epsilon_lhs) + " != " + std::to_string(*rep.epsilon_rhs));
    }
    const int lhs = rep.epsilon_lhs->sign();
    for (std::size_t i = 0; i < rep.abc.size(); ++i) {
        if (rep.abc[i].prediction != lhs) {
            rep.violations.push_back("abc prediction " + std::to_string(rep.abc[i].prediction) + " for " +
                                     to_string(rep.T_set[i]) + " != root number " + std::to_string(lhs));
        }
    }
    return rep;
}

bool check_duality_corollary(const StandardModule &sm, const HeckeCharacter &chi)
{
    if (enumerate_T(sm, chi).empty()) {
        return true;
    }
    const IrrRepGL pi(sm);
    return twist_by_chi(dual_irr(pi), chi) == pi;
}

} // namespace weilptb
