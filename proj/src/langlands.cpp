#include <weilptb/langlands.hpp>

#include <algorithm>

#include <weilptb/error.hpp>

namespace weilptb {

namespace {

std::int64_t mod2(std::int64_t k)
{
    return ((k % 2) + 2) % 2;
}

// n^{-1} Re(lambda) compared across blocks of size 1 and 2.
bool langlands_before(const EssDiscrete &a, const EssDiscrete &b)
{
    const Rational ra = a.lambda().re() / a.block_size();
    const Rational rb = b.lambda().re() / b.block_size();
    if (ra != rb) {
        return ra > rb;
    }
    return a < b;
}

int kind_rank(EssDiscrete::Kind k)
{
    switch (k) {
    case EssDiscrete::Kind::P1:
        return 0;
    case EssDiscrete::Kind::T:
        return 1;
    case EssDiscrete::Kind::P2:
        return 2;
    }
    return 0;
}

} // namespace

int epsilon_of(DivAlg d) noexcept
{
    return d == DivAlg::R ? -1 : 1;
}

std::string to_string(DivAlg d)
{
    return d == DivAlg::R ? "R" : "H";
}

EssDiscrete EssDiscrete::p1(std::int64_t k, GaussianRational lambda)
{
    if (k != 0 && k != 1) {
        throw Error(Errc::bad_parity, "P1 needs k in {0,1}, got " + std::to_string(k));
    }
    return {Kind::P1, k, std::move(lambda)};
}

EssDiscrete EssDiscrete::p2(std::int64_t k, GaussianRational lambda)
{
    if (k < 1) {
        throw Error(Errc::invalid_argument, "P2 needs k >= 1, got " + std::to_string(k));
    }
    return {Kind::P2, k, std::move(lambda)};
}

EssDiscrete EssDiscrete::t(std::int64_t k, GaussianRational lambda)
{
    if (k < 1) {
        throw Error(Errc::invalid_argument, "T needs k >= 1, got " + std::to_string(k));
    }
    return {Kind::T, k, std::move(lambda)};
}

EssDiscrete EssDiscrete::make(Kind kind, std::int64_t k, GaussianRational lambda)
{
    switch (kind) {
    case Kind::P1:
        return p1(k, std::move(lambda));
    case Kind::P2:
        return p2(k, std::move(lambda));
    case Kind::T:
        return t(k, std::move(lambda));
    }
    throw Error(Errc::invalid_argument, "unknown block kind");
}

std::strong_ordering operator<=>(const EssDiscrete &a, const EssDiscrete &b)
{
    if (auto c = a.block_size() <=> b.block_size(); c != 0) {
        return c;
    }
    if (auto c = a.k_ <=> b.k_; c != 0) {
        return c;
    }
    if (auto c = a.lambda_ <=> b.lambda_; c != 0) {
        return c;
    }
    return kind_rank(a.kind_) <=> kind_rank(b.kind_);
}

CxCharacter HeckeCharacter::as_cx() const
{
    return {l, eta * GaussianRational(make_rational(1, 2))};
}

WeilIrred HeckeCharacter::restriction_to_rx() const
{
    return from_rx({static_cast<int>(mod2(l)), eta});
}

int StandardModule::total_size() const
{
    int s = 0;
    for (const auto &b : blocks_) {
        s += b.block_size();
    }
    return s;
}

int StandardModule::n() const
{
    return d_ == DivAlg::R ? total_size() / 2 : static_cast<int>(blocks_.size());
}

StandardModule make_standard(DivAlg d, std::vector<EssDiscrete> blocks)
{
    for (const auto &b : blocks) {
        if (!b.legal_for(d)) {
            throw Error(Errc::illegal_block, "block " + to_string(b) + " is not allowed for D = " + to_string(d));
        }
    }
    std::sort(blocks.begin(), blocks.end(), langlands_before);
    StandardModule sm;
    sm.d_ = d;
    sm.blocks_ = std::move(blocks);
    return sm;
}

IrrRepGL::IrrRepGL(DivAlg d, std::vector<EssDiscrete> blocks) : sm_(make_standard(d, std::move(blocks))) {}

WeilIrred llc(const EssDiscrete &block)
{
    return block.kind() == EssDiscrete::Kind::P1 ? WeilIrred::one_dim(block.k(), block.lambda())
                                                 : WeilIrred::two_dim(block.k(), block.lambda());
}

WeilRep llc(const IrrRepGL &pi)
{
    std::vector<WeilIrred> out;
    out.reserve(pi.blocks().size());
    for (const auto &b : pi.blocks()) {
        out.push_back(llc(b));
    }
    return WeilRep(std::move(out));
}

IrrRepGL llc_inverse(const WeilRep &phi, DivAlg d)
{
    std::vector<EssDiscrete> blocks;
    blocks.reserve(phi.summands().size());
    for (const auto &s : phi.summands()) {
        if (s.kind() == WeilIrred::Kind::one_dim) {
            if (d == DivAlg::H) {
                throw Error(Errc::not_relevant, to_string(phi) + " has a one-dimensional summand, not relevant for GL_n(H)");
            }
            blocks.push_back(EssDiscrete::p1(s.k(), s.lambda()));
        } else {
            blocks.push_back(d == DivAlg::R ? EssDiscrete::p2(s.k(), s.lambda()) : EssDiscrete::t(s.k(), s.lambda()));
        }
    }
    return {d, std::move(blocks)};
}

EssDiscrete dual_block(const EssDiscrete &b)
{
    return b.with_lambda(-b.lambda());
}

IrrRepGL dual_irr(const IrrRepGL &pi)
{
    std::vector<EssDiscrete> out;
    out.reserve(pi.blocks().size());
    for (const auto &b : pi.blocks()) {
        out.push_back(dual_block(b));
    }
    return {pi.D(), std::move(out)};
}

EssDiscrete twist_by_chi(const EssDiscrete &b, const HeckeCharacter &chi)
{
    if (b.kind() == EssDiscrete::Kind::P1) {
        return EssDiscrete::p1(mod2(b.k() + chi.l), b.lambda() + chi.eta);
    }
    return b.with_lambda(b.lambda() + chi.eta);
}

IrrRepGL twist_by_chi(const IrrRepGL &pi, const HeckeCharacter &chi)
{
    std::vector<EssDiscrete> out;
    out.reserve(pi.blocks().size());
    for (const auto &b : pi.blocks()) {
        out.push_back(twist_by_chi(b, chi));
    }
    return {pi.D(), std::move(out)};
}

WeilRep ind_chi_inverse(const HeckeCharacter &chi)
{
    const CxCharacter c = chi.as_cx();
    return induce({-c.k, -c.lambda});
}

std::string to_string(const EssDiscrete &b)
{
    const char *name = b.kind() == EssDiscrete::Kind::P1 ? "P1(" : b.kind() == EssDiscrete::Kind::P2 ? "P2(" : "T(";
    return name + std::to_string(b.k()) + ";" + to_string(b.lambda()) + ")";
}

std::string to_string(const std::vector<EssDiscrete> &blocks)
{
    std::string out;
    for (const auto &b : blocks) {
        if (!out.empty()) {
            out += " x ";
        }
        out += to_string(b);
    }
    return out;
}

std::string to_string(const StandardModule &sm)
{
    return to_string(sm.blocks());
}

std::string to_string(const IrrRepGL &pi)
{
    return to_string(pi.blocks());
}

std::string to_string(const HeckeCharacter &chi)
{
    return "chi(" + std::to_string(chi.l) + ";" + to_string(chi.eta) + ")";
}

std::ostream &operator<<(std::ostream &os, const EssDiscrete &b)
{
    return os << to_string(b);
}

std::ostream &operator<<(std::ostream &os, const StandardModule &sm)
{
    return os << to_string(sm);
}

std::ostream &operator<<(std::ostream &os, const IrrRepGL &pi)
{
    return os << to_string(pi);
}

std::ostream &operator<<(std::ostream &os, const HeckeCharacter &chi)
{
    return os << to_string(chi);
}

} // namespace weilptb
