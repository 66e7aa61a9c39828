#include <weilptb/parse.hpp>

#include <cctype>
#include <limits>

#include <weilptb/error.hpp>

namespace weilptb {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[nodiscard]] bool at_end()
    {
        skip_ws();
        return pos_ == text_.size();
    }

    [[nodiscard]] std::size_t pos() const noexcept { return pos_; }

    bool accept(std::string_view token)
    {
        skip_ws();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token)
    {
        if (!accept(token)) {
            throw SyntaxError(pos_, "'" + std::string(token) + "'");
        }
    }

    [[nodiscard]] char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    // ["-"] digits
    std::string integer_text()
    {
        skip_ws();
        std::string out;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            out += '-';
            ++pos_;
            skip_ws();
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_++];
        }
        if (pos_ == start) {
            throw SyntaxError(pos_, "integer");
        }
        return out;
    }

    std::int64_t small_integer()
    {
        const std::size_t start = (skip_ws(), pos_);
        const mpz_class z(integer_text());
        if (!z.fits_slong_p()) {
            throw SyntaxError(start, "integer of machine size");
        }
        return z.get_si();
    }

    Rational rational()
    {
        const mpz_class num(integer_text());
        if (!accept("/")) {
            return Rational(num);
        }
        const std::size_t at = (skip_ws(), pos_);
        const std::string den_text = integer_text();
        const mpz_class den(den_text);
        if (den_text.front() == '-' || den == 0) {
            throw SyntaxError(at, "positive denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    GaussianRational gauss()
    {
        const Rational re = rational();
        const char c = peek();
        if (c != '+' && c != '-') {
            return {re, Rational(0)};
        }
        ++pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') {
            throw SyntaxError(pos_, "unsigned imaginary part");
        }
        Rational im = rational();
        expect("i");
        return {re, c == '-' ? Rational(-im) : im};
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

struct HeadName {
    TermAst::Head head;
    std::string_view name;
};

// Longest names first so "phi1" is not read as "P1"-like prefixes.
constexpr HeadName kHeads[] = {
    {TermAst::Head::phi1, "phi1"}, {TermAst::Head::phi2, "phi2"}, {TermAst::Head::chi, "chi"},
    {TermAst::Head::P1, "P1"},     {TermAst::Head::P2, "P2"},     {TermAst::Head::T, "T"},
};

std::string_view head_name(TermAst::Head h)
{
    for (const auto &hn : kHeads) {
        if (hn.head == h) {
            return hn.name;
        }
    }
    return "?";
}

TermAst term(Cursor &c, std::initializer_list<TermAst::Head> allowed, const std::string &what)
{
    c.skip_ws();
    TermAst t;
    t.offset = c.pos();
    bool found = false;
    for (auto h : allowed) {
        if (c.accept(head_name(h))) {
            t.head = h;
            found = true;
            break;
        }
    }
    if (!found) {
        throw SyntaxError(c.pos(), what);
    }
    c.expect("(");
    t.k = c.small_integer();
    c.expect(";");
    t.value = c.gauss();
    c.expect(")");
    return t;
}

std::string term_text(const TermAst &t)
{
    return std::string(head_name(t.head)) + "(" + std::to_string(t.k) + ";" + to_string(t.value) + ")";
}

void require_kind(const ParamExpr &e, ParseKind kind)
{
    if (e.kind != kind) {
        throw Error(Errc::invalid_argument, "expression has the wrong kind");
    }
}

} // namespace

ParamExpr parse(std::string_view text, ParseKind kind)
{
    Cursor c(text);
    ParamExpr e;
    e.kind = kind;
    switch (kind) {
    case ParseKind::weil:
        if (c.accept("0")) {
            break;
        }
        do {
            e.terms.push_back(term(c, {TermAst::Head::phi1, TermAst::Head::phi2}, "'phi1(' or 'phi2('"));
        } while (c.accept("+"));
        break;
    case ParseKind::rep:
        if (c.at_end()) {
            break;
        }
        do {
            e.terms.push_back(term(c, {TermAst::Head::P1, TermAst::Head::P2, TermAst::Head::T}, "'P1(', 'P2(' or 'T('"));
        } while (c.accept("x"));
        break;
    case ParseKind::chi:
        e.terms.push_back(term(c, {TermAst::Head::chi}, "'chi('"));
        break;
    case ParseKind::partition:
        do {
            const std::size_t at = (c.skip_ws(), c.pos());
            const std::int64_t v = c.small_integer();
            if (v <= 0 || v > std::numeric_limits<int>::max()) {
                throw SyntaxError(at, "positive part");
            }
            e.parts.push_back(static_cast<int>(v));
        } while (c.accept(","));
        break;
    }
    if (!c.at_end()) {
        throw SyntaxError(c.pos(), "end of input");
    }
    return e;
}

std::string to_string(const ParamExpr &e)
{
    std::string out;
    if (e.kind == ParseKind::partition) {
        for (std::size_t i = 0; i < e.parts.size(); ++i) {
            out += (i ? "," : "") + std::to_string(e.parts[i]);
        }
        return out;
    }
    if (e.kind == ParseKind::weil && e.terms.empty()) {
        return "0";
    }
    const std::string sep = e.kind == ParseKind::rep ? " x " : "+";
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        out += (i ? sep : "") + term_text(e.terms[i]);
    }
    return out;
}

WeilRep build_weil(const ParamExpr &e, std::vector<std::string> *warnings)
{
    require_kind(e, ParseKind::weil);
    std::vector<WeilIrred> out;
    for (const auto &t : e.terms) {
        if (t.head == TermAst::Head::phi2 && t.k == 0) {
            if (warnings != nullptr) {
                warnings->push_back("Reducible: " + term_text(t) + " split as phi1(0;" + to_string(t.value) + ")+phi1(1;" +
                                    to_string(t.value) + ")");
            }
            const WeilRep split = induce({0, t.value});
            out.insert(out.end(), split.summands().begin(), split.summands().end());
            continue;
        }
        out.push_back(make_irred(t.head == TermAst::Head::phi1 ? 1 : 2, t.k, t.value));
    }
    return WeilRep(std::move(out));
}

std::vector<EssDiscrete> build_blocks(const ParamExpr &e)
{
    require_kind(e, ParseKind::rep);
    std::vector<EssDiscrete> out;
    for (const auto &t : e.terms) {
        const auto kind = t.head == TermAst::Head::P1   ? EssDiscrete::Kind::P1
                          : t.head == TermAst::Head::P2 ? EssDiscrete::Kind::P2
                                                        : EssDiscrete::Kind::T;
        out.push_back(EssDiscrete::make(kind, t.k, t.value));
    }
    return out;
}

HeckeCharacter build_chi(const ParamExpr &e)
{
    require_kind(e, ParseKind::chi);
    return {e.terms.at(0).k, e.terms.at(0).value};
}

std::vector<int> build_partition(const ParamExpr &e)
{
    require_kind(e, ParseKind::partition);
    return e.parts;
}

ParamExpr to_expr(const WeilRep &x)
{
    ParamExpr e;
    e.kind = ParseKind::weil;
    for (const auto &s : x.summands()) {
        e.terms.push_back({s.kind() == WeilIrred::Kind::one_dim ? TermAst::Head::phi1 : TermAst::Head::phi2, s.k(),
                           s.lambda(), 0});
    }
    return e;
}

ParamExpr to_expr(const std::vector<EssDiscrete> &blocks)
{
    ParamExpr e;
    e.kind = ParseKind::rep;
    for (const auto &b : blocks) {
        const auto head = b.kind() == EssDiscrete::Kind::P1   ? TermAst::Head::P1
                          : b.kind() == EssDiscrete::Kind::P2 ? TermAst::Head::P2
                                                              : TermAst::Head::T;
        e.terms.push_back({head, b.k(), b.lambda(), 0});
    }
    return e;
}

ParamExpr to_expr(const HeckeCharacter &chi)
{
    ParamExpr e;
    e.kind = ParseKind::chi;
    e.terms.push_back({TermAst::Head::chi, chi.l, chi.eta, 0});
    return e;
}

WeilRep parse_weil(std::string_view text, std::vector<std::string> *warnings)
{
    return build_weil(parse(text, ParseKind::weil), warnings);
}

std::vector<EssDiscrete> parse_blocks(std::string_view text)
{
    return build_blocks(parse(text, ParseKind::rep));
}

HeckeCharacter parse_chi(std::string_view text)
{
    return build_chi(parse(text, ParseKind::chi));
}

std::vector<int> parse_partition(std::string_view text)
{
    return build_partition(parse(text, ParseKind::partition));
}

GaussianRational parse_gauss(std::string_view text)
{
    Cursor c(text);
    GaussianRational z = c.gauss();
    if (!c.at_end()) {
        throw SyntaxError(c.pos(), "end of input");
    }
    return z;
}

DivAlg parse_divalg(std::string_view text)
{
    if (text == "R") {
        return DivAlg::R;
    }
    if (text == "H") {
        return DivAlg::H;
    }
    throw SyntaxError(0, "'R' or 'H'");
}

} // namespace weilptb
