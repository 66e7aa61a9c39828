#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <weilptb/gaussian.hpp>
#include <weilptb/langlands.hpp>
#include <weilptb/weil_rep.hpp>

namespace weilptb {

enum class ParseKind { weil, rep, chi, partition };

// One head(int;gauss) term with the byte offset where it started.
struct TermAst {
    enum class Head { phi1, phi2, P1, P2, T, chi };
    Head head = Head::phi1;
    std::int64_t k = 0;
    GaussianRational value;
    std::size_t offset = 0;

    // Offsets are ignored.
    friend bool operator==(const TermAst &a, const TermAst &b)
    {
        return a.head == b.head && a.k == b.k && a.value == b.value;
    }
};

struct ParamExpr {
    ParseKind kind = ParseKind::weil;
    std::vector<TermAst> terms;
    // Only for ParseKind::partition.
    std::vector<int> parts;

    friend bool operator==(const ParamExpr &, const ParamExpr &) = default;
};

// Whitespace-insensitive. Throws SyntaxError with a byte offset.
ParamExpr parse(std::string_view text, ParseKind kind);

// Canonical text; parse(to_string(e), e.kind) == e.
std::string to_string(const ParamExpr &e);

// Construction layer. phi2 with k = 0 is split into phi1(0;lam)+phi1(1;lam)
// and a warning is appended.
WeilRep build_weil(const ParamExpr &e, std::vector<std::string> *warnings = nullptr);
std::vector<EssDiscrete> build_blocks(const ParamExpr &e);
HeckeCharacter build_chi(const ParamExpr &e);
std::vector<int> build_partition(const ParamExpr &e);

ParamExpr to_expr(const WeilRep &x);
ParamExpr to_expr(const std::vector<EssDiscrete> &blocks);
ParamExpr to_expr(const HeckeCharacter &chi);

// Shorthands: parse then build.
WeilRep parse_weil(std::string_view text, std::vector<std::string> *warnings = nullptr);
std::vector<EssDiscrete> parse_blocks(std::string_view text);
HeckeCharacter parse_chi(std::string_view text);
std::vector<int> parse_partition(std::string_view text);
// "p/q" or "p/q+r/si".
GaussianRational parse_gauss(std::string_view text);
DivAlg parse_divalg(std::string_view text);

} // namespace weilptb
