#include <weilptb/error.hpp>
#include <weilptb/rational.hpp>

#include <cctype>

namespace weilptb {

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw Error(Errc::invalid_argument, "zero denominator");
    }
    Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q)
{
    return q.get_str();
}

namespace {

std::size_t scan_int(std::string_view text, std::size_t pos, bool allow_sign)
{
    std::size_t i = pos;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    const std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
    }
    if (i == digits) {
        throw SyntaxError(i, "digit");
    }
    return i;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::size_t num_end = scan_int(text, 0, true);
    std::string num(text.substr(0, num_end));
    if (!num.empty() && num.front() == '+') {
        num.erase(0, 1);
    }
    if (num_end == text.size()) {
        return Rational(mpz_class(num));
    }
    if (text[num_end] != '/') {
        throw SyntaxError(num_end, "'/' or end of rational");
    }
    const std::size_t den_end = scan_int(text, num_end + 1, false);
    if (den_end != text.size()) {
        throw SyntaxError(den_end, "end of rational");
    }
    mpz_class den(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
    if (den == 0) {
        throw SyntaxError(num_end + 1, "nonzero denominator");
    }
    Rational q(mpz_class(num), den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

} // namespace weilptb
