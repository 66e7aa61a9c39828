#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weilptb {

enum class Errc {
    mixed_bases,
    reducible,
    bad_parity,
    not_one_dim,
    not_self_dual,
    det_not_trivial,
    well_definedness_violation,
    illegal_block,
    not_relevant,
    not_eligible,
    mixed_variants,
    odd_dimension,
    precondition_failed,
    not_in_t,
    not_levi_stable,
    consistency_violation,
    sample_not_in_h,
    infeasible,
    syntax_error,
    invalid_argument,
};

// Stable CamelCase name used in diagnostics and JSON error objects.
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what);

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::string expected);

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }
    [[nodiscard]] const std::string &expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace weilptb
