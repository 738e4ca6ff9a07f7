#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cmpoly/ideal.hpp"
#include "cmpoly/monomial.hpp"

namespace cmpoly {

// monomial := "1" | factor ("*" factor)*
// factor   := "x" INT ("^" INT)?
// INT      := [1-9][0-9]*
// Whitespace is allowed around tokens. Indices are 1-based and at most n;
// repeated variables multiply. Errors carry the given line and a column
// relative to `first_column`.
Monomial parse_monomial(std::string_view text, std::size_t n,
                        Exponent cap = kDefaultExponentCap, std::size_t line = 1,
                        std::size_t first_column = 1);

// Ideal in either the text format (a first line "n=<INT>", then one
// monomial per nonempty line; lines starting with '#' are comments) or the
// structured format {"n": <int>, "gens": [[e_1, ..., e_n], ...]}. The
// structured format is recognized by a leading '{'.
MonomialIdeal parse_ideal(std::string_view text, Exponent cap = kDefaultExponentCap);
MonomialIdeal read_ideal_file(const std::filesystem::path& path,
                              Exponent cap = kDefaultExponentCap);

std::string format_monomial(const Monomial& u);
// Text format, generators in stored order, trailing newline.
std::string format_ideal(const MonomialIdeal& ideal);

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& doc,
                              Exponent cap = kDefaultExponentCap);

}  // namespace cmpoly
