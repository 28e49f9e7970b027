#pragma once

#include "tusv/generator.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace tusv {

// Term grammar, whitespace-insensitive:
//   form  := term "+" term "+" term | term "+" term | term
//   term  := [INT "*"] kind ["@int"]
//   kind  := "sq" | "tri" | "p(" INT ")" | "pbar(" INT ")"
//          | "gp(" INT "," INT ")" | "mirror(gp(" INT "," INT "))" | "zero"
// Missing terms are filled with the zero generator so callers always get
// three slots. "@int" (shorthand "@Z") switches the term to the integers
// domain. Errors carry the byte offset of the first offending character.
class parse_failure : public std::runtime_error {
public:
    parse_failure(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

Generator parse_term(std::string_view text);
TernaryForm parse_form(std::string_view text);

// Round-trippable compact spelling with unit coefficients dropped, e.g.
// "tri + 2*tri + gp(1,2)"; a two-term form spells as "sq + gp(1,2) + zero".
std::string spell_term(const Generator& g);
std::string spell_form(const TernaryForm& f);

} // namespace tusv
