#ifndef FORMSYM_PARSE_HPP
#define FORMSYM_PARSE_HPP

#include "formsym/multipoly.hpp"

#include <stdexcept>

namespace formsym {

struct SyntaxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownVariable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grammar (documented in docs/grammar.ebnf):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | 'i' | var | '(' expr ')'
// Rational literals are `a` or `a/b` with decimal digits. The result is the
// fully expanded canonical polynomial over the declared variables.
MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

} // namespace formsym

#endif
