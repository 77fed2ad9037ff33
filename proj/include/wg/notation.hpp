// Text formats for roots: the multiplicative word notation, in which the
// word 1^x 2^y 3^z stands for x alpha3 + y alpha2 + z alpha1, and root-list
// files.
#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wg/lattice.hpp"

namespace wg {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Digits 1, 2, 3 at most once each and increasing, each optionally
/// followed by ^e or ^{e} with e >= 1.  An unbraced exponent takes all
/// following digits.
Root parse_word(std::string_view w);

/// Inverse of parse_word; exponents >= 2 are written ^{e}.
std::string emit_word(const Root& r);

/// "n1,n2,n3" or a word.
Root parse_root(std::string_view text);

/// One root per line; '#' starts a comment, blank lines are skipped.
/// Errors carry the line number.
std::vector<Root> read_roots(std::istream& in);
std::vector<Root> read_roots_file(const std::string& path);

}  // namespace wg
