// Text formats: group files and words.
//
// A group file lists the generator names on a line "generators: a b c"
// followed by edge lines "m: a b 4" or "m: a b inf". Pairs without an edge
// line get inf. Blank lines and text after '#' are ignored.
//
// A word is a whitespace separated list of tokens "name" or "name^k" with k
// a nonzero integer; "name^k" stands for |k| copies of name or its inverse.

#ifndef XLART_IO_HPP_
#define XLART_IO_HPP_

#include <span>
#include <string>
#include <string_view>

#include "group_context.hpp"

namespace xlart {

  GroupContext parse_group_file(std::string_view text);
  //! Reads and parses a group file; errors mention the path.
  GroupContext load_group_file(std::string const& path);

  Word parse_word(std::string_view text, GroupContext const& ctx);

  //! Runs of one letter are written name^k; the empty word is "".
  std::string format_word(std::span<Letter const> w, GroupContext const& ctx);

}  // namespace xlart

#endif  // XLART_IO_HPP_
