#pragma once

#include <string_view>
#include <vector>

#include "tcbounds/freewords.hpp"

namespace tcb {

// Word grammar shared by presentations, homomorphism images and braids:
//
//   word  := "1" | term*             terms separated by blanks or '*'
//   term  := atom ('^' ['-'] digits)?
//   atom  := name | '(' word ')' | '[' word ',' word ']'
//   name  := [A-Za-z_] [A-Za-z0-9_']*
//
// "[u,v]" expands to u v u^-1 v^-1. "1" and the empty string denote the
// identity. Errors raise DomainError with the byte offset of the problem.

/// Letters exactly as written (commutators and powers expanded, no free
/// reduction). Braid words rely on this to keep their spelling.
std::vector<Letter> parse_letters(std::string_view text, const Alphabet& alphabet);

/// parse_letters followed by free reduction.
Word parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace tcb
