#ifndef LANTERN_WORD_EXPR_HPP
#define LANTERN_WORD_EXPR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lantern/braid.hpp"
#include "lantern/free_group.hpp"
#include "lantern/series.hpp"

namespace lantern {

// Grammar:
//   expr   := factor { "*" factor }
//   factor := atom [ "^" signed-integer ]
//   atom   := NAME "[" int { "," int } "]" | "(" expr ")"
//   NAME   := T | A | t | x | s
//
// T[i,j,...] band twist, A[i,j] pure-braid twist, t[i] framing twist,
// x[i] free generator, s[i] Artin generator. Whitespace between tokens is
// ignored. Error offsets are 1-based byte positions.
struct WordExpr {
  struct Factor {
    char name = 0;  // 0 marks a parenthesized group
    std::vector<int> indices;
    std::vector<WordExpr> group;  // exactly one element when name == 0
    std::optional<long> exponent;
    std::size_t offset = 0;  // position of the atom, not part of equality

    friend bool operator==(const Factor& a, const Factor& b) {
      return a.name == b.name && a.indices == b.indices && a.group == b.group &&
             a.exponent == b.exponent;
    }
  };

  std::vector<Factor> factors;

  friend bool operator==(const WordExpr& a, const WordExpr& b) {
    return a.factors == b.factors;
  }
};

enum class ExprAlphabet { kFree, kBraid };

// Bounds used to validate indices. Zero disables the corresponding check.
struct ParseContext {
  int free_rank = 0;
  int strands = 0;
};

WordExpr parse_word(std::string_view input, const ParseContext& ctx = {});
std::string print(const WordExpr& e);

/// Which alphabet the expression uses; throws ParseError on a mix.
ExprAlphabet alphabet_of(const WordExpr& e);
/// Largest index mentioned by any atom.
int max_index(const WordExpr& e);

Word to_word(const WordExpr& e, int rank);
BraidWord to_braid_word(const WordExpr& e);

// Group ring expressions:
//   grexpr := [ "-" ] term { ( "+" | "-" ) term }
//   term   := coeff "*" unit | coeff | unit
//   coeff  := int [ "/" int ]
//   unit   := "ov" "(" expr ")" | expr
// ov(g) denotes 1 - g; a bare coefficient is a multiple of the identity.
GroupRingExpr parse_group_ring(std::string_view input, const ParseContext& ctx = {});

}  // namespace lantern

#endif  // LANTERN_WORD_EXPR_HPP
