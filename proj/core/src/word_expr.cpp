#include "lantern/word_expr.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "lantern/errors.hpp"

namespace lantern {

namespace {

constexpr long kMaxLiteral = 1'000'000'000;

bool is_name(char c) { return c == 'T' || c == 'A' || c == 't' || c == 'x' || c == 's'; }

class Parser {
 public:
  Parser(std::string_view input, const ParseContext& ctx) : s_(input), ctx_(ctx) {}

  WordExpr parse_top() {
    skip_ws();
    if (at_end()) fail(pos_, "empty input");
    WordExpr e = parse_expr();
    finish();
    return e;
  }

  void finish() {
    skip_ws();
    if (at_end()) return;
    if (is_name(peek()) || peek() == '(') {
      fail(pos_, "juxtaposition is not allowed; use '*' between factors");
    }
    fail(pos_, std::string("unexpected '") + peek() + "'");
  }

  WordExpr parse_expr() {
    WordExpr e;
    e.factors.push_back(parse_factor());
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      e.factors.push_back(parse_factor());
    }
    return e;
  }

  // --- group ring ---------------------------------------------------------

  struct RawTerm {
    Rational coeff;
    bool obar = false;
    bool identity = false;
    WordExpr word;
  };

  std::vector<RawTerm> parse_group_ring_terms() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) fail(pos_, "empty input");
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    for (;;) {
      RawTerm t = parse_term();
      if (negate) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() == '+' || peek() == '-') {
        negate = peek() == '-';
        ++pos_;
        continue;
      }
      if (is_name(peek()) || peek() == '(' || peek() == 'o') {
        fail(pos_, "juxtaposition is not allowed; use '*' or '+'/'-' between terms");
      }
      fail(pos_, std::string("unexpected '") + peek() + "'");
    }
    return terms;
  }

 private:
  RawTerm parse_term() {
    skip_ws();
    RawTerm t;
    t.coeff = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      const long num = parse_int();
      long den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = parse_int();
        if (den == 0) fail(start, "zero denominator");
      }
      t.coeff = Rational(num, den);
      skip_ws();
      if (at_end() || peek() != '*') {
        t.identity = true;
        return t;
      }
      ++pos_;
      skip_ws();
    }
    if (s_.substr(pos_, 2) == "ov") {
      pos_ += 2;
      expect('(');
      t.obar = true;
      t.word = parse_expr();
      expect(')');
      return t;
    }
    t.word = parse_expr();
    return t;
  }

  WordExpr::Factor parse_factor() {
    WordExpr::Factor f = parse_atom();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        neg = peek() == '-';
        ++pos_;
      }
      const long v = parse_int();
      f.exponent = neg ? -v : v;
    }
    return f;
  }

  WordExpr::Factor parse_atom() {
    skip_ws();
    WordExpr::Factor f;
    f.offset = pos_ + 1;
    if (at_end()) fail(pos_, "expected a generator or '('");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      f.group.push_back(parse_expr());
      expect(')');
      return f;
    }
    if (!is_name(c)) {
      if (std::isalpha(static_cast<unsigned char>(c))) {
        fail(pos_, std::string("unknown generator '") + c + "'");
      }
      fail(pos_, "expected a generator or '('");
    }
    f.name = c;
    ++pos_;
    expect('[');
    std::vector<std::size_t> where;
    for (;;) {
      skip_ws();
      where.push_back(pos_);
      f.indices.push_back(static_cast<int>(parse_int()));
      skip_ws();
      if (!at_end() && peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(']');
    validate(f, where);
    return f;
  }

  void validate(const WordExpr::Factor& f, const std::vector<std::size_t>& where) {
    const auto& ix = f.indices;
    const std::size_t at = f.offset - 1;
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (ix.size() < lo || ix.size() > hi) {
        fail(at, std::string(1, f.name) + " takes " +
                     (lo == hi ? std::to_string(lo) : "at least " + std::to_string(lo)) +
                     " index" + (lo == 1 && hi == 1 ? "" : "es"));
      }
    };
    auto bound = [&](std::size_t k, int hi) {
      if (ix[k] < 1 || (hi > 0 && ix[k] > hi)) {
        fail(where[k], "index " + std::to_string(ix[k]) + " out of range");
      }
    };
    const int n = ctx_.strands;
    switch (f.name) {
      case 'x':
        arity(1, 1);
        bound(0, ctx_.free_rank);
        break;
      case 's':
        arity(1, 1);
        bound(0, n > 0 ? std::max(n - 1, 0) : 0);
        if (n == 1) fail(where[0], "no Artin generators on one strand");
        break;
      case 't':
        arity(1, 1);
        bound(0, n);
        break;
      case 'A':
      case 'T':
        if (f.name == 'A') arity(2, 2);
        else arity(2, static_cast<std::size_t>(-1));
        for (std::size_t k = 0; k < ix.size(); ++k) {
          bound(k, n);
          if (k && ix[k] <= ix[k - 1]) fail(where[k], "strand indices must increase");
        }
        break;
    }
  }

  long parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > kMaxLiteral) fail(start, "integer literal too large");
      ++pos_;
    }
    if (pos_ == start) fail(pos_, "expected an integer");
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(std::size_t zero_based, const std::string& msg) const {
    throw ParseError(zero_based + 1, msg);
  }

  std::string_view s_;
  ParseContext ctx_;
  std::size_t pos_ = 0;
};

void print_into(const WordExpr& e, std::string& out) {
  for (std::size_t k = 0; k < e.factors.size(); ++k) {
    const auto& f = e.factors[k];
    if (k) out += '*';
    if (f.name == 0) {
      out += '(';
      print_into(f.group.front(), out);
      out += ')';
    } else {
      out += f.name;
      out += '[';
      for (std::size_t i = 0; i < f.indices.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.indices[i]);
      }
      out += ']';
    }
    if (f.exponent) out += '^' + std::to_string(*f.exponent);
  }
}

void scan_alphabet(const WordExpr& e, std::optional<ExprAlphabet>& seen) {
  for (const auto& f : e.factors) {
    if (f.name == 0) {
      scan_alphabet(f.group.front(), seen);
      continue;
    }
    const ExprAlphabet a = f.name == 'x' ? ExprAlphabet::kFree : ExprAlphabet::kBraid;
    if (seen && *seen != a) {
      throw ParseError(f.offset, "free generators and braid generators cannot be mixed");
    }
    seen = a;
  }
}

std::vector<Letter> raw_letters(const WordExpr& e, int rank) {
  std::vector<Letter> out;
  for (const auto& f : e.factors) {
    std::vector<Letter> unit;
    if (f.name == 0) {
      unit = raw_letters(f.group.front(), rank);
    } else if (f.name == 'x') {
      unit.push_back(f.indices.front());
    } else {
      throw ParseError(f.offset, "braid generator in a free-group word");
    }
    const Word base = Word::reduce(rank, unit);
    const Word p = power(base, f.exponent.value_or(1));
    out.insert(out.end(), p.letters().begin(), p.letters().end());
    if (out.size() > kDefaultMaxWordLength) throw WordLengthError("word too long");
  }
  return out;
}

BraidWord invert_braid_word(const BraidWord& w) {
  BraidWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

GeneratorKind kind_of(char name) {
  switch (name) {
    case 't': return GeneratorKind::kFrame;
    case 'T': return GeneratorKind::kBandTwist;
    case 'A': return GeneratorKind::kPureTwist;
    default: return GeneratorKind::kArtin;
  }
}

}  // namespace

WordExpr parse_word(std::string_view input, const ParseContext& ctx) {
  return Parser(input, ctx).parse_top();
}

std::string print(const WordExpr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

ExprAlphabet alphabet_of(const WordExpr& e) {
  std::optional<ExprAlphabet> seen;
  scan_alphabet(e, seen);
  return seen.value_or(ExprAlphabet::kFree);
}

int max_index(const WordExpr& e) {
  int m = 0;
  for (const auto& f : e.factors) {
    if (f.name == 0) {
      m = std::max(m, max_index(f.group.front()));
    } else {
      for (int i : f.indices) m = std::max(m, i);
    }
  }
  return m;
}

Word to_word(const WordExpr& e, int rank) {
  return Word::reduce(rank, raw_letters(e, rank));
}

BraidWord to_braid_word(const WordExpr& e) {
  BraidWord out;
  for (const auto& f : e.factors) {
    const long exp = f.exponent.value_or(1);
    if (f.name == 'x') throw ParseError(f.offset, "free generator in a braid word");
    if (f.name != 0) {
      if (exp != 0) out.push_back({{kind_of(f.name), f.indices}, exp});
      continue;
    }
    const BraidWord inner = to_braid_word(f.group.front());
    const BraidWord unit = exp < 0 ? invert_braid_word(inner) : inner;
    for (long k = 0; k < std::labs(exp); ++k) {
      out.insert(out.end(), unit.begin(), unit.end());
      if (out.size() > kDefaultMaxWordLength) throw WordLengthError("braid word too long");
    }
  }
  return out;
}

GroupRingExpr parse_group_ring(std::string_view input, const ParseContext& ctx) {
  Parser p(input, ctx);
  const auto terms = p.parse_group_ring_terms();

  std::optional<ExprAlphabet> seen;
  int rank = ctx.free_rank;
  for (const auto& t : terms) {
    if (t.identity) continue;
    scan_alphabet(t.word, seen);
    rank = std::max(rank, max_index(t.word));
  }
  const bool braid = seen == ExprAlphabet::kBraid;
  GroupRingExpr out = braid ? GroupRingExpr::p3() : GroupRingExpr::free(rank);
  for (const auto& t : terms) {
    if (t.identity) {
      out.add_identity(t.coeff);
      continue;
    }
    GroupElement g = braid ? GroupElement(to_braid_word(t.word))
                           : GroupElement(to_word(t.word, rank));
    if (t.obar) {
      out.add_obar(t.coeff, g);
    } else {
      out.add(t.coeff, std::move(g));
    }
  }
  return out;
}

}  // namespace lantern
