#include "lantern/braid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "lantern/errors.hpp"

namespace lantern {

namespace {

void check_strands(int n) {
  if (n < 1) throw IndexError("strand count must be at least 1");
}

void check_pair(int i, int j, int n) {
  check_strands(n);
  if (i < 1 || j > n || i >= j) {
    throw IndexError("strand pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ") invalid for n=" + std::to_string(n));
  }
}

std::vector<long> unit_framing(int n, std::initializer_list<int> strands) {
  std::vector<long> f(n, 0);
  for (int s : strands) f[s - 1] += 1;
  return f;
}

FreeAut artin_generator(int k, int n, bool inverted) {
  check_strands(n);
  if (k < 1 || k > n - 1) {
    throw IndexError("Artin generator s[" + std::to_string(k) +
                     "] invalid for n=" + std::to_string(n));
  }
  std::vector<Word> fwd;
  std::vector<Word> bwd;
  for (int i = 1; i <= n; ++i) {
    fwd.push_back(Word::generator(n, i));
    bwd.push_back(Word::generator(n, i));
  }
  const Letter xk = k;
  const Letter xk1 = k + 1;
  const std::vector<Letter> conj{xk, xk1, -xk};      // x_k x_{k+1} x_k^-1
  const std::vector<Letter> conj_inv{-xk1, xk, xk1};  // x_{k+1}^-1 x_k x_{k+1}
  fwd[k - 1] = Word::reduce(n, conj);
  fwd[k] = Word::generator(n, k);
  bwd[k - 1] = Word::generator(n, k + 1);
  bwd[k] = Word::reduce(n, conj_inv);
  if (inverted) std::swap(fwd, bwd);
  return FreeAut::with_inverse(std::move(fwd), std::move(bwd));
}

}  // namespace

FreeAut sigma(int k, int n) { return artin_generator(k, n, false); }
FreeAut sigma_inverse(int k, int n) { return artin_generator(k, n, true); }

bool fixes_boundary_word(const FreeAut& f) {
  std::vector<Letter> prod(f.rank());
  std::iota(prod.begin(), prod.end(), 1);
  const Word boundary = Word::reduce(f.rank(), prod);
  return apply(f, boundary) == boundary;
}

bool sends_generators_to_conjugates(const FreeAut& f) {
  for (int i = 1; i <= f.rank(); ++i) {
    if (!conjugator_to_generator(f.image(i), i)) return false;
  }
  return true;
}

FramedBraid FramedBraid::make(FreeAut aut, std::vector<long> framing) {
  if (static_cast<int>(framing.size()) != aut.rank()) {
    throw MismatchError("framing vector length differs from strand count");
  }
  if (!fixes_boundary_word(aut)) {
    throw UnsupportedError("automorphism does not fix x_1...x_n; not a braid");
  }
  if (!sends_generators_to_conjugates(aut)) {
    throw UnsupportedError("automorphism permutes generators; not a pure braid");
  }
  return FramedBraid(std::move(aut), std::move(framing));
}

FramedBraid FramedBraid::identity(int n) {
  check_strands(n);
  return FramedBraid(FreeAut::identity(n), std::vector<long>(n, 0));
}

FramedBraid pure_twist(int i, int j, int n) {
  check_pair(i, j, n);
  FreeAut f = FreeAut::identity(n);
  for (int k = j - 1; k > i; --k) f = compose(f, sigma(k, n));
  f = compose(f, sigma(i, n));
  f = compose(f, sigma(i, n));
  for (int k = i + 1; k <= j - 1; ++k) f = compose(f, sigma_inverse(k, n));
  return FramedBraid::make(std::move(f), std::vector<long>(n, 0));
}

FramedBraid tau_pair(int i, int j, int n) {
  FramedBraid a = pure_twist(i, j, n);
  return FramedBraid::make(a.aut(), unit_framing(n, {i, j}));
}

FramedBraid tau_frame(int i, int n) {
  check_strands(n);
  if (i < 1 || i > n) {
    throw IndexError("strand " + std::to_string(i) + " invalid for n=" +
                     std::to_string(n));
  }
  return FramedBraid::make(FreeAut::identity(n), unit_framing(n, {i}));
}

FramedBraid full_twist(int n) {
  check_strands(n);
  FreeAut cycle = FreeAut::identity(n);
  for (int k = 1; k <= n - 1; ++k) cycle = compose(cycle, sigma(k, n));
  FreeAut f = FreeAut::identity(n);
  for (int r = 0; r < n; ++r) f = compose(f, cycle);
  return FramedBraid::make(std::move(f), std::vector<long>(n, 0));
}

FramedBraid tau_band(std::span<const int> strands, int n) {
  check_strands(n);
  bool full = static_cast<int>(strands.size()) == n;
  for (int k = 0; full && k < n; ++k) full = strands[k] == k + 1;
  if (!full) {
    throw UnsupportedError("band twists are supported only on the full strand set {1..n}");
  }
  return FramedBraid::make(full_twist(n).aut(), std::vector<long>(n, 1));
}

FramedBraid braid_mul(const FramedBraid& a, const FramedBraid& b) {
  if (a.strands() != b.strands()) throw MismatchError("braid_mul: strand mismatch");
  std::vector<long> framing(a.framing_);
  for (std::size_t k = 0; k < framing.size(); ++k) framing[k] += b.framing_[k];
  return FramedBraid::make(compose(a.aut_, b.aut_), std::move(framing));
}

FramedBraid braid_inverse(const FramedBraid& b) {
  std::vector<long> framing(b.framing_);
  for (long& f : framing) f = -f;
  return FramedBraid::make(inverse(b.aut_), std::move(framing));
}

FramedBraid braid_power(const FramedBraid& b, long exponent) {
  const FramedBraid base = exponent < 0 ? braid_inverse(b) : b;
  FramedBraid out = FramedBraid::identity(b.strands());
  for (long k = 0; k < std::labs(exponent); ++k) out = braid_mul(out, base);
  return out;
}

bool braid_eq(const FramedBraid& a, const FramedBraid& b) {
  return a.strands() == b.strands() && a.framing() == b.framing() &&
         a.aut() == b.aut();
}

std::vector<FramedBraid> framed_generators(int n) {
  std::vector<FramedBraid> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(tau_frame(i, n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) gens.push_back(tau_pair(i, j, n));
  }
  return gens;
}

bool is_central(const FramedBraid& b) {
  for (const FramedBraid& g : framed_generators(b.strands())) {
    if (!braid_eq(braid_mul(b, g), braid_mul(g, b))) return false;
  }
  return true;
}

// --- braid words -----------------------------------------------------------

std::string BraidGenerator::to_string() const {
  std::string name;
  switch (kind) {
    case GeneratorKind::kFrame: name = "t"; break;
    case GeneratorKind::kBandTwist: name = "T"; break;
    case GeneratorKind::kPureTwist: name = "A"; break;
    case GeneratorKind::kArtin: name = "s"; break;
  }
  name += '[';
  for (std::size_t k = 0; k < strands.size(); ++k) {
    if (k) name += ',';
    name += std::to_string(strands[k]);
  }
  return name + ']';
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += '*';
    out += w[k].generator.to_string();
    if (w[k].exponent != 1) out += '^' + std::to_string(w[k].exponent);
  }
  return out;
}

namespace {

void require_arity(const BraidGenerator& g, std::size_t arity) {
  if (g.strands.size() != arity) {
    throw UnsupportedError(g.to_string() + ": expected " + std::to_string(arity) +
                           " strand indices");
  }
}

FreeAut generator_aut(const BraidGenerator& g, int n) {
  switch (g.kind) {
    case GeneratorKind::kArtin:
      require_arity(g, 1);
      return sigma(g.strands[0], n);
    default:
      return evaluate(g, n).aut();
  }
}

}  // namespace

FramedBraid evaluate(const BraidGenerator& g, int n) {
  switch (g.kind) {
    case GeneratorKind::kFrame:
      require_arity(g, 1);
      return tau_frame(g.strands[0], n);
    case GeneratorKind::kPureTwist:
      require_arity(g, 2);
      return pure_twist(g.strands[0], g.strands[1], n);
    case GeneratorKind::kBandTwist:
      if (g.strands.size() == 2) return tau_pair(g.strands[0], g.strands[1], n);
      return tau_band(g.strands, n);
    case GeneratorKind::kArtin:
      break;
  }
  throw UnsupportedError(g.to_string() + " is not a pure braid");
}

FreeAut braid_word_aut(const BraidWord& w, int n) {
  FreeAut f = FreeAut::identity(n);
  for (const BraidLetter& l : w) {
    const FreeAut g = generator_aut(l.generator, n);
    const FreeAut step = l.exponent < 0 ? inverse(g) : g;
    for (long k = 0; k < std::labs(l.exponent); ++k) f = compose(f, step);
  }
  return f;
}

std::vector<long> braid_word_framing(const BraidWord& w, int n) {
  std::vector<long> framing(n, 0);
  for (const BraidLetter& l : w) {
    if (l.generator.kind == GeneratorKind::kArtin) {
      throw UnsupportedError("Artin letters carry no framing");
    }
    const FramedBraid g = evaluate(l.generator, n);
    for (int k = 0; k < n; ++k) framing[k] += l.exponent * g.framing()[k];
  }
  return framing;
}

FramedBraid evaluate(const BraidWord& w, int n) {
  check_strands(n);
  const bool has_artin = std::any_of(w.begin(), w.end(), [](const BraidLetter& l) {
    return l.generator.kind == GeneratorKind::kArtin;
  });
  if (has_artin) {
    return FramedBraid::make(braid_word_aut(w, n), std::vector<long>(n, 0));
  }
  FramedBraid out = FramedBraid::identity(n);
  for (const BraidLetter& l : w) {
    out = braid_mul(out, braid_power(evaluate(l.generator, n), l.exponent));
  }
  return out;
}

// --- lantern --------------------------------------------------------------

std::string to_string(PairOrder order) {
  return order == PairOrder::kLexicographic ? "lex" : "revlex";
}

LanternReport verify_lantern(int n, PairOrder order) {
  if (n < 2) throw IndexError("lantern identity needs n >= 2");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);

  FramedBraid lhs = tau_band(all, n);
  for (int i = 1; i <= n; ++i) {
    lhs = braid_mul(lhs, braid_power(tau_frame(i, n), n - 2));
  }

  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  if (order == PairOrder::kReverseLexicographic) std::reverse(pairs.begin(), pairs.end());
  FramedBraid rhs = FramedBraid::identity(n);
  for (auto [i, j] : pairs) rhs = braid_mul(rhs, tau_pair(i, j, n));

  LanternReport r;
  r.n = n;
  r.order = order;
  r.framing_lhs = lhs.framing();
  r.framing_rhs = rhs.framing();
  r.automorphisms_equal = lhs.aut() == rhs.aut();
  for (int i = 1; i <= n && !r.automorphisms_equal; ++i) {
    if (!(lhs.aut().image(i) == rhs.aut().image(i))) {
      r.lowest_discrepancy = i;
      break;
    }
  }
  for (const Word& w : lhs.aut().images()) r.lhs_image_length += w.size();
  r.holds = braid_eq(lhs, rhs);
  return r;
}

// --- framed P_3 normal form -----------------------------------------------

namespace {

struct P3Piece {
  Word word;
  long delta;
  std::array<long, 3> framing;
};

P3Piece p3_piece(const BraidGenerator& g) {
  const Word a = Word::generator(2, 1);
  const Word b = Word::generator(2, 2);
  const auto& s = g.strands;
  auto bad = [&]() -> UnsupportedError {
    return UnsupportedError(g.to_string() + " is not in the framed P_3 alphabet");
  };
  auto pair_piece = [&](bool framed) -> P3Piece {
    if (s.size() != 2) throw bad();
    std::array<long, 3> fr{};
    if (framed) {
      if (s[0] < 1 || s[1] > 3 || s[0] >= s[1]) throw bad();
      fr[s[0] - 1] = 1;
      fr[s[1] - 1] = 1;
    }
    if (s == std::vector<int>{1, 2}) return {a, 0, fr};
    if (s == std::vector<int>{1, 3}) return {b, 0, fr};
    if (s == std::vector<int>{2, 3}) return {invert(b) * invert(a), 1, fr};
    throw bad();
  };
  switch (g.kind) {
    case GeneratorKind::kFrame: {
      if (s.size() != 1 || s[0] < 1 || s[0] > 3) throw bad();
      std::array<long, 3> fr{};
      fr[s[0] - 1] = 1;
      return {Word(2), 0, fr};
    }
    case GeneratorKind::kPureTwist:
      return pair_piece(false);
    case GeneratorKind::kBandTwist:
      if (s == std::vector<int>{1, 2, 3}) return {Word(2), 1, {1, 1, 1}};
      return pair_piece(true);
    case GeneratorKind::kArtin:
      break;
  }
  throw bad();
}

}  // namespace

FramedBraid expand(const P3NormalForm& nf) {
  const FreeAut a = pure_twist(1, 2, 3).aut();
  const FreeAut b = pure_twist(1, 3, 3).aut();
  const FreeAut a_inv = inverse(a);
  const FreeAut b_inv = inverse(b);
  FreeAut f = FreeAut::identity(3);
  for (Letter l : nf.word.letters()) {
    switch (l) {
      case 1: f = compose(f, a); break;
      case -1: f = compose(f, a_inv); break;
      case 2: f = compose(f, b); break;
      default: f = compose(f, b_inv); break;
    }
  }
  const FramedBraid delta = full_twist(3);
  const FramedBraid delta_part = braid_power(delta, nf.delta_power);
  f = compose(f, delta_part.aut());
  return FramedBraid::make(std::move(f), {nf.framing[0], nf.framing[1], nf.framing[2]});
}

P3NormalForm p3_normal_form(const BraidWord& w) {
  P3NormalForm nf;
  for (const BraidLetter& l : w) {
    const P3Piece p = p3_piece(l.generator);
    nf.word = nf.word * power(p.word, l.exponent);
    nf.delta_power += l.exponent * p.delta;
    for (int k = 0; k < 3; ++k) nf.framing[k] += l.exponent * p.framing[k];
  }
  if (!braid_eq(expand(nf), evaluate(w, 3))) {
    throw std::logic_error("P_3 normal form certificate failed for " + to_string(w));
  }
  return nf;
}

}  // namespace lantern
