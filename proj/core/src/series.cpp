#include "lantern/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "lantern/errors.hpp"

namespace lantern {

namespace {

void check_cap(int cap) {
  if (cap < 0) throw std::invalid_argument("degree cap must be >= 0");
}

void check_compatible(const NcSeries& a, const NcSeries& b) {
  if (a.cap() != b.cap() || !(a.context() == b.context())) {
    throw MismatchError("series live in different contexts or caps");
  }
}

// Position where the central block of a key starts.
std::size_t central_start(const VariableContext& ctx, const std::vector<std::uint16_t>& key) {
  const auto nc = ctx.noncommuting.size();
  std::size_t i = 0;
  while (i < key.size() && key[i] < nc) ++i;
  return i;
}

Monomial merge(const VariableContext& ctx, const Monomial& a, const Monomial& b) {
  const std::size_t ca = central_start(ctx, a.key);
  const std::size_t cb = central_start(ctx, b.key);
  Monomial out;
  out.key.reserve(a.key.size() + b.key.size());
  out.key.insert(out.key.end(), a.key.begin(), a.key.begin() + ca);
  out.key.insert(out.key.end(), b.key.begin(), b.key.begin() + cb);
  std::merge(a.key.begin() + ca, a.key.end(), b.key.begin() + cb, b.key.end(),
             std::back_inserter(out.key));
  return out;
}

std::shared_ptr<const VariableContext> empty_context() {
  static const auto ctx = std::make_shared<const VariableContext>();
  return ctx;
}

}  // namespace

const std::string& VariableContext::name(std::size_t index) const {
  if (index < noncommuting.size()) return noncommuting[index];
  return central.at(index - noncommuting.size());
}

std::shared_ptr<const VariableContext> free_context(int rank) {
  auto ctx = std::make_shared<VariableContext>();
  for (int i = 1; i <= rank; ++i) ctx->noncommuting.push_back("ξ" + std::to_string(i));
  return ctx;
}

std::shared_ptr<const VariableContext> p3_context() {
  static const auto ctx = std::make_shared<const VariableContext>(
      VariableContext{{"α", "β"}, {"γ", "θ1", "θ2", "θ3"}});
  return ctx;
}

std::string rational_to_string(const Rational& r) { return r.str(); }

// --- NcSeries -------------------------------------------------------------

NcSeries::NcSeries() : ctx_(empty_context()), cap_(0) {}

NcSeries::NcSeries(std::shared_ptr<const VariableContext> ctx, int cap)
    : ctx_(std::move(ctx)), cap_(cap) {
  check_cap(cap);
  if (!ctx_) throw std::invalid_argument("null variable context");
}

NcSeries NcSeries::constant(std::shared_ptr<const VariableContext> ctx, int cap,
                            const Rational& c) {
  NcSeries s(std::move(ctx), cap);
  s.add_term(Monomial{}, c);
  return s;
}

NcSeries NcSeries::variable(std::shared_ptr<const VariableContext> ctx, int cap,
                            std::size_t index) {
  if (index >= ctx->size()) throw IndexError("variable index out of range");
  NcSeries s(std::move(ctx), cap);
  s.add_term(Monomial{{static_cast<std::uint16_t>(index)}}, 1);
  return s;
}

Monomial NcSeries::monomial(const VariableContext& ctx,
                            const std::vector<std::uint16_t>& indices) {
  Monomial m;
  std::vector<std::uint16_t> central;
  for (auto i : indices) {
    if (i >= ctx.size()) throw IndexError("variable index out of range");
    (ctx.is_central(i) ? central : m.key).push_back(i);
  }
  std::sort(central.begin(), central.end());
  m.key.insert(m.key.end(), central.begin(), central.end());
  return m;
}

Rational NcSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational NcSeries::constant_term() const { return coefficient(Monomial{}); }

NcSeries NcSeries::homogeneous_part(int degree) const {
  NcSeries out(ctx_, cap_);
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.degree()) == degree) out.terms_.emplace(m, c);
  }
  return out;
}

NcSeries NcSeries::truncated(int cap) const {
  NcSeries out(ctx_, cap);
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(m.degree()) <= cap) out.terms_.emplace(m, c);
  }
  return out;
}

void NcSeries::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.degree()) > cap_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NcSeries& NcSeries::operator+=(const NcSeries& other) {
  check_compatible(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

NcSeries& NcSeries::operator-=(const NcSeries& other) {
  check_compatible(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

NcSeries& NcSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::vector<std::string> NcSeries::monomial_names(const Monomial& m) const {
  std::vector<std::string> names;
  names.reserve(m.key.size());
  for (auto i : m.key) names.push_back(ctx_->name(i));
  return names;
}

std::string NcSeries::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.key.size();) {
    std::size_t j = i;
    while (j < m.key.size() && m.key[j] == m.key[i]) ++j;
    out += ctx_->name(m.key[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string NcSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.key.empty()) {
      out += rational_to_string(mag);
      continue;
    }
    if (mag != 1) {
      const std::string s = rational_to_string(mag);
      out += denominator(mag) == 1 ? s : "(" + s + ")";
    }
    out += monomial_to_string(m);
  }
  return out;
}

// --- arithmetic -----------------------------------------------------------

NcSeries series_add(const NcSeries& a, const NcSeries& b) {
  NcSeries out = a;
  out += b;
  return out;
}

NcSeries series_sub(const NcSeries& a, const NcSeries& b) {
  NcSeries out = a;
  out -= b;
  return out;
}

NcSeries series_mul(const NcSeries& a, const NcSeries& b) {
  check_compatible(a, b);
  const auto& ctx = a.context();
  const int cap = a.cap();
  NcSeries out(a.context_ptr(), cap);
  for (const auto& [ma, ca] : a.terms()) {
    const int room = cap - static_cast<int>(ma.degree());
    if (room < 0) break;
    for (const auto& [mb, cb] : b.terms()) {
      // terms are ordered by degree, so nothing later fits either
      if (static_cast<int>(mb.degree()) > room) break;
      out.add_term(merge(ctx, ma, mb), ca * cb);
    }
  }
  return out;
}

NcSeries series_inv(const NcSeries& s) {
  if (s.constant_term() != 1) {
    throw std::domain_error("series_inv needs constant term exactly 1");
  }
  NcSeries minus_higher = NcSeries::one(s.context_ptr(), s.cap()) - s;
  NcSeries out = NcSeries::one(s.context_ptr(), s.cap());
  NcSeries power = out;
  // minus_higher has no constant term, so its (cap+1)-th power vanishes.
  for (int k = 1; k <= s.cap(); ++k) {
    power = power * minus_higher;
    if (power.is_zero()) break;
    out += power;
  }
  return out;
}

NcSeries unit_power(std::shared_ptr<const VariableContext> ctx, int cap,
                    std::size_t index, long exponent) {
  if (index >= ctx->size()) throw IndexError("variable index out of range");
  NcSeries out(ctx, cap);
  Rational binom = 1;  // C(exponent, k)
  Monomial m;
  for (int k = 0; k <= cap; ++k) {
    if (binom == 0) break;
    out.add_term(m, binom);
    binom = binom * Rational(exponent - k) / Rational(k + 1);
    m.key.push_back(static_cast<std::uint16_t>(index));
  }
  return out;
}

int lowest_degree(const NcSeries& s) {
  if (s.is_zero()) return kInfiniteDegree;
  return static_cast<int>(s.terms().begin()->first.degree());
}

// --- Magnus ---------------------------------------------------------------

NcSeries magnus_free(const Word& w, int cap) {
  return magnus_free(w, cap, free_context(w.rank()));
}

NcSeries magnus_free(const Word& w, int cap, std::shared_ptr<const VariableContext> ctx) {
  check_cap(cap);
  if (static_cast<int>(ctx->noncommuting.size()) < w.rank()) {
    throw MismatchError("context has fewer noncommuting variables than the word's rank");
  }
  // x_i -> 1 + v,  x_i^{-1} -> sum_k (-v)^k
  auto letter_series = [&](Letter l) {
    const auto v = static_cast<std::uint16_t>(std::abs(l) - 1);
    NcSeries s(ctx, cap);
    Monomial m;
    for (int k = 0; k <= (l > 0 ? std::min(cap, 1) : cap); ++k) {
      s.add_term(m, (l < 0 && k % 2 == 1) ? -1 : 1);
      m.key.push_back(v);
    }
    return s;
  };
  NcSeries out = NcSeries::one(ctx, cap);
  for (Letter l : w.letters()) out = out * letter_series(l);
  return out;
}

NcSeries magnus_p3(const BraidWord& w, int cap) {
  check_cap(cap);
  const auto ctx = p3_context();
  const P3NormalForm nf = p3_normal_form(w);
  NcSeries out = magnus_free(nf.word, cap, ctx);
  out = out * unit_power(ctx, cap, 2, nf.delta_power);
  for (std::size_t i = 0; i < 3; ++i) {
    out = out * unit_power(ctx, cap, 3 + i, nf.framing[i]);
  }
  return out;
}

// --- group ring -----------------------------------------------------------

GroupRingExpr& GroupRingExpr::add(const Rational& c, GroupElement g) {
  terms.emplace_back(c, std::move(g));
  return *this;
}

GroupRingExpr& GroupRingExpr::add_identity(const Rational& c) {
  if (alphabet == Alphabet::kFree) return add(c, Word(free_rank));
  return add(c, BraidWord{});
}

GroupRingExpr& GroupRingExpr::add_obar(const Rational& c, const GroupElement& g) {
  add_identity(c);
  return add(-c, g);
}

std::string GroupRingExpr::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [c, g] = terms[k];
    const std::string word = std::holds_alternative<Word>(g)
                                 ? std::get<Word>(g).to_string()
                                 : lantern::to_string(std::get<BraidWord>(g));
    const bool negative = c < 0;
    if (k) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const Rational mag = negative ? Rational(-c) : c;
    if (mag != 1) out += rational_to_string(mag) + "*";
    out += mag != 1 && word != "1" ? "(" + word + ")" : word;
  }
  return out;
}

GroupRingExpr operator-(GroupRingExpr a, const GroupRingExpr& b) {
  if (a.alphabet != b.alphabet || a.free_rank != b.free_rank) {
    throw MismatchError("group ring expressions use different alphabets");
  }
  for (const auto& [c, g] : b.terms) a.add(-c, g);
  return a;
}

NcSeries magnus(const GroupElement& g, Alphabet alphabet, int free_rank, int cap) {
  if (alphabet == Alphabet::kFree) {
    const Word* w = std::get_if<Word>(&g);
    if (!w || w->rank() != free_rank) {
      throw MismatchError("group element is not a word of the declared free group");
    }
    return magnus_free(*w, cap, free_context(free_rank));
  }
  const BraidWord* b = std::get_if<BraidWord>(&g);
  if (!b) throw MismatchError("group element is not a framed P_3 word");
  return magnus_p3(*b, cap);
}

NcSeries obar(const GroupElement& g, Alphabet alphabet, int free_rank, int cap) {
  const NcSeries m = magnus(g, alphabet, free_rank, cap);
  return NcSeries::one(m.context_ptr(), cap) - m;
}

NcSeries obar(const Word& w, int cap) { return obar(w, Alphabet::kFree, w.rank(), cap); }

NcSeries obar(const BraidWord& w, int cap) { return obar(w, Alphabet::kFramedP3, 0, cap); }

NcSeries expand(const GroupRingExpr& e, int cap) {
  check_cap(cap);
  const auto ctx = e.alphabet == Alphabet::kFree ? free_context(e.free_rank) : p3_context();
  NcSeries out(ctx, cap);
  for (const auto& [c, g] : e.terms) {
    NcSeries t = magnus(g, e.alphabet, e.free_rank, cap);
    t *= c;
    out += t;
  }
  return out;
}

CongruenceReport check_congruence(const GroupRingExpr& lhs, const GroupRingExpr& rhs,
                                  int m, int diagnostic_cap) {
  if (m < 1) throw std::invalid_argument("congruence modulus power must be >= 1");
  if (lhs.alphabet != rhs.alphabet || lhs.free_rank != rhs.free_rank) {
    throw MismatchError("congruence sides use different alphabets");
  }
  CongruenceReport r;
  r.modulus_power = m;
  r.examined_cap = std::max(m, diagnostic_cap);
  r.difference = expand(lhs, r.examined_cap) - expand(rhs, r.examined_cap);
  r.lowest_discrepancy_degree = lowest_degree(r.difference);
  r.holds = r.lowest_discrepancy_degree == kInfiniteDegree ||
            r.lowest_discrepancy_degree >= m;
  return r;
}

// --- identities -----------------------------------------------------------

std::pair<GroupRingExpr, GroupRingExpr> obar_product_sides(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) throw MismatchError("words from different free groups");
  GroupRingExpr lhs = GroupRingExpr::free(a.rank());
  lhs.add_obar(1, a * b);
  GroupRingExpr rhs = GroupRingExpr::free(a.rank());
  rhs.add_obar(1, a).add_obar(1, b);
  return {lhs, rhs};
}

namespace {

BraidWord single(GeneratorKind kind, std::vector<int> strands) {
  return BraidWord{BraidLetter{BraidGenerator{kind, std::move(strands)}, 1}};
}

}  // namespace

std::pair<GroupRingExpr, GroupRingExpr> band_congruence_sides() {
  GroupRingExpr lhs = GroupRingExpr::p3();
  lhs.add_obar(1, single(GeneratorKind::kBandTwist, {1, 2, 3}));
  GroupRingExpr rhs = GroupRingExpr::p3();
  rhs.add_obar(1, single(GeneratorKind::kBandTwist, {1, 2}))
      .add_obar(1, single(GeneratorKind::kBandTwist, {1, 3}))
      .add_obar(1, single(GeneratorKind::kBandTwist, {2, 3}));
  for (int i = 1; i <= 3; ++i) rhs.add_obar(-1, single(GeneratorKind::kFrame, {i}));
  return {lhs, rhs};
}

InverseIdentityReport verify_lemma_inverse(int cap) {
  check_cap(cap);
  const auto ctx = free_context(2);
  const Word a = Word::generator(2, 1);
  const Word b = Word::generator(2, 2);
  const NcSeries one = NcSeries::one(ctx, cap);

  InverseIdentityReport r;
  r.cap = cap;
  r.lhs = one - obar(a * invert(b), cap);
  r.rhs = (one - obar(a, cap)) * series_inv(one - obar(b, cap));
  r.holds = r.lhs == r.rhs;
  return r;
}

CompletedIdentityReport verify_completed_identity(int n, int series_cap) {
  if (n < 3) throw std::invalid_argument("completed identity needs n >= 3");
  CompletedIdentityReport r;
  r.n = n;
  r.frame_twists_central = true;
  for (int i = 1; i <= n; ++i) {
    r.frame_twists_central = r.frame_twists_central && is_central(tau_frame(i, n));
  }
  r.lantern = verify_lantern(n, PairOrder::kLexicographic);
  r.group_route = r.frame_twists_central && r.lantern.holds;
  r.holds = r.group_route;

  if (n == 3) {
    r.series_cap = series_cap;
    const auto ctx = p3_context();
    const NcSeries one = NcSeries::one(ctx, series_cap);
    const NcSeries lhs = one - obar(single(GeneratorKind::kBandTwist, {1, 2, 3}), series_cap);
    NcSeries numerator = one;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        numerator = numerator * (one - obar(single(GeneratorKind::kBandTwist, {i, j}), series_cap));
      }
    }
    NcSeries denominator = one;
    for (int i = 1; i <= n; ++i) {
      const NcSeries unit = one - obar(single(GeneratorKind::kFrame, {i}), series_cap);
      for (int k = 0; k < n - 2; ++k) denominator = denominator * unit;
    }
    r.series_route = lhs == numerator * series_inv(denominator);
    r.holds = r.holds && *r.series_route;
  }
  return r;
}

}  // namespace lantern
