#include "lantern/invariant_theory.hpp"

#include <numeric>
#include <stdexcept>

#include "lantern/errors.hpp"

namespace lantern {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

void check_genus(int g, int min) {
  if (g < min) {
    throw std::invalid_argument("genus must be >= " + std::to_string(min));
  }
}

}  // namespace

LaurentPoly::LaurentPoly(int variables) : variables_(variables) {
  if (variables < 0) throw std::invalid_argument("negative variable count");
}

LaurentPoly LaurentPoly::constant(int variables, std::int64_t c) {
  return monomial(variables, Exponent(variables, 0), c);
}

LaurentPoly LaurentPoly::monomial(int variables, Exponent e, std::int64_t c) {
  LaurentPoly p(variables);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int variables, int index, int power) {
  if (index < 1 || index > variables) throw IndexError("variable index out of range");
  Exponent e(variables, 0);
  e[index - 1] = static_cast<std::int16_t>(power);
  return monomial(variables, std::move(e));
}

void LaurentPoly::add_term(const Exponent& e, std::int64_t c) {
  if (static_cast<int>(e.size()) != variables_) {
    throw MismatchError("exponent vector length differs from variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::constant_term() const {
  return coefficient(Exponent(variables_, 0));
}

std::int64_t LaurentPoly::value_at_ones() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != variables_) {
    throw MismatchError("permutation length differs from variable count");
  }
  LaurentPoly out(variables_);
  for (const auto& [e, c] : terms_) {
    Exponent f(variables_);
    for (int i = 0; i < variables_; ++i) f[i] = e.at(perm[i]);
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.variables_ != variables_) throw MismatchError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < variables_; ++i) {
      if (e[i] == 0) continue;
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const std::int64_t mag = c < 0 ? -c : c;
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
  a += b;
  return a;
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b, std::uint64_t term_cap) {
  if (a.variables() != b.variables()) throw MismatchError("variable count mismatch");
  const std::uint64_t work = static_cast<std::uint64_t>(a.size()) * b.size();
  if (work > term_cap) {
    throw ResourceCapExceeded("product would generate " + std::to_string(work) +
                              " intermediate monomials (cap " + std::to_string(term_cap) + ")");
  }
  const int n = a.variables();
  LaurentPoly out(n);
  LaurentPoly::Exponent e(n);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (int i = 0; i < n; ++i) e[i] = static_cast<std::int16_t>(ea[i] + eb[i]);
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

LaurentPoly power(const LaurentPoly& f, int exponent, std::uint64_t term_cap) {
  if (exponent < 0) throw std::invalid_argument("negative power of a character");
  LaurentPoly out = LaurentPoly::constant(f.variables(), 1);
  for (int k = 0; k < exponent; ++k) out = multiply(out, f, term_cap);
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

LaurentPoly char_H(int g) {
  check_genus(g, 1);
  LaurentPoly out(g);
  for (int i = 1; i <= g; ++i) {
    out += LaurentPoly::variable(g, i, 1);
    out += LaurentPoly::variable(g, i, -1);
  }
  return out;
}

LaurentPoly char_lambda3H(int g) {
  check_genus(g, 1);
  // weights of H: +e_i for L, -e_i for L*
  std::vector<std::pair<int, int>> weights;
  for (int i = 0; i < g; ++i) weights.emplace_back(i, +1);
  for (int i = 0; i < g; ++i) weights.emplace_back(i, -1);
  LaurentPoly out(g);
  LaurentPoly::Exponent e(g);
  const std::size_t w = weights.size();
  for (std::size_t a = 0; a < w; ++a) {
    for (std::size_t b = a + 1; b < w; ++b) {
      for (std::size_t c = b + 1; c < w; ++c) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t k : {a, b, c}) e[weights[k].first] += weights[k].second;
        out.add_term(e, 1);
      }
    }
  }
  return out;
}

namespace {

// e_0..e_k of the given monomials, by the recurrence E_j += v * E_{j-1}.
std::vector<LaurentPoly> elementary(const std::vector<LaurentPoly>& values, int k, int g) {
  std::vector<LaurentPoly> e(k + 1, LaurentPoly(g));
  e[0] = LaurentPoly::constant(g, 1);
  for (const LaurentPoly& v : values) {
    for (int j = k; j >= 1; --j) e[j] += multiply(v, e[j - 1]);
  }
  return e;
}

}  // namespace

Lambda3Components lambda3_components(int g) {
  check_genus(g, 1);
  std::vector<LaurentPoly> l;
  std::vector<LaurentPoly> l_dual;
  for (int i = 1; i <= g; ++i) {
    l.push_back(LaurentPoly::variable(g, i, 1));
    l_dual.push_back(LaurentPoly::variable(g, i, -1));
  }
  const auto e = elementary(l, 3, g);
  const auto f = elementary(l_dual, 3, g);
  return {e[3], multiply(e[2], f[1]), multiply(f[2], e[1]), f[3]};
}

std::int64_t dim_U(int g) {
  check_genus(g, 2);
  return binomial(2 * g, 3) - 2 * g;
}

bool decomposition_check(int g) {
  check_genus(g, 1);
  const bool counts = binomial(2 * g, 3) ==
                      2 * binomial(g, 3) + 2 * g * binomial(g, 2);
  const Lambda3Components parts = lambda3_components(g);
  const LaurentPoly sum = parts.lambda3_L + parts.lambda2_L_dual_L +
                          parts.lambda2_dual_L_L + parts.lambda3_dual_L;
  const LaurentPoly whole = char_lambda3H(g);
  return counts && sum == whole && whole.value_at_ones() == binomial(2 * g, 3);
}

std::int64_t torus_invariant_dim(const LaurentPoly& f) { return f.constant_term(); }

namespace {

LaurentPoly weyl_density(int g, std::uint64_t term_cap) {
  LaurentPoly w = LaurentPoly::constant(g, 1);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      if (i == j) continue;
      LaurentPoly::Exponent e(g, 0);
      e[i] = 1;
      e[j] = -1;
      LaurentPoly factor = LaurentPoly::constant(g, 1);
      factor.add_term(e, -1);
      w = multiply(w, factor, term_cap);
    }
  }
  return w;
}

}  // namespace

std::int64_t gl_invariant_dim(const LaurentPoly& f, int g, std::uint64_t term_cap) {
  check_genus(g, 1);
  if (f.variables() != g) throw MismatchError("character has wrong number of variables");
  const LaurentPoly w = weyl_density(g, term_cap);
  // CT(f * w) = sum_e f[e] * w[-e]
  std::int64_t ct = 0;
  LaurentPoly::Exponent neg(g);
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < g; ++i) neg[i] = static_cast<std::int16_t>(-e[i]);
    ct = checked_add(ct, checked_mul(c, w.coefficient(neg)));
  }
  std::int64_t order = 1;
  for (int i = 2; i <= g; ++i) order *= i;
  if (ct % order != 0) {
    throw std::domain_error("Weyl constant term " + std::to_string(ct) +
                            " not divisible by " + std::to_string(g) + "!");
  }
  return ct / order;
}

std::int64_t lambda3_power_invariants(int g, int m, InvariantGroup group,
                                      std::uint64_t term_cap) {
  check_genus(g, 1);
  if (m < 0) throw std::invalid_argument("power must be >= 0");
  const LaurentPoly f = power(char_lambda3H(g), m, term_cap);
  return group == InvariantGroup::kTorus ? torus_invariant_dim(f)
                                         : gl_invariant_dim(f, g, term_cap);
}

std::vector<InvariantCell> parity_table(int g_max, int m_max, std::uint64_t term_cap) {
  std::vector<InvariantCell> cells;
  for (int g = 1; g <= g_max; ++g) {
    const LaurentPoly base = char_lambda3H(g);
    LaurentPoly f = LaurentPoly::constant(g, 1);
    for (int m = 0; m <= m_max; ++m) {
      if (m > 0) f = multiply(f, base, term_cap);
      cells.push_back({g, m, torus_invariant_dim(f)});
    }
  }
  return cells;
}

StabilityReport stability_probe(int m, int g_min, int g_max, std::uint64_t term_cap) {
  check_genus(g_min, 1);
  if (g_max < g_min) throw std::invalid_argument("empty genus range");
  StabilityReport r;
  r.power = m;
  for (int g = g_min; g <= g_max; ++g) {
    r.rows.push_back({g, m, lambda3_power_invariants(g, m, InvariantGroup::kGL, term_cap)});
  }
  r.stabilized = r.rows.size() >= 2 &&
                 r.rows[r.rows.size() - 1].dimension == r.rows[r.rows.size() - 2].dimension;
  return r;
}

}  // namespace lantern
