#ifndef LANTERN_INVARIANT_THEORY_HPP
#define LANTERN_INVARIANT_THEORY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lantern {

inline constexpr std::uint64_t kDefaultTermCap = 10'000'000;

/// Multivariate Laurent polynomial with exact integer coefficients.
///
/// Used as the character of a GL_g-representation: a monomial
/// x^e stands for a torus weight e.
class LaurentPoly {
 public:
  using Exponent = std::vector<std::int16_t>;
  using Terms = std::map<Exponent, std::int64_t>;

  explicit LaurentPoly(int variables = 0);

  static LaurentPoly constant(int variables, std::int64_t c);
  static LaurentPoly monomial(int variables, Exponent e, std::int64_t c = 1);
  // x_index^power, index 1-based.
  static LaurentPoly variable(int variables, int index, int power = 1);

  int variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponent& e, std::int64_t c);
  std::int64_t coefficient(const Exponent& e) const;
  std::int64_t constant_term() const;
  // Sum of coefficients: the dimension of the represented module.
  std::int64_t value_at_ones() const;
  // Reorders variables: variable i of the result is variable perm[i] here.
  LaurentPoly permuted(const std::vector<int>& perm) const;

  LaurentPoly& operator+=(const LaurentPoly& other);

  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  int variables_;
  Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
/// Throws ResourceCapExceeded when |a| * |b| exceeds term_cap.
LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b,
                     std::uint64_t term_cap = kDefaultTermCap);
LaurentPoly power(const LaurentPoly& f, int exponent,
                  std::uint64_t term_cap = kDefaultTermCap);

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// x_1 + ... + x_g + x_1^{-1} + ... + x_g^{-1}.
LaurentPoly char_H(int g);
/// Third elementary symmetric function of the 2g weights of H.
LaurentPoly char_lambda3H(int g);
/// Characters of the four GL(L) summands of Lambda^3 H.
struct Lambda3Components {
  LaurentPoly lambda3_L;
  LaurentPoly lambda2_L_dual_L;   // Lambda^2 L (x) L*
  LaurentPoly lambda2_dual_L_L;   // Lambda^2 L* (x) L
  LaurentPoly lambda3_dual_L;
};
Lambda3Components lambda3_components(int g);

/// dim Lambda^3 H / H = C(2g,3) - 2g, for g >= 2.
std::int64_t dim_U(int g);

/// Checks C(2g,3) = 2 C(g,3) + 2 g C(g,2) and the matching character
/// identity.
bool decomposition_check(int g);

/// Constant term: dimension of the torus-invariant subspace.
std::int64_t torus_invariant_dim(const LaurentPoly& f);

/// GL_g-invariant dimension by the constant-term Weyl integration formula:
/// CT[f * prod_{i != j} (1 - x_i / x_j)] / g!. Throws std::domain_error if
/// the constant term is not divisible by g!.
std::int64_t gl_invariant_dim(const LaurentPoly& f, int g,
                              std::uint64_t term_cap = kDefaultTermCap);

struct InvariantCell {
  int genus = 0;
  int power = 0;
  std::int64_t dimension = 0;
};

/// torus_invariant_dim(char_lambda3H(g)^m) for 1 <= g <= g_max, 0 <= m <= m_max.
std::vector<InvariantCell> parity_table(int g_max, int m_max,
                                        std::uint64_t term_cap = kDefaultTermCap);

struct StabilityReport {
  int power = 0;
  std::vector<InvariantCell> rows;
  // The two largest genera gave the same dimension.
  bool stabilized = false;
};

/// gl_invariant_dim(char_lambda3H(g)^m, g) for g_min <= g <= g_max.
StabilityReport stability_probe(int m, int g_min, int g_max,
                                std::uint64_t term_cap = kDefaultTermCap);

enum class InvariantGroup { kTorus, kGL };

/// One cell: invariants of (Lambda^3 H)^{(x) m} at genus g.
std::int64_t lambda3_power_invariants(int g, int m, InvariantGroup group,
                                      std::uint64_t term_cap = kDefaultTermCap);

}  // namespace lantern

#endif  // LANTERN_INVARIANT_THEORY_HPP
