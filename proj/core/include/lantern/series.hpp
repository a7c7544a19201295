#ifndef LANTERN_SERIES_HPP
#define LANTERN_SERIES_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lantern/braid.hpp"
#include "lantern/free_group.hpp"

namespace lantern {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Ordered variable names: noncommuting ones first, then central ones.
struct VariableContext {
  std::vector<std::string> noncommuting;
  std::vector<std::string> central;

  std::size_t size() const { return noncommuting.size() + central.size(); }
  const std::string& name(std::size_t index) const;
  bool is_central(std::size_t index) const { return index >= noncommuting.size(); }

  friend bool operator==(const VariableContext&, const VariableContext&) = default;
};

// xi1..xik, all noncommuting.
std::shared_ptr<const VariableContext> free_context(int rank);
// alpha, beta noncommuting; gamma, theta1..theta3 central.
std::shared_ptr<const VariableContext> p3_context();

/// Canonical monomial key: noncommuting variable indices in product order,
/// followed by the central variable indices sorted ascending.
struct Monomial {
  std::vector<std::uint16_t> key;

  std::size_t degree() const { return key.size(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded, then lexicographic in the context's variable order.
struct GradedLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.key.size() != b.key.size()) return a.key.size() < b.key.size();
    return a.key < b.key;
  }
};

/// Truncated power series over Q in noncommuting and central variables.
///
/// Terms of total degree above the cap are dropped on every operation and
/// zero coefficients are never stored.
class NcSeries {
 public:
  using Terms = std::map<Monomial, Rational, GradedLess>;

  NcSeries();  // zero series over an empty context, cap 0
  NcSeries(std::shared_ptr<const VariableContext> ctx, int cap);

  static NcSeries constant(std::shared_ptr<const VariableContext> ctx, int cap,
                           const Rational& c);
  static NcSeries one(std::shared_ptr<const VariableContext> ctx, int cap) {
    return constant(std::move(ctx), cap, 1);
  }
  static NcSeries variable(std::shared_ptr<const VariableContext> ctx, int cap,
                           std::size_t index);
  // Builds a monomial from variable indices in any order; central
  // indices are moved to the canonical position.
  static Monomial monomial(const VariableContext& ctx,
                           const std::vector<std::uint16_t>& indices);

  const VariableContext& context() const { return *ctx_; }
  const std::shared_ptr<const VariableContext>& context_ptr() const { return ctx_; }
  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  NcSeries homogeneous_part(int degree) const;
  NcSeries truncated(int cap) const;

  void add_term(const Monomial& m, const Rational& c);

  NcSeries& operator+=(const NcSeries& other);
  NcSeries& operator-=(const NcSeries& other);
  NcSeries& operator*=(const Rational& c);

  // Human-readable, e.g. "1 + ξ1 + ξ2 + ξ1ξ2".
  std::string to_string() const;
  std::string monomial_to_string(const Monomial& m) const;
  std::vector<std::string> monomial_names(const Monomial& m) const;

  friend bool operator==(const NcSeries& a, const NcSeries& b) {
    return a.cap_ == b.cap_ && *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  std::shared_ptr<const VariableContext> ctx_;
  int cap_;
  Terms terms_;
};

NcSeries series_add(const NcSeries& a, const NcSeries& b);
NcSeries series_sub(const NcSeries& a, const NcSeries& b);
NcSeries series_mul(const NcSeries& a, const NcSeries& b);
/// Inverse of a series with constant term exactly 1, via the geometric
/// series of its higher part. Throws std::domain_error otherwise.
NcSeries series_inv(const NcSeries& s);
/// (1 + y)^e for a single variable y and any integer e, by the binomial series.
NcSeries unit_power(std::shared_ptr<const VariableContext> ctx, int cap,
                    std::size_t index, long exponent);

inline NcSeries operator+(const NcSeries& a, const NcSeries& b) { return series_add(a, b); }
inline NcSeries operator-(const NcSeries& a, const NcSeries& b) { return series_sub(a, b); }
inline NcSeries operator*(const NcSeries& a, const NcSeries& b) { return series_mul(a, b); }

inline constexpr int kInfiniteDegree = -1;
/// Smallest total degree carrying a nonzero term; kInfiniteDegree for zero.
int lowest_degree(const NcSeries& s);

// --- Magnus expansions ----------------------------------------------------

/// x_i -> 1 + xi_i. Uses free_context(rank) unless a context with at least
/// rank noncommuting variables is supplied.
NcSeries magnus_free(const Word& w, int cap);
NcSeries magnus_free(const Word& w, int cap, std::shared_ptr<const VariableContext> ctx);

/// Framed P_3 expansion through the normal form:
/// a -> 1+alpha, b -> 1+beta, Delta^2 -> 1+gamma, t_i -> 1+theta_i.
NcSeries magnus_p3(const BraidWord& w, int cap);

// --- group ring expressions -----------------------------------------------

enum class Alphabet { kFree, kFramedP3 };

using GroupElement = std::variant<Word, BraidWord>;

/// Finite Q-linear combination of group elements.
struct GroupRingExpr {
  Alphabet alphabet = Alphabet::kFree;
  int free_rank = 0;
  std::vector<std::pair<Rational, GroupElement>> terms;

  static GroupRingExpr free(int rank) { return {Alphabet::kFree, rank, {}}; }
  static GroupRingExpr p3() { return {Alphabet::kFramedP3, 0, {}}; }

  GroupRingExpr& add(const Rational& c, GroupElement g);
  // Appends c * (1 - g).
  GroupRingExpr& add_obar(const Rational& c, const GroupElement& g);
  GroupRingExpr& add_identity(const Rational& c);

  std::string to_string() const;
};

GroupRingExpr operator-(GroupRingExpr a, const GroupRingExpr& b);

NcSeries magnus(const GroupElement& g, Alphabet alphabet, int free_rank, int cap);
/// 1 - magnus(g); constant term always zero.
NcSeries obar(const GroupElement& g, Alphabet alphabet, int free_rank, int cap);
NcSeries obar(const Word& w, int cap);
NcSeries obar(const BraidWord& w, int cap);
NcSeries expand(const GroupRingExpr& e, int cap);

struct CongruenceReport {
  bool holds = false;
  int modulus_power = 0;
  int examined_cap = 0;
  // Lowest degree of lhs - rhs within examined_cap; kInfiniteDegree if zero.
  int lowest_discrepancy_degree = kInfiniteDegree;
  NcSeries difference;
};

/// Decides lhs == rhs mod I^m at the completion level: holds iff every
/// term of degree < m in the Magnus expansion of lhs - rhs vanishes.
/// The difference is examined up to max(m, diagnostic_cap).
CongruenceReport check_congruence(const GroupRingExpr& lhs, const GroupRingExpr& rhs,
                                  int m, int diagnostic_cap = 0);

// --- identities -----------------------------------------------------------

/// obar(ab) vs obar(a) + obar(b).
std::pair<GroupRingExpr, GroupRingExpr> obar_product_sides(const Word& a, const Word& b);
/// obar(T123) vs sum obar(tau_ij) - sum obar(tau_i) in framed P_3.
std::pair<GroupRingExpr, GroupRingExpr> band_congruence_sides();

struct InverseIdentityReport {
  int cap = 0;
  bool holds = false;
  NcSeries lhs;  // 1 - obar(a b^-1)
  NcSeries rhs;  // (1 - obar a)(1 - obar b)^-1
};

InverseIdentityReport verify_lemma_inverse(int cap);

struct CompletedIdentityReport {
  int n = 0;
  bool frame_twists_central = false;
  bool group_route = false;
  LanternReport lantern;
  std::optional<bool> series_route;  // n = 3 only
  int series_cap = 0;
  bool holds = false;
};

/// Reduces 1 - obar tau_{12..n} = prod(1 - obar tau_ij) / prod(1 - obar tau_i)^{n-2}
/// to the group identity; for n = 3 also compares both sides as series.
CompletedIdentityReport verify_completed_identity(int n, int series_cap = 4);

std::string rational_to_string(const Rational& r);

}  // namespace lantern

#endif  // LANTERN_SERIES_HPP
