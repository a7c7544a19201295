#ifndef LANTERN_BRAID_HPP
#define LANTERN_BRAID_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lantern/free_group.hpp"

namespace lantern {

// Artin convention (the one shipped):
//   sigma_k : x_k -> x_k x_{k+1} x_k^{-1},  x_{k+1} -> x_k,  others fixed.
// Braids are multiplied left to right, and the automorphism of a product
// b1*b2 is compose(aut(b1), aut(b2)), i.e. b1's substitution first.
FreeAut sigma(int k, int n);
FreeAut sigma_inverse(int k, int n);

/// Framed pure braid: an Artin automorphism of F_n together with an integer
/// framing per strand.
///
/// Construction checks both pure-braid certificates: the automorphism fixes
/// x_1 x_2 ... x_n, and sends every x_i to a conjugate of x_i.
class FramedBraid {
 public:
  static FramedBraid make(FreeAut aut, std::vector<long> framing);
  static FramedBraid identity(int n);

  int strands() const noexcept { return aut_.rank(); }
  const FreeAut& aut() const noexcept { return aut_; }
  const std::vector<long>& framing() const noexcept { return framing_; }

 private:
  FramedBraid(FreeAut aut, std::vector<long> framing)
      : aut_(std::move(aut)), framing_(std::move(framing)) {}

  friend FramedBraid braid_mul(const FramedBraid&, const FramedBraid&);
  friend FramedBraid braid_inverse(const FramedBraid&);

  FreeAut aut_;
  std::vector<long> framing_;
};

// Certificate checks, exposed for tests.
bool fixes_boundary_word(const FreeAut& f);
bool sends_generators_to_conjugates(const FreeAut& f);

/// Unframed pure braid generator A_ij = (s_{j-1}..s_{i+1}) s_i^2 (s_{i+1}^-1..s_{j-1}^-1).
FramedBraid pure_twist(int i, int j, int n);
/// Band twist around strands i and j: A_ij with framing e_i + e_j.
FramedBraid tau_pair(int i, int j, int n);
/// Right-handed framing twist of strand i.
FramedBraid tau_frame(int i, int n);
/// Twist of the band containing every strand. Only S = {1..n} is supported.
FramedBraid tau_band(std::span<const int> strands, int n);
/// Full twist (s_1 s_2 ... s_{n-1})^n without framing.
FramedBraid full_twist(int n);

FramedBraid braid_mul(const FramedBraid& a, const FramedBraid& b);
FramedBraid braid_inverse(const FramedBraid& b);
FramedBraid braid_power(const FramedBraid& b, long exponent);

/// Equal strand count, identical reduced generator images, equal framings.
bool braid_eq(const FramedBraid& a, const FramedBraid& b);

// Generators of the framed pure braid group: tau_1..tau_n, then tau_ij in
// lexicographic order.
std::vector<FramedBraid> framed_generators(int n);

bool is_central(const FramedBraid& b);

// --- braid words -----------------------------------------------------------

enum class GeneratorKind {
  kFrame,      // t[i]
  kBandTwist,  // T[i,j,...]: pair twist for two strands, full band otherwise
  kPureTwist,  // A[i,j]
  kArtin,      // s[i]
};

struct BraidGenerator {
  GeneratorKind kind;
  std::vector<int> strands;

  std::string to_string() const;
  friend bool operator==(const BraidGenerator&, const BraidGenerator&) = default;
};

struct BraidLetter {
  BraidGenerator generator;
  long exponent = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

using BraidWord = std::vector<BraidLetter>;

std::string to_string(const BraidWord& w);

/// Automorphism of a braid word; Artin letters allowed.
FreeAut braid_word_aut(const BraidWord& w, int n);
/// Framing vector of a braid word. Throws UnsupportedError on Artin letters.
std::vector<long> braid_word_framing(const BraidWord& w, int n);
/// Evaluates to a framed pure braid; throws UnsupportedError if the word
/// contains Artin letters whose product is not pure.
FramedBraid evaluate(const BraidWord& w, int n);
FramedBraid evaluate(const BraidGenerator& g, int n);

// --- lantern --------------------------------------------------------------

enum class PairOrder { kLexicographic, kReverseLexicographic };

std::string to_string(PairOrder order);

struct LanternReport {
  int n = 0;
  PairOrder order = PairOrder::kLexicographic;
  bool holds = false;
  bool automorphisms_equal = false;
  std::vector<long> framing_lhs;
  std::vector<long> framing_rhs;
  // Smallest generator index whose images differ between the two sides.
  std::optional<int> lowest_discrepancy;
  std::size_t lhs_image_length = 0;
};

/// LHS = tau_{12..n} * prod_i tau_i^{n-2},  RHS = prod_{i<j} tau_ij in `order`.
LanternReport verify_lantern(int n, PairOrder order = PairOrder::kLexicographic);

// --- framed P_3 normal form -----------------------------------------------
//
// Framed P_3 = F(a, b) x <Delta^2> x Z^3 with a = A_12, b = A_13, using
// A_23 = A_13^{-1} A_12^{-1} Delta^2.

struct P3NormalForm {
  Word word{2};  // x[1] = a = A_12, x[2] = b = A_13
  long delta_power = 0;
  std::array<long, 3> framing{};

  friend bool operator==(const P3NormalForm&, const P3NormalForm&) = default;
};

/// Rewrites a word in t/T/A letters on three strands. Throws
/// UnsupportedError for letters outside that alphabet, and std::logic_error
/// if re-expansion through the Artin action does not reproduce the input.
P3NormalForm p3_normal_form(const BraidWord& w);
FramedBraid expand(const P3NormalForm& nf);

}  // namespace lantern

#endif  // LANTERN_BRAID_HPP
