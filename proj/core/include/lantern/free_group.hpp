#ifndef LANTERN_FREE_GROUP_HPP
#define LANTERN_FREE_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lantern {

inline constexpr std::size_t kDefaultMaxWordLength = 1'000'000;

// A letter is a nonzero signed generator index: +i is x_i, -i is x_i^{-1}.
// Indices are 1-based.
using Letter = std::int32_t;

/// Freely reduced word in the free group of a fixed rank.
///
/// Words are reduced at all times, so two words are equal as group
/// elements iff their letter sequences are equal.
class Word {
 public:
  explicit Word(int rank = 0);

  /// Freely reduces a raw letter sequence. Throws IndexError when a letter
  /// is zero or exceeds the rank.
  static Word reduce(int rank, std::span<const Letter> raw,
                     std::size_t max_length = kDefaultMaxWordLength);
  static Word generator(int rank, int index, int sign = +1);

  int rank() const noexcept { return rank_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Prints in the CLI word grammar, e.g. "x[1]*x[2]^-1". The identity
  // prints as "1".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  int rank_;
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v,
              std::size_t max_length = kDefaultMaxWordLength);
Word invert(const Word& w);
Word power(const Word& w, long exponent,
           std::size_t max_length = kDefaultMaxWordLength);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

// Returns c such that w == c * x_index^sign * c^{-1}, if one exists.
std::optional<Word> conjugator_to_generator(const Word& w, int index);

/// Automorphism of F_k given by the images of the generators.
///
/// A FreeAut built from bare images is unverified: it is a homomorphism
/// whose invertibility is unknown. Values produced by `with_inverse`,
/// `identity`, `compose` and `inverse` carry their inverse's images and are
/// verified.
class FreeAut {
 public:
  static FreeAut identity(int rank);
  static FreeAut from_images(std::vector<Word> images);
  // Throws std::invalid_argument unless both compositions fix every
  // generator.
  static FreeAut with_inverse(std::vector<Word> images,
                              std::vector<Word> inverse_images);

  int rank() const noexcept { return rank_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(int index) const;  // 1-based
  bool verified() const noexcept { return inverse_images_.has_value(); }

  // Equality of reduced generator images.
  friend bool operator==(const FreeAut& a, const FreeAut& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }

 private:
  FreeAut(int rank, std::vector<Word> images,
          std::optional<std::vector<Word>> inverse_images);

  friend FreeAut compose(const FreeAut&, const FreeAut&, std::size_t);
  friend FreeAut inverse(const FreeAut&);

  int rank_;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_images_;
};

/// Substitutes generator images into w and reduces.
Word apply(const FreeAut& f, const Word& w,
           std::size_t max_length = kDefaultMaxWordLength);

/// Left-to-right composition: f first, then g. The image of x_i is
/// apply(g, f.image(i)).
FreeAut compose(const FreeAut& f, const FreeAut& g,
                std::size_t max_length = kDefaultMaxWordLength);

/// Throws std::logic_error for an unverified automorphism.
FreeAut inverse(const FreeAut& f);

}  // namespace lantern

#endif  // LANTERN_FREE_GROUP_HPP
