#include "lantern/free_group.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "lantern/errors.hpp"

namespace lantern {

namespace {

void check_letter(int rank, Letter l) {
  if (l == 0 || std::abs(l) > rank) {
    throw IndexError("generator index " + std::to_string(std::abs(l)) +
                     " outside 1.." + std::to_string(rank));
  }
}

void check_rank(int a, int b, const char* what) {
  if (a != b) {
    throw MismatchError(std::string(what) + ": rank " + std::to_string(a) +
                        " vs " + std::to_string(b));
  }
}

// Appends a letter to an already reduced buffer, cancelling if possible.
void push_reduced(std::vector<Letter>& buf, Letter l, std::size_t max_length) {
  if (!buf.empty() && buf.back() == -l) {
    buf.pop_back();
    return;
  }
  if (buf.size() >= max_length) {
    throw WordLengthError("word length exceeds cap of " +
                          std::to_string(max_length) + " letters");
  }
  buf.push_back(l);
}

}  // namespace

Word::Word(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
}

Word Word::reduce(int rank, std::span<const Letter> raw,
                  std::size_t max_length) {
  Word w(rank);
  w.letters_.reserve(raw.size());
  for (Letter l : raw) {
    check_letter(rank, l);
    push_reduced(w.letters_, l, max_length);
  }
  return w;
}

Word Word::generator(int rank, int index, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  const Letter l = sign * index;
  return reduce(rank, std::span<const Letter>(&l, 1));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '*';
    out += "x[" + std::to_string(std::abs(letters_[i])) + "]";
    if (letters_[i] < 0) out += "^-1";
  }
  return out;
}

Word multiply(const Word& u, const Word& v, std::size_t max_length) {
  check_rank(u.rank(), v.rank(), "multiply");
  std::vector<Letter> buf(u.letters().begin(), u.letters().end());
  for (Letter l : v.letters()) push_reduced(buf, l, max_length);
  // buf is reduced already; reduce() only re-validates.
  return Word::reduce(u.rank(), buf, max_length);
}

Word invert(const Word& w) {
  std::vector<Letter> buf(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : buf) l = -l;
  return Word::reduce(w.rank(), buf);
}

Word power(const Word& w, long exponent, std::size_t max_length) {
  const Word base = exponent < 0 ? invert(w) : w;
  Word out(w.rank());
  for (long i = 0; i < std::labs(exponent); ++i) {
    out = multiply(out, base, max_length);
  }
  return out;
}

std::optional<Word> conjugator_to_generator(const Word& w, int index) {
  const auto ls = w.letters();
  if (ls.size() % 2 == 0) return std::nullopt;
  const std::size_t mid = ls.size() / 2;
  if (ls[mid] != index) return std::nullopt;
  for (std::size_t j = 0; j < mid; ++j) {
    if (ls[mid - 1 - j] != -ls[mid + 1 + j]) return std::nullopt;
  }
  return Word::reduce(w.rank(), ls.first(mid));
}

// --- FreeAut -------------------------------------------------------------

FreeAut::FreeAut(int rank, std::vector<Word> images,
                 std::optional<std::vector<Word>> inverse_images)
    : rank_(rank),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
  if (static_cast<int>(images_.size()) != rank_) {
    throw MismatchError("automorphism needs exactly one image per generator");
  }
  for (const Word& w : images_) check_rank(rank_, w.rank(), "FreeAut image");
}

FreeAut FreeAut::identity(int rank) {
  std::vector<Word> gens;
  gens.reserve(rank);
  for (int i = 1; i <= rank; ++i) gens.push_back(Word::generator(rank, i));
  return FreeAut(rank, gens, gens);
}

FreeAut FreeAut::from_images(std::vector<Word> images) {
  const int rank = static_cast<int>(images.size());
  return FreeAut(rank, std::move(images), std::nullopt);
}

FreeAut FreeAut::with_inverse(std::vector<Word> images,
                              std::vector<Word> inverse_images) {
  const int rank = static_cast<int>(images.size());
  FreeAut f(rank, std::move(images), std::nullopt);
  FreeAut g(rank, std::move(inverse_images), std::nullopt);
  const FreeAut id = identity(rank);
  if (!(compose(f, g) == id) || !(compose(g, f) == id)) {
    throw std::invalid_argument("images and inverse images are not mutually inverse");
  }
  f.inverse_images_ = g.images_;
  return f;
}

const Word& FreeAut::image(int index) const {
  if (index < 1 || index > rank_) {
    throw IndexError("generator index " + std::to_string(index) +
                     " outside 1.." + std::to_string(rank_));
  }
  return images_[index - 1];
}

Word apply(const FreeAut& f, const Word& w, std::size_t max_length) {
  check_rank(f.rank(), w.rank(), "apply");
  std::vector<Letter> buf;
  for (Letter l : w.letters()) {
    const auto img = f.images()[std::abs(l) - 1].letters();
    if (l > 0) {
      for (Letter m : img) push_reduced(buf, m, max_length);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) {
        push_reduced(buf, -*it, max_length);
      }
    }
  }
  return Word::reduce(w.rank(), buf, max_length);
}

FreeAut compose(const FreeAut& f, const FreeAut& g, std::size_t max_length) {
  check_rank(f.rank(), g.rank(), "compose");
  std::vector<Word> images;
  images.reserve(f.rank());
  for (const Word& w : f.images()) images.push_back(apply(g, w, max_length));

  std::optional<std::vector<Word>> inv;
  if (f.inverse_images_ && g.inverse_images_) {
    // (f then g)^{-1} = g^{-1} then f^{-1}
    const FreeAut f_inv(f.rank(), *f.inverse_images_, std::nullopt);
    std::vector<Word> v;
    v.reserve(f.rank());
    for (const Word& w : *g.inverse_images_) v.push_back(apply(f_inv, w, max_length));
    inv = std::move(v);
  }
  return FreeAut(f.rank(), std::move(images), std::move(inv));
}

FreeAut inverse(const FreeAut& f) {
  if (!f.inverse_images_) {
    throw std::logic_error("inverse of an unverified automorphism is unknown");
  }
  return FreeAut(f.rank(), *f.inverse_images_, f.images_);
}

}  // namespace lantern
