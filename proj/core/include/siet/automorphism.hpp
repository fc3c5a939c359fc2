#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "siet/words.hpp"

namespace siet {

// Finite endomorphism of the free group, given by one reduced image per
// positive letter. Inverse letters map to the inverted images.
class Endomorphism {
 public:
  Endomorphism() = default;
  Endomorphism(Alphabet alphabet, std::vector<ReducedWord> images);

  static Endomorphism identity(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  const ReducedWord& image(int index) const { return images_.at(index); }
  ReducedWord image_of(Letter l) const;

  ReducedWord apply(const ReducedWord& w) const;
  // (*this ∘ inner)(x) = apply(*this, inner(x))
  Endomorphism after(const Endomorphism& inner) const;
  Endomorphism power(int k) const;

  bool positive() const;
  bool is_identity() const;
  long long total_image_length() const;
  std::size_t max_image_length() const;
  std::size_t min_image_length() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  Alphabet alphabet_;
  std::vector<ReducedWord> images_;
};

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

// i_w with i_w(v) = w^-1 v w.
Endomorphism conjugacy(const Alphabet& alphabet, const ReducedWord& w);

// Elementary Dehn twist: target -> target·other (append) or other·target
// (prepend); every other letter fixed.
struct ElementaryTwist {
  enum class Placement { Append, Prepend };
  int target = 0;
  int other = 0;
  Placement placement = Placement::Append;

  Endomorphism as_endomorphism(const Alphabet& alphabet) const;
  Endomorphism inverse_endomorphism(const Alphabet& alphabet) const;
  std::string describe(const Alphabet& alphabet) const;  // e.g. "b->bd"

  friend bool operator==(const ElementaryTwist&,
                         const ElementaryTwist&) = default;
};

// Nonnegative letter-count matrix: entry(a, b) = occurrences of the positive
// letter a in image(b). Arithmetic is overflow-checked.
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  explicit IncidenceMatrix(int n);

  int size() const { return n_; }
  std::uint64_t& entry(int row, int col) { return data_[row * n_ + col]; }
  std::uint64_t entry(int row, int col) const { return data_[row * n_ + col]; }

  IncidenceMatrix multiply(const IncidenceMatrix& rhs) const;
  static IncidenceMatrix identity(int n);
  bool strictly_positive() const;
  // Strict positivity of some power up to the Wielandt bound n^2-2n+2.
  bool primitive() const;
  // Determinant via fraction-free elimination in 128-bit arithmetic.
  long long determinant() const;

  friend bool operator==(const IncidenceMatrix&,
                         const IncidenceMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> data_;
};

IncidenceMatrix incidence_matrix(const Endomorphism& e);

struct ValidationReport {
  bool positive = false;
  bool det_unimodular = false;
  bool primitive = false;
  long long determinant = 0;
  std::optional<int> offending_letter;  // witness for a failed positivity
  bool ok() const { return positive && det_unimodular && primitive; }
  std::string summary(const Alphabet& alphabet) const;
};

ValidationReport validate_positive_primitive(const Endomorphism& e);

// Factors of the attracting language up to max_len, as positive words.
// Computed as the fixpoint of "take subwords of images of known factors".
std::set<ReducedWord> factors(const Endomorphism& e, int max_len);

// Cached 2-factor membership used by boundary resolution.
class FactorLanguage {
 public:
  FactorLanguage() = default;
  FactorLanguage(const Endomorphism& e, int max_len);
  bool contains(const ReducedWord& w) const;
  int max_len() const { return max_len_; }

 private:
  std::set<ReducedWord> factors_;
  int max_len_ = 0;
};

long long total_image_length(const Endomorphism& e);

}  // namespace siet
