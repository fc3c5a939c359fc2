#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "siet/errors.hpp"

namespace siet {

// Signed letter over an alphabet of at most 120 symbols. A positive letter
// with alphabet index i is encoded as +(i+1), its inverse as -(i+1).
struct Letter {
  std::int16_t code = 0;

  constexpr bool valid() const { return code != 0; }
  constexpr bool positive() const { return code > 0; }
  constexpr Letter inverse() const {
    return Letter{static_cast<std::int16_t>(-code)};
  }
  constexpr int index() const { return (code > 0 ? code : -code) - 1; }

  static constexpr Letter pos(int index) {
    return Letter{static_cast<std::int16_t>(index + 1)};
  }
  static constexpr Letter inv(int index) {
    return Letter{static_cast<std::int16_t>(-(index + 1))};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

// Ordered set of single-character generator symbols.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  char symbol(int index) const { return symbols_.at(index); }
  const std::string& symbols() const { return symbols_; }
  std::optional<int> index_of(char c) const;

  Letter letter(char c) const;  // positive letter, throws on unknown symbol

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

// Freely reduced word. The empty word represents the identity.
class ReducedWord {
 public:
  ReducedWord() = default;

  // Reduces an arbitrary letter sequence (iterated cancellation of adjacent
  // inverse pairs, single pass with an explicit stack).
  static ReducedWord reduce(std::span<const Letter> letters);
  // Wraps a sequence the caller guarantees is already reduced.
  static ReducedWord from_reduced(std::vector<Letter> letters);
  static ReducedWord single(Letter l);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const std::vector<Letter>& letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  ReducedWord inverse() const;
  bool all_positive() const;
  bool all_inverse() const;

  ReducedWord prefix(std::size_t n) const;
  ReducedWord suffix_from(std::size_t i) const;

  // Concatenation with free reduction.
  friend ReducedWord operator*(const ReducedWord& a, const ReducedWord& b);

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<Letter> letters_;
};

ReducedWord free_reduce(std::span<const Letter> letters);
ReducedWord invert_word(const ReducedWord& w);

// Rendering and parsing relative to an alphabet. Inverse letters are written
// with a ^-1 suffix, e.g. "a^-1d^-1".
std::string format_letter(const Alphabet& alphabet, Letter l);
std::string format_word(const Alphabet& alphabet, const ReducedWord& w);
// Accepts positive symbols and ^-1 suffixes; reduces the result.
ReducedWord parse_word(const Alphabet& alphabet, const std::string& text);
// Positive words only (every character must be an alphabet symbol).
ReducedWord parse_positive_word(const Alphabet& alphabet,
                                const std::string& text);

}  // namespace siet
