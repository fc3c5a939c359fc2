#pragma once

#include <memory>
#include <optional>

#include "siet/automorphism.hpp"
#include "siet/words.hpp"

namespace siet {

// One-sided infinite reduced word exposed through a lazily extended prefix.
// Extending never changes previously exposed letters. Copies share the
// underlying buffer; extension is not synchronized (single-owner use).
class InfiniteWord {
 public:
  // V = first · block · theta(block) · theta^2(block) ...  (block nonempty,
  // sign-pure; used for both suffix-side tails and prefix-side p^-1 stacks).
  static InfiniteWord development(Endomorphism theta, ReducedWord first,
                                  ReducedWord block);
  // lim theta^n(seed); theta(seed) must extend seed.
  static InfiniteWord letter_limit(Endomorphism theta, Letter seed);
  // Coordinatewise boundary action of an endomorphism.
  static InfiniteWord mapped(InfiniteWord source, Endomorphism endo);
  // left * source, reduced (finite left translation).
  static InfiniteWord translated(InfiniteWord source, ReducedWord left);

  Letter letter_at(std::size_t i) const;
  ReducedWord prefix(std::size_t n) const;
  // First n letters agree?
  bool agrees_with(const InfiniteWord& other, std::size_t n) const;

  struct LetterLimitInfo {
    Letter seed;
    Endomorphism theta;
  };
  // Set when this word is a bare letter-limit generator.
  std::optional<LetterLimitInfo> letter_limit_info() const;

  std::size_t depth_cap() const;
  void set_depth_cap(std::size_t cap);

 private:
  struct Node;
  explicit InfiniteWord(std::shared_ptr<Node> node) : node_(std::move(node)) {}
  std::shared_ptr<Node> node_;
};

// Point (U, V) of the double boundary: U all-inverse, V all-positive.
struct FixingData {
  int k = 0;
  ReducedWord w;  // the point is fixed by the boundary action of i_w ∘ psi^k
};

struct BiPoint {
  InfiniteWord u;
  InfiniteWord v;
  std::optional<FixingData> fixing;

  Letter u0() const { return u.letter_at(0); }
  Letter v0() const { return v.letter_at(0); }
};

ReducedWord prefix_letters(const InfiniteWord& w, std::size_t n);

// (wU, wV) with reduction; throws ExcludedPointError if the first exposed
// letters lose sign purity.
BiPoint translate(const BiPoint& pt, const ReducedWord& w);

// Shift S(X, Y) = (Y0^-1 X, Y0^-1 Y) and its inverse; S^t via `shift`.
BiPoint shift_forward(const BiPoint& pt);
BiPoint shift_backward(const BiPoint& pt);
BiPoint shift(const BiPoint& pt, int t);

// Coordinatewise boundary action with free reduction. Sign purity of the
// first exposed letters is checked; a violation is exactly the excluded
// point of the recoding and raises ExcludedPointError.
BiPoint transform(const Endomorphism& action, const BiPoint& pt);

struct FixedCheck {
  bool fixed = false;
  std::size_t depth = 0;
  bool exact = false;  // true when generator identity settled it
};

// Does the boundary action of e fix pt, to the first `depth` letters of both
// coordinates?
FixedCheck is_fixed_by(const BiPoint& pt, const Endomorphism& e,
                       std::size_t depth);

}  // namespace siet
