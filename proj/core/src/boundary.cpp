#include "siet/boundary.hpp"

#include <algorithm>
#include <vector>

namespace siet {

namespace {
constexpr std::size_t kDefaultDepthCap = 4096;
}

struct InfiniteWord::Node {
  enum class Kind { Development, LetterLimit, Mapped, Translated };
  Kind kind;

  // shared state
  std::vector<Letter> buffer;
  std::size_t cap = kDefaultDepthCap;

  // Development: first · s · theta(s) · theta^2(s) ... maintained through the
  // recursion tail_n = s · theta(tail_{n-1}). Sign-pure, so truncating the
  // tail keeps every shorter prefix exact.
  Endomorphism theta;
  ReducedWord dev_first;
  ReducedWord dev_seed;
  std::vector<Letter> tail;

  // LetterLimit: lim theta^(power·n)(seed), truncated the same way.
  Letter seed{};
  int power = 1;
  std::vector<Letter> limit_word;

  // Mapped / Translated
  std::shared_ptr<Node> source;
  Endomorphism endo;    // Mapped
  ReducedWord left;     // Translated
  std::size_t solid = 0;  // letters of buffer known final (Mapped)

  void ensure(std::size_t want);
  Letter at(std::size_t i) {
    ensure(i + 1);
    return buffer[i];
  }
};

namespace {

void truncate_to(std::vector<Letter>& w, std::size_t n) {
  if (w.size() > n) w.resize(n);
}

}  // namespace

void InfiniteWord::Node::ensure(std::size_t want) {
  if (want > cap) {
    throw CapExceeded("prefix-depth",
                      "requested prefix depth " + std::to_string(want) +
                          " exceeds cap " + std::to_string(cap));
  }
  switch (kind) {
    case Kind::Development: {
      const std::size_t keep = cap + 8;
      if (tail.empty()) tail.assign(dev_seed.begin(), dev_seed.end());
      int guard = 0;
      while (dev_first.size() + tail.size() < want) {
        ReducedWord next =
            ReducedWord::from_reduced(std::vector<Letter>(dev_seed.begin(),
                                                          dev_seed.end())) *
            theta.apply(ReducedWord::from_reduced(tail));
        if (!std::equal(tail.begin(), tail.end(), next.letters().begin())) {
          throw MalformedGeneratorError(
              "development tail is not prefix-stable");
        }
        if (next.size() <= tail.size() && ++guard > 64) {
          throw MalformedGeneratorError("development tail stalled");
        }
        tail.assign(next.begin(), next.end());
        truncate_to(tail, keep);
      }
      buffer.assign(dev_first.begin(), dev_first.end());
      buffer.insert(buffer.end(), tail.begin(), tail.end());
      return;
    }
    case Kind::LetterLimit: {
      const std::size_t keep = cap + 8;
      if (limit_word.empty()) limit_word.push_back(seed);
      int stalls = 0;
      while (limit_word.size() < want) {
        ReducedWord next = ReducedWord::from_reduced(limit_word);
        for (int i = 0; i < power; ++i) {
          next = theta.apply(next);
          if (next.all_positive() || next.all_inverse()) {
            // truncation is sound only for sign-pure words
            ReducedWord cut = next.prefix(keep);
            next = cut;
          }
        }
        if (next.size() <= limit_word.size()) {
          if (++stalls > 64) {
            throw MalformedGeneratorError(
                "letter-limit generator stalled; seed not extended");
          }
        } else {
          stalls = 0;
        }
        std::size_t common = std::min(limit_word.size(), next.size());
        if (!std::equal(limit_word.begin(), limit_word.begin() + common,
                        next.letters().begin())) {
          throw MalformedGeneratorError(
              "letter-limit generator is not prefix-stable");
        }
        limit_word.assign(next.begin(), next.end());
        truncate_to(limit_word, keep);
      }
      buffer.assign(limit_word.begin(), limit_word.end());
      return;
    }
    case Kind::Mapped: {
      if (solid >= want) return;
      // Applying a free-group endomorphism to a reduced word cancels only
      // around letter seams, so letters further than one image length from
      // the end of the computed image are final. The margin is validated by
      // re-checking previously exposed letters on every extension.
      const std::size_t margin = endo.max_image_length() + 2;
      std::size_t m = std::max<std::size_t>(want + 4, 16);
      while (true) {
        source->ensure(m);
        ReducedWord w = endo.apply(ReducedWord::from_reduced(
            std::vector<Letter>(source->buffer.begin(),
                                source->buffer.begin() + m)));
        const std::size_t usable = w.size() > margin ? w.size() - margin : 0;
        if (usable >= want) {
          if (!std::equal(buffer.begin(), buffer.begin() + solid,
                          w.letters().begin())) {
            throw MalformedGeneratorError(
                "mapped word changed previously exposed letters");
          }
          buffer.assign(w.letters().begin(), w.letters().begin() + usable);
          solid = usable;
          return;
        }
        if (m > 4 * cap + 64) {
          throw CapExceeded("transform-depth",
                            "image of infinite word does not grow");
        }
        m *= 2;
      }
    }
    case Kind::Translated: {
      if (solid >= want) return;
      std::size_t m = want + left.size() + 4;
      source->ensure(m);
      ReducedWord w = left * ReducedWord::from_reduced(std::vector<Letter>(
                                 source->buffer.begin(),
                                 source->buffer.begin() + m));
      // Cancellation is confined to the seam, so everything computed is
      // final; appending source letters only appends to the product.
      if (!std::equal(buffer.begin(), buffer.begin() + solid,
                      w.letters().begin())) {
        throw MalformedGeneratorError(
            "translated word changed previously exposed letters");
      }
      buffer.assign(w.begin(), w.end());
      solid = buffer.size();
      if (solid < want) {
        throw MalformedGeneratorError(
            "translation consumed the whole known prefix");
      }
      return;
    }
  }
}

InfiniteWord InfiniteWord::development(Endomorphism theta, ReducedWord first,
                                       ReducedWord block) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Development;
  node->theta = std::move(theta);
  node->buffer.assign(first.begin(), first.end());
  if (block.empty()) {
    throw MalformedGeneratorError("development needs a nonempty block");
  }
  node->block = node->theta.apply(block);
  if (node->buffer.empty()) {
    node->buffer.assign(block.begin(), block.end());
  } else {
    node->buffer.insert(node->buffer.end(), block.begin(), block.end());
  }
  return InfiniteWord(std::move(node));
}

InfiniteWord InfiniteWord::letter_limit(Endomorphism theta, Letter seed) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::LetterLimit;
  node->theta = std::move(theta);
  node->seed = seed;
  return InfiniteWord(std::move(node));
}

InfiniteWord InfiniteWord::mapped(InfiniteWord source, Endomorphism endo) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Mapped;
  node->source = source.node_;
  node->endo = std::move(endo);
  node->cap = source.node_->cap;
  return InfiniteWord(std::move(node));
}

InfiniteWord InfiniteWord::translated(InfiniteWord source, ReducedWord left) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Translated;
  node->source = source.node_;
  node->left = std::move(left);
  node->cap = source.node_->cap;
  return InfiniteWord(std::move(node));
}

Letter InfiniteWord::letter_at(std::size_t i) const { return node_->at(i); }

ReducedWord InfiniteWord::prefix(std::size_t n) const {
  node_->ensure(n);
  return ReducedWord::from_reduced(
      std::vector<Letter>(node_->buffer.begin(), node_->buffer.begin() + n));
}

bool InfiniteWord::agrees_with(const InfiniteWord& other,
                               std::size_t n) const {
  for (std::size_t i = 0; i < n; ++i) {
    if (letter_at(i) != other.letter_at(i)) return false;
  }
  return true;
}

std::optional<InfiniteWord::LetterLimitInfo>
InfiniteWord::letter_limit_info() const {
  if (node_->kind != Node::Kind::LetterLimit) return std::nullopt;
  return LetterLimitInfo{node_->seed, node_->theta};
}

std::size_t InfiniteWord::depth_cap() const { return node_->cap; }

void InfiniteWord::set_depth_cap(std::size_t cap) { node_->cap = cap; }

ReducedWord prefix_letters(const InfiniteWord& w, std::size_t n) {
  return w.prefix(n);
}

namespace {

void check_signs(const BiPoint& pt, const char* what) {
  if (pt.u0().positive() || !pt.v0().positive()) {
    throw ExcludedPointError(std::string(what) +
                             ": coordinates lost sign purity");
  }
}

}  // namespace

BiPoint translate(const BiPoint& pt, const ReducedWord& w) {
  BiPoint out{InfiniteWord::translated(pt.u, w),
              InfiniteWord::translated(pt.v, w), std::nullopt};
  check_signs(out, "translate");
  return out;
}

BiPoint shift_forward(const BiPoint& pt) {
  return translate(pt, ReducedWord::single(pt.v0().inverse()));
}

BiPoint shift_backward(const BiPoint& pt) {
  return translate(pt, ReducedWord::single(pt.u0().inverse()));
}

BiPoint shift(const BiPoint& pt, int t) {
  BiPoint cur = pt;
  for (; t > 0; --t) cur = shift_forward(cur);
  for (; t < 0; ++t) cur = shift_backward(cur);
  return cur;
}

BiPoint transform(const Endomorphism& action, const BiPoint& pt) {
  BiPoint out{InfiniteWord::mapped(pt.u, action),
              InfiniteWord::mapped(pt.v, action), std::nullopt};
  check_signs(out, "transform");
  return out;
}

FixedCheck is_fixed_by(const BiPoint& pt, const Endomorphism& e,
                       std::size_t depth) {
  FixedCheck result;
  result.depth = depth;
  try {
    BiPoint image = transform(e, pt);
    result.fixed = image.u.agrees_with(pt.u, depth) &&
                   image.v.agrees_with(pt.v, depth);
  } catch (const ExcludedPointError&) {
    result.fixed = false;
    return result;
  }
  if (result.fixed) {
    // Generator identity settles the letter-limit cases conclusively: the
    // limit word of theta is determined by its first letter.
    auto ui = pt.u.letter_limit_info();
    auto vi = pt.v.letter_limit_info();
    result.exact = ui.has_value() && vi.has_value();
  }
  return result;
}

}  // namespace siet
