#include "siet/words.hpp"

#include <algorithm>
#include <cctype>

namespace siet {

namespace {

constexpr const char* kReservedChars = "#>-^/, \t\r\n";

}  // namespace

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) {
    throw InputError("alphabet must have at least 2 symbols, got " +
                     std::to_string(symbols_.size()));
  }
  if (symbols_.size() > 120) {
    throw InputError("alphabet too large (max 120 symbols)");
  }
  for (char c : symbols_) {
    if (!std::isprint(static_cast<unsigned char>(c)) ||
        std::string(kReservedChars).find(c) != std::string::npos) {
      throw InputError(std::string("symbol not allowed in alphabet: '") + c +
                       "'");
    }
    if (std::count(symbols_.begin(), symbols_.end(), c) != 1) {
      throw InputError(std::string("duplicate alphabet symbol: '") + c + "'");
    }
  }
}

std::optional<int> Alphabet::index_of(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<int>(pos);
}

Letter Alphabet::letter(char c) const {
  auto idx = index_of(c);
  if (!idx) throw InputError(std::string("unknown symbol: '") + c + "'");
  return Letter::pos(*idx);
}

ReducedWord ReducedWord::reduce(std::span<const Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (Letter l : letters) {
    if (!l.valid()) throw InputError("invalid letter in word");
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  ReducedWord w;
  w.letters_ = std::move(stack);
  return w;
}

ReducedWord ReducedWord::from_reduced(std::vector<Letter> letters) {
  ReducedWord w;
  w.letters_ = std::move(letters);
  return w;
}

ReducedWord ReducedWord::single(Letter l) {
  ReducedWord w;
  w.letters_.push_back(l);
  return w;
}

ReducedWord ReducedWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return from_reduced(std::move(out));
}

bool ReducedWord::all_positive() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Letter l) { return l.positive(); });
}

bool ReducedWord::all_inverse() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Letter l) { return !l.positive(); });
}

ReducedWord ReducedWord::prefix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return from_reduced(std::vector<Letter>(letters_.begin(),
                                          letters_.begin() + n));
}

ReducedWord ReducedWord::suffix_from(std::size_t i) const {
  i = std::min(i, letters_.size());
  return from_reduced(std::vector<Letter>(letters_.begin() + i,
                                          letters_.end()));
}

ReducedWord operator*(const ReducedWord& a, const ReducedWord& b) {
  // Both inputs are reduced, so cancellation happens only along the seam.
  std::size_t cut = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (cut < limit && a[a.size() - 1 - cut] == b[cut].inverse()) ++cut;
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * cut);
  out.insert(out.end(), a.begin(), a.end() - cut);
  out.insert(out.end(), b.begin() + cut, b.end());
  return ReducedWord::from_reduced(std::move(out));
}

ReducedWord free_reduce(std::span<const Letter> letters) {
  return ReducedWord::reduce(letters);
}

ReducedWord invert_word(const ReducedWord& w) { return w.inverse(); }

std::string format_letter(const Alphabet& alphabet, Letter l) {
  std::string out(1, alphabet.symbol(l.index()));
  if (!l.positive()) out += "^-1";
  return out;
}

std::string format_word(const Alphabet& alphabet, const ReducedWord& w) {
  std::string out;
  for (Letter l : w) out += format_letter(alphabet, l);
  return out;
}

ReducedWord parse_word(const Alphabet& alphabet, const std::string& text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Letter l = alphabet.letter(c);
    ++i;
    if (text.compare(i, 3, "^-1") == 0) {
      l = l.inverse();
      i += 3;
    }
    letters.push_back(l);
  }
  return ReducedWord::reduce(letters);
}

ReducedWord parse_positive_word(const Alphabet& alphabet,
                                const std::string& text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(alphabet.letter(c));
  return ReducedWord::from_reduced(std::move(letters));
}

}  // namespace siet
