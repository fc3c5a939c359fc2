#include "siet/automorphism.hpp"

#include <algorithm>
#include <array>

namespace siet {

Endomorphism::Endomorphism(Alphabet alphabet, std::vector<ReducedWord> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_.size()) {
    throw InputError("endomorphism needs one image per alphabet symbol");
  }
  for (const auto& img : images_) {
    if (img.empty()) throw InputError("endomorphism image must be nonempty");
    for (Letter l : img) {
      if (l.index() >= alphabet_.size()) {
        throw InputError("endomorphism image uses undeclared symbol");
      }
    }
  }
}

Endomorphism Endomorphism::identity(const Alphabet& alphabet) {
  std::vector<ReducedWord> images;
  images.reserve(alphabet.size());
  for (int i = 0; i < alphabet.size(); ++i) {
    images.push_back(ReducedWord::single(Letter::pos(i)));
  }
  return Endomorphism(alphabet, std::move(images));
}

ReducedWord Endomorphism::image_of(Letter l) const {
  const ReducedWord& img = images_.at(l.index());
  return l.positive() ? img : img.inverse();
}

ReducedWord Endomorphism::apply(const ReducedWord& w) const {
  std::vector<Letter> out;
  out.reserve(w.size() * (max_image_length() + 1));
  for (Letter l : w) {
    if (l.index() >= alphabet_.size()) {
      throw InputError("word uses a symbol outside the endomorphism alphabet");
    }
    const ReducedWord& img = images_[l.index()];
    if (l.positive()) {
      for (Letter m : img) {
        if (!out.empty() && out.back() == m.inverse()) {
          out.pop_back();
        } else {
          out.push_back(m);
        }
      }
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        Letter m = it->inverse();
        if (!out.empty() && out.back() == m.inverse()) {
          out.pop_back();
        } else {
          out.push_back(m);
        }
      }
    }
  }
  return ReducedWord::from_reduced(std::move(out));
}

Endomorphism Endomorphism::after(const Endomorphism& inner) const {
  if (alphabet_ != inner.alphabet_) {
    throw InputError("cannot compose endomorphisms over different alphabets");
  }
  std::vector<ReducedWord> images;
  images.reserve(images_.size());
  for (const auto& img : inner.images_) images.push_back(apply(img));
  return Endomorphism(alphabet_, std::move(images));
}

Endomorphism Endomorphism::power(int k) const {
  if (k < 1) throw InputError("endomorphism power must be >= 1");
  Endomorphism result = *this;
  for (int i = 1; i < k; ++i) result = result.after(*this);
  return result;
}

bool Endomorphism::positive() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const ReducedWord& w) { return w.all_positive(); });
}

bool Endomorphism::is_identity() const {
  for (int i = 0; i < alphabet_.size(); ++i) {
    if (images_[i].size() != 1 || images_[i][0] != Letter::pos(i)) return false;
  }
  return true;
}

long long Endomorphism::total_image_length() const {
  long long total = 0;
  for (const auto& img : images_) total += static_cast<long long>(img.size());
  return total;
}

std::size_t Endomorphism::max_image_length() const {
  std::size_t m = 0;
  for (const auto& img : images_) m = std::max(m, img.size());
  return m;
}

std::size_t Endomorphism::min_image_length() const {
  std::size_t m = images_.empty() ? 0 : images_.front().size();
  for (const auto& img : images_) m = std::min(m, img.size());
  return m;
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  return outer.after(inner);
}

Endomorphism conjugacy(const Alphabet& alphabet, const ReducedWord& w) {
  const ReducedWord winv = w.inverse();
  std::vector<ReducedWord> images;
  images.reserve(alphabet.size());
  for (int i = 0; i < alphabet.size(); ++i) {
    images.push_back(winv * ReducedWord::single(Letter::pos(i)) * w);
  }
  return Endomorphism(alphabet, std::move(images));
}

Endomorphism ElementaryTwist::as_endomorphism(const Alphabet& alphabet) const {
  std::vector<ReducedWord> images;
  for (int i = 0; i < alphabet.size(); ++i) {
    if (i != target) {
      images.push_back(ReducedWord::single(Letter::pos(i)));
    } else if (placement == Placement::Append) {
      images.push_back(ReducedWord::single(Letter::pos(target)) *
                       ReducedWord::single(Letter::pos(other)));
    } else {
      images.push_back(ReducedWord::single(Letter::pos(other)) *
                       ReducedWord::single(Letter::pos(target)));
    }
  }
  return Endomorphism(alphabet, std::move(images));
}

Endomorphism ElementaryTwist::inverse_endomorphism(
    const Alphabet& alphabet) const {
  std::vector<ReducedWord> images;
  for (int i = 0; i < alphabet.size(); ++i) {
    if (i != target) {
      images.push_back(ReducedWord::single(Letter::pos(i)));
    } else if (placement == Placement::Append) {
      images.push_back(ReducedWord::single(Letter::pos(target)) *
                       ReducedWord::single(Letter::inv(other)));
    } else {
      images.push_back(ReducedWord::single(Letter::inv(other)) *
                       ReducedWord::single(Letter::pos(target)));
    }
  }
  return Endomorphism(alphabet, std::move(images));
}

std::string ElementaryTwist::describe(const Alphabet& alphabet) const {
  std::string t(1, alphabet.symbol(target));
  std::string o(1, alphabet.symbol(other));
  return placement == Placement::Append ? t + "->" + t + o : t + "->" + o + t;
}

IncidenceMatrix::IncidenceMatrix(int n) : n_(n), data_(n * n, 0) {}

IncidenceMatrix IncidenceMatrix::identity(int n) {
  IncidenceMatrix m(n);
  for (int i = 0; i < n; ++i) m.entry(i, i) = 1;
  return m;
}

IncidenceMatrix IncidenceMatrix::multiply(const IncidenceMatrix& rhs) const {
  if (n_ != rhs.n_) throw InputError("incidence matrix size mismatch");
  IncidenceMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const std::uint64_t a = entry(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n_; ++j) {
        std::uint64_t prod = 0, sum = 0;
        if (__builtin_mul_overflow(a, rhs.entry(k, j), &prod) ||
            __builtin_add_overflow(out.entry(i, j), prod, &sum)) {
          throw OverflowError("incidence matrix product overflow");
        }
        out.entry(i, j) = sum;
      }
    }
  }
  return out;
}

bool IncidenceMatrix::strictly_positive() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint64_t v) { return v > 0; });
}

bool IncidenceMatrix::primitive() const {
  // Boolean powers avoid overflow; Wielandt's bound caps the exponent.
  const int n = n_;
  const int wielandt = n * n - 2 * n + 2;
  std::vector<char> reach(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) reach[i] = data_[i] > 0;
  auto positive = [&](const std::vector<char>& m) {
    return std::all_of(m.begin(), m.end(), [](char v) { return v != 0; });
  };
  std::vector<char> cur = reach;
  for (int step = 1; step <= wielandt; ++step) {
    if (positive(cur)) return true;
    std::vector<char> next(data_.size(), 0);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (!cur[i * n + k]) continue;
        for (int j = 0; j < n; ++j) {
          next[i * n + j] |= reach[k * n + j];
        }
      }
    }
    cur = std::move(next);
  }
  return positive(cur);
}

long long IncidenceMatrix::determinant() const {
  // Bareiss fraction-free elimination over __int128.
  const int n = n_;
  std::vector<__int128> m(data_.begin(), data_.end());
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r * n + k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m[k * n + c], m[swap_row * n + c]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i * n + j] =
            (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      }
      m[i * n + k] = 0;
    }
    prev = m[k * n + k];
  }
  __int128 det = m[(n - 1) * n + (n - 1)] * sign;
  if (det > static_cast<__int128>(INT64_MAX) ||
      det < -static_cast<__int128>(INT64_MAX)) {
    throw OverflowError("determinant overflow");
  }
  return static_cast<long long>(det);
}

IncidenceMatrix incidence_matrix(const Endomorphism& e) {
  if (!e.positive()) {
    throw InputError("incidence matrix requires a positive endomorphism");
  }
  const int n = e.alphabet().size();
  IncidenceMatrix m(n);
  for (int col = 0; col < n; ++col) {
    for (Letter l : e.image(col)) {
      std::uint64_t sum = 0;
      if (__builtin_add_overflow(m.entry(l.index(), col), std::uint64_t{1},
                                 &sum)) {
        throw OverflowError("incidence count overflow");
      }
      m.entry(l.index(), col) = sum;
    }
  }
  return m;
}

ValidationReport validate_positive_primitive(const Endomorphism& e) {
  ValidationReport report;
  report.positive = true;
  for (int i = 0; i < e.alphabet().size(); ++i) {
    if (!e.image(i).all_positive()) {
      report.positive = false;
      report.offending_letter = i;
      break;
    }
  }
  if (!report.positive) return report;
  IncidenceMatrix m = incidence_matrix(e);
  report.determinant = m.determinant();
  report.det_unimodular =
      report.determinant == 1 || report.determinant == -1;
  report.primitive = m.primitive();
  return report;
}

std::string ValidationReport::summary(const Alphabet& alphabet) const {
  if (!positive) {
    std::string who = offending_letter
                          ? std::string(1, alphabet.symbol(*offending_letter))
                          : std::string("?");
    return "image of '" + who + "' is not positive";
  }
  if (!det_unimodular) {
    return "abelianized determinant is " + std::to_string(determinant) +
           ", not +-1";
  }
  if (!primitive) return "incidence matrix is not primitive";
  return "positive primitive";
}

std::set<ReducedWord> factors(const Endomorphism& e, int max_len) {
  if (max_len < 0) throw InputError("factor length must be >= 0");
  std::set<ReducedWord> known;
  if (max_len == 0) return known;
  // Work with a power whose images all have length >= 2. Then any factor of
  // length <= T lies inside the image of a known factor of length <= T/2+2,
  // so closing the set under "subwords of images" is exact.
  Endomorphism theta = e;
  for (int guard = 0; theta.min_image_length() < 2; ++guard) {
    if (guard > 64) {
      throw CapExceeded("factor-power",
                        "image lengths do not grow; endomorphism is likely "
                        "not primitive");
    }
    theta = theta.after(e);
  }
  const std::size_t tracked = std::max(max_len, 4);
  std::vector<ReducedWord> frontier;
  for (int i = 0; i < e.alphabet().size(); ++i) {
    frontier.push_back(ReducedWord::single(Letter::pos(i)));
    known.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<ReducedWord> next;
    for (const ReducedWord& w : frontier) {
      const ReducedWord image = theta.apply(w);
      const auto& ls = image.letters();
      for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t len = 1; len <= tracked && i + len <= ls.size();
             ++len) {
          ReducedWord sub = ReducedWord::from_reduced(
              std::vector<Letter>(ls.begin() + i, ls.begin() + i + len));
          if (known.insert(sub).second) next.push_back(sub);
        }
      }
    }
    frontier = std::move(next);
  }
  std::erase_if(known, [&](const ReducedWord& w) {
    return w.size() > static_cast<std::size_t>(max_len);
  });
  return known;
}

FactorLanguage::FactorLanguage(const Endomorphism& e, int max_len)
    : factors_(factors(e, max_len)), max_len_(max_len) {}

bool FactorLanguage::contains(const ReducedWord& w) const {
  return factors_.count(w) > 0;
}

long long total_image_length(const Endomorphism& e) {
  return e.total_image_length();
}

}  // namespace siet
