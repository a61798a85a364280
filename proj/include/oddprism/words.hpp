#pragma once

// Odd cyclic words over {a,b,c,d}, the twelve unavoidable factors, and the
// exhaustive checks tying them to two-colourings of the odd prism.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "oddprism/graph.hpp"
#include "oddprism/patterns.hpp"

namespace oddprism {

class CyclicWord {
 public:
  explicit CyclicWord(std::string letters) : letters_(std::move(letters)) {
    if (letters_.size() < 3 || letters_.size() % 2 == 0)
      throw std::invalid_argument("cyclic word length must be odd and at least 3");
    for (char c : letters_)
      if (c < 'a' || c > 'd') throw std::invalid_argument("cyclic word letters must be in {a,b,c,d}");
  }

  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const noexcept { return letters_[i % letters_.size()]; }
  const std::string& str() const noexcept { return letters_; }

  CyclicWord rotated(std::size_t by) const {
    const std::size_t n = letters_.size();
    by %= n;
    return CyclicWord(letters_.substr(by) + letters_.substr(0, by));
  }

  /// a<->d, b<->c.
  CyclicWord letter_swapped() const {
    std::string out = letters_;
    for (char& c : out) c = static_cast<char>('a' + ('d' - c));
    return CyclicWord(std::move(out));
  }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::string letters_;
};

/// The unavoidable factor set, in its listed order.
inline constexpr std::array<std::string_view, 12> kForbiddenFactors = {
    "aa", "bb", "cc", "dd", "ad", "da", "aba", "dcd", "bdc", "cab", "cdb", "bac"};

/// Factors whose presence forces a monochromatic P4 in the coloured prism;
/// the remaining four force a red-red-blue-blue C4.
inline constexpr std::array<std::string_view, 8> kPathFactors = {"aa", "dd", "aba", "dcd",
                                                                 "bdc", "cab", "cdb", "bac"};
inline constexpr std::array<std::string_view, 4> kSquareFactors = {"bb", "cc", "ad", "da"};

inline bool is_path_factor(std::string_view p) {
  return std::find(kPathFactors.begin(), kPathFactors.end(), p) != kPathFactors.end();
}

/// First start position of `pattern` as a contiguous cyclic factor.
inline std::optional<std::size_t> contains_factor(const CyclicWord& w, std::string_view pattern) {
  if (pattern.size() != 2 && pattern.size() != 3)
    throw std::invalid_argument("factor patterns have length 2 or 3");
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size() && match; ++j) match = w[i + j] == pattern[j];
    if (match) return i;
  }
  return std::nullopt;
}

struct FactorHit {
  std::string_view pattern;
  std::size_t position;
  friend bool operator==(const FactorHit&, const FactorHit&) = default;
};

inline std::optional<FactorHit> hits_forbidden(const CyclicWord& w) {
  for (auto p : kForbiddenFactors)
    if (auto pos = contains_factor(w, p)) return FactorHit{p, *pos};
  return std::nullopt;
}

namespace detail {

// Word number `index` with letter i = base-4 digit i, least significant first.
inline std::string word_from_index(std::uint64_t index, std::size_t length) {
  std::string s(length, 'a');
  for (std::size_t i = 0; i < length; ++i) {
    s[i] = static_cast<char>('a' + (index & 3U));
    index >>= 2;
  }
  return s;
}

inline bool is_least_rotation(const std::string& s) {
  for (std::size_t r = 1; r < s.size(); ++r)
    if (s.substr(r) + s.substr(0, r) < s) return false;
  return true;
}

// Runs fn(begin, end, slot) over [0, total) split into contiguous slices, one
// per worker; results are merged by the caller in slot order.
template <class Fn>
void for_slices(std::uint64_t total, unsigned threads, Fn&& fn) {
  threads = std::max(1U, threads);
  if (threads == 1 || total < 4096) {
    fn(std::uint64_t{0}, total, 0U);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t step = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = std::min(total, step * t);
    const std::uint64_t hi = std::min(total, lo + step);
    pool.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline constexpr std::size_t kWordLemmaMaxK = 9;
inline constexpr std::size_t kColouringMaxK = 5;

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct WordLemmaReport {
  std::size_t k = 0;
  std::uint64_t total = 0;
  std::uint64_t misses = 0;
  bool least_rotations_only = false;
  std::map<std::string, std::uint64_t> hits_by_pattern;
  std::vector<std::string> counterexamples;  // first few misses, if any
  double elapsed_ms = 0.0;
};

struct WordLemmaOptions {
  bool least_rotations_only = false;
  unsigned threads = 1;
};

/// Checks every odd cyclic word of length 2k+1 (or every least rotation)
/// for a factor from the unavoidable set.
inline WordLemmaReport verify_word_lemma(std::size_t k, const WordLemmaOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("word lemma needs k >= 1");
  if (k > kWordLemmaMaxK) throw CapExceeded("word lemma: k above cap " + std::to_string(kWordLemmaMaxK));
  const auto start = std::chrono::steady_clock::now();
  const std::size_t len = 2 * k + 1;
  const std::uint64_t total = std::uint64_t{1} << (2 * len);

  struct Partial {
    std::uint64_t checked = 0;
    std::uint64_t misses = 0;
    std::array<std::uint64_t, kForbiddenFactors.size()> hits{};
    std::vector<std::string> counterexamples;
  };
  const unsigned threads = std::max(1U, opts.threads);
  std::vector<Partial> parts(threads);
  detail::for_slices(total, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
    Partial& part = parts[slot];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::string s = detail::word_from_index(idx, len);
      if (opts.least_rotations_only && !detail::is_least_rotation(s)) continue;
      ++part.checked;
      const CyclicWord w(std::move(s));
      if (auto hit = hits_forbidden(w)) {
        const auto pos = static_cast<std::size_t>(
            std::find(kForbiddenFactors.begin(), kForbiddenFactors.end(), hit->pattern) -
            kForbiddenFactors.begin());
        ++part.hits[pos];
      } else {
        ++part.misses;
        if (part.counterexamples.size() < 10) part.counterexamples.push_back(w.str());
      }
    }
  });

  WordLemmaReport report;
  report.k = k;
  report.least_rotations_only = opts.least_rotations_only;
  std::array<std::uint64_t, kForbiddenFactors.size()> hits{};
  for (const auto& part : parts) {
    report.total += part.checked;
    report.misses += part.misses;
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += part.hits[i];
    for (const auto& c : part.counterexamples)
      if (report.counterexamples.size() < 10) report.counterexamples.push_back(c);
  }
  for (std::size_t i = 0; i < hits.size(); ++i) report.hits_by_pattern[std::string(kForbiddenFactors[i])] = hits[i];
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Letter i encodes (u_i, v_i) = (top vertex 2i, bottom vertex 2i+1) of
/// odd_prism(k): rr -> a, rb -> b, br -> c, bb -> d.
inline CyclicWord encode_colouring(std::size_t k, const std::vector<Colour>& colour) {
  const std::size_t len = 2 * k + 1;
  if (k < 1) throw std::invalid_argument("colouring needs k >= 1");
  if (colour.size() != 2 * len) throw std::invalid_argument("colouring length must be 2(2k+1)");
  std::string s(len, 'a');
  for (std::size_t i = 0; i < len; ++i) {
    const bool top_blue = colour[2 * i] == Colour::kBlue;
    const bool bottom_blue = colour[2 * i + 1] == Colour::kBlue;
    s[i] = static_cast<char>('a' + (top_blue ? 2 : 0) + (bottom_blue ? 1 : 0));
  }
  return CyclicWord(std::move(s));
}

/// Colouring number `index`: bit j set means prism vertex j is blue.
inline std::vector<Colour> colouring_from_index(std::uint64_t index, std::size_t vertices) {
  std::vector<Colour> c(vertices);
  for (std::size_t j = 0; j < vertices; ++j) c[j] = ((index >> j) & 1U) ? Colour::kBlue : Colour::kRed;
  return c;
}

struct ColouringReport {
  std::size_t k = 0;
  std::uint64_t total = 0;
  std::uint64_t structural_misses = 0;
  std::uint64_t word_misses = 0;
  /// Colourings where the fired factor did not yield the structure its
  /// class predicts ({bb,cc,ad,da} -> C4, the rest -> P4).
  std::uint64_t case_split_failures = 0;
  /// fired factor -> structure found first by the direct search -> count.
  std::map<std::string, std::map<std::string, std::uint64_t>> cross_tab;
  std::string case_split = "repaired case split";
  double elapsed_ms = 0.0;

  bool verified() const noexcept {
    return structural_misses == 0 && word_misses == 0 && case_split_failures == 0;
  }
};

inline ColouringReport verify_colouring_corollary(std::size_t k, unsigned threads = 1) {
  if (k < 1) throw std::invalid_argument("colouring corollary needs k >= 1");
  if (k > kColouringMaxK) throw CapExceeded("colouring corollary: k above cap " + std::to_string(kColouringMaxK));
  const auto start = std::chrono::steady_clock::now();
  const Graph prism = odd_prism(k);
  const std::size_t vertices = prism.order();
  const std::uint64_t total = std::uint64_t{1} << vertices;

  struct Partial {
    std::uint64_t structural = 0;
    std::uint64_t word = 0;
    std::uint64_t split = 0;
    std::map<std::string, std::map<std::string, std::uint64_t>> tab;
  };
  threads = std::max(1U, threads);
  std::vector<Partial> parts(threads);
  detail::for_slices(total, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
    Partial& part = parts[slot];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const auto colour = colouring_from_index(idx, vertices);
      StructureReport found;
      if (auto p = find_monochromatic_p4(prism, colour))
        found = {PrismStructure::kMonochromaticP4, *p};
      else if (auto c = find_bicoloured_c4(prism, colour))
        found = {PrismStructure::kBicolouredC4, *c};
      if (found.kind == PrismStructure::kNone) ++part.structural;

      const auto hit = hits_forbidden(encode_colouring(k, colour));
      if (!hit) {
        ++part.word;
        continue;
      }
      const bool predicted = is_path_factor(hit->pattern) ? find_monochromatic_p4(prism, colour).has_value()
                                                          : find_bicoloured_c4(prism, colour).has_value();
      if (!predicted) ++part.split;
      ++part.tab[std::string(hit->pattern)][to_string(found.kind)];
    }
  });

  ColouringReport report;
  report.k = k;
  report.total = total;
  for (const auto& part : parts) {
    report.structural_misses += part.structural;
    report.word_misses += part.word;
    report.case_split_failures += part.split;
    for (const auto& [pat, row] : part.tab)
      for (const auto& [kind, count] : row) report.cross_tab[pat][kind] += count;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace oddprism
