#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momo/error.hpp"
#include "momo/symbolic/word.hpp"

namespace momo::symbolic {

/// Constant-length substitution theta: A -> A^q over letters 0..#A-1.
class Substitution {
 public:
  Substitution(std::vector<std::string> alphabet, std::vector<Word> images)
      : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    require(alphabet_.size() >= 2, ErrorCode::invalid_argument, "alphabet needs at least two letters");
    require(alphabet_.size() <= 64, ErrorCode::invalid_argument, "alphabet limited to 64 letters");
    require(images_.size() == alphabet_.size(), ErrorCode::invalid_argument,
            "one image per letter required");
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        require(alphabet_[i] != alphabet_[j], ErrorCode::invalid_argument,
                "duplicate letter '" + alphabet_[i] + "'");
      }
    }
    length_ = images_.front().size();
    require(length_ >= 2, ErrorCode::invalid_argument, "image length q must be >= 2");
    for (const Word& w : images_) {
      require(w.size() == length_, ErrorCode::invalid_argument, "images must share one length");
      for (Symbol s : w) {
        require(s < alphabet_.size(), ErrorCode::invalid_argument, "image letter outside alphabet");
      }
    }
  }

  /// Rules over single-character letters, e.g. {{"a","ab"},{"b","ac"}};
  /// the alphabet is ordered as the rules are listed.
  static Substitution from_rules(
      std::initializer_list<std::pair<std::string_view, std::string_view>> rules) {
    std::vector<std::string> alphabet;
    for (const auto& [letter, image] : rules) alphabet.emplace_back(letter);
    std::vector<Word> images;
    for (const auto& [letter, image] : rules) {
      Word w;
      for (char c : image) w.push_back(index_in(alphabet, std::string(1, c)));
      images.push_back(std::move(w));
    }
    return Substitution(std::move(alphabet), std::move(images));
  }

  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  std::size_t length() const noexcept { return length_; }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const Word& image(Symbol a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }

  Symbol index_of(std::string_view letter) const { return index_in(alphabet_, std::string(letter)); }

  /// tau_i(a) = theta(a)(i)
  Word column(std::size_t i) const {
    Word tau(alphabet_.size());
    for (std::size_t a = 0; a < alphabet_.size(); ++a) tau[a] = images_[a][i];
    return tau;
  }

  Word apply(const Word& w) const {
    Word out;
    out.reserve(w.size() * length_);
    for (Symbol a : w) out.insert(out.end(), images_[a].begin(), images_[a].end());
    return out;
  }

  std::string render(const Word& w) const {
    std::string s;
    for (Symbol a : w) s += alphabet_[a];
    return s;
  }

 private:
  static Symbol index_in(const std::vector<std::string>& alphabet, const std::string& letter) {
    const auto it = std::find(alphabet.begin(), alphabet.end(), letter);
    require(it != alphabet.end(), ErrorCode::invalid_argument, "unknown letter '" + letter + "'");
    return static_cast<Symbol>(it - alphabet.begin());
  }

  std::vector<std::string> alphabet_;
  std::vector<Word> images_;
  std::size_t length_ = 0;
};

/// First n symbols of lim theta^t(a).
inline Word substitution_fixed_point(const Substitution& theta, Symbol a, std::uint64_t n) {
  require(a < theta.alphabet_size(), ErrorCode::invalid_argument, "seed letter outside alphabet");
  if (theta.image(a)[0] != a) {
    throw Error(ErrorCode::not_a_fixed_point_seed,
                "theta(" + theta.alphabet()[a] + ") does not begin with " + theta.alphabet()[a]);
  }
  Word w{a};
  while (w.size() < n) w = theta.apply(w);
  w.resize(n);
  return w;
}

/// Some power of the incidence matrix is entrywise positive (exponents up to #A^2).
inline bool is_primitive(const Substitution& theta) {
  const std::size_t k = theta.alphabet_size();
  // reach[a] = bitmask of letters occurring in theta^t(a)
  std::vector<std::uint64_t> one_step(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (Symbol b : theta.image(static_cast<Symbol>(a))) one_step[a] |= std::uint64_t{1} << b;
  }
  const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> reach = one_step;
  for (std::size_t power = 1; power <= k * k; ++power) {
    if (std::all_of(reach.begin(), reach.end(), [full](std::uint64_t m) { return m == full; })) {
      return true;
    }
    std::vector<std::uint64_t> next(k, 0);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (reach[a] >> b & 1) next[a] |= one_step[b];
      }
    }
    reach = std::move(next);
  }
  return false;
}

/// Every column map tau_i permutes the alphabet.
inline bool is_bijective(const Substitution& theta) {
  for (std::size_t i = 0; i < theta.length(); ++i) {
    const Word tau = theta.column(i);
    std::vector<bool> hit(theta.alphabet_size(), false);
    for (Symbol s : tau) {
      if (hit[s]) return false;
      hit[s] = true;
    }
  }
  return true;
}

struct ColumnNumber {
  std::size_t value = 0;
  std::size_t t = 0;         // power where the minimum first appears
  std::uint64_t position = 0;  // column l of theta^t
  std::size_t levels_searched = 0;
};

/// c(theta) = min over t >= 1 and 0 <= l < q^t of #{theta^t(a)(l) : a in A}.
///
/// Tracks the family of column image sets level by level: the level t+1
/// sets are tau_j(S) for S at level t and j < q, so theta^t is never
/// materialized. Each set keeps its smallest column position. The search
/// stops once a level adds no set that was not seen before (every later
/// level then only revisits known sets), when a singleton appears, or at
/// t_max.
inline ColumnNumber column_number(const Substitution& theta, std::size_t t_max) {
  require(t_max >= 1, ErrorCode::invalid_argument, "t_max must be >= 1");
  const std::size_t k = theta.alphabet_size();
  const std::size_t q = theta.length();
  std::vector<Word> tau;
  for (std::size_t j = 0; j < q; ++j) tau.push_back(theta.column(j));

  auto image = [&](std::uint64_t set, std::size_t j) {
    std::uint64_t out = 0;
    for (std::size_t a = 0; a < k; ++a) {
      if (set >> a & 1) out |= std::uint64_t{1} << tau[j][a];
    }
    return out;
  };

  const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::map<std::uint64_t, std::uint64_t> level{{full, 0}};  // set -> smallest position
  std::map<std::uint64_t, bool> seen;
  // positions past 2^64 saturate to kNoPosition
  constexpr std::uint64_t kNoPosition = std::numeric_limits<std::uint64_t>::max();
  ColumnNumber best{k + 1, 0, 0, 0};
  for (std::size_t t = 1; t <= t_max; ++t) {
    std::map<std::uint64_t, std::uint64_t> next;
    for (const auto& [set, pos] : level) {
      for (std::size_t j = 0; j < q; ++j) {
        std::uint64_t child_pos = kNoPosition;
        if (pos != kNoPosition && pos <= (kNoPosition - 1 - j) / q) child_pos = pos * q + j;
        const std::uint64_t child = image(set, j);
        auto [it, inserted] = next.emplace(child, child_pos);
        if (!inserted) it->second = std::min(it->second, child_pos);
      }
    }
    bool fresh = false;
    for (const auto& [set, pos] : next) {
      const auto card = static_cast<std::size_t>(std::popcount(set));
      if (card < best.value || (card == best.value && best.t == t && pos < best.position)) {
        best.value = card;
        best.t = t;
        best.position = pos;
      }
      fresh |= seen.emplace(set, true).second;
    }
    best.levels_searched = t;
    level = std::move(next);
    if (best.value == 1 || !fresh) break;
  }
  return best;
}

}  // namespace momo::symbolic
