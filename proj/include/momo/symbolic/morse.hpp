#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "momo/error.hpp"
#include "momo/symbolic/word.hpp"

namespace momo::symbolic {

inline constexpr std::size_t kDefaultMaxDepth = 62;

/// B x C := (B + C(0)) (B + C(1)) ... (B + C(|C|-1)), addition mod 2.
inline Word block_product(const Word& b, const Word& c) {
  require(!b.empty() && !c.empty(), ErrorCode::invalid_argument, "block product of an empty word");
  require(is_binary(b) && is_binary(c), ErrorCode::invalid_argument, "block product needs 0/1 words");
  Word out;
  out.reserve(b.size() * c.size());
  for (Symbol ci : c) {
    for (Symbol bi : b) out.push_back(static_cast<Symbol>(bi ^ ci));
  }
  return out;
}

/// Blocks b^0, b^1, ... of a generalized Morse sequence b^0 x b^1 x ...
///
/// With `repeat_last` the final block repeats forever; the realized depth is
/// then capped at `max_depth` (T_MAX). Scales n_t = |b^0| ... |b^{t-1}|.
class BlockProduct {
 public:
  explicit BlockProduct(std::vector<Word> blocks, bool repeat_last = false,
                        std::size_t max_depth = kDefaultMaxDepth)
      : blocks_(std::move(blocks)), repeat_last_(repeat_last), max_depth_(max_depth) {
    require(!blocks_.empty(), ErrorCode::invalid_argument, "block product needs at least one block");
    for (const Word& b : blocks_) {
      require(b.size() >= 2, ErrorCode::invalid_argument, "every block needs length >= 2");
      require(is_binary(b), ErrorCode::invalid_argument, "blocks must be 0/1 words");
      require(b[0] == 0, ErrorCode::invalid_argument, "every block must start with 0");
    }
  }

  static BlockProduct from_digits(std::initializer_list<std::string_view> blocks,
                                  bool repeat_last = false) {
    std::vector<Word> words;
    for (auto b : blocks) words.push_back(word_from_digits(b));
    return BlockProduct(std::move(words), repeat_last);
  }

  /// Number of blocks available.
  std::size_t depth() const noexcept {
    return repeat_last_ ? std::max(max_depth_, blocks_.size()) : blocks_.size();
  }

  bool repeat_last() const noexcept { return repeat_last_; }
  std::size_t max_depth() const noexcept { return max_depth_; }
  const std::vector<Word>& explicit_blocks() const noexcept { return blocks_; }

  const Word& block(std::size_t t) const {
    if (t >= depth()) {
      throw Error(ErrorCode::needs_more_blocks,
                  "block b^" + std::to_string(t) + " requested, " + std::to_string(depth()) +
                      " available",
                  t + 1);
    }
    return t < blocks_.size() ? blocks_[t] : blocks_.back();
  }

  /// n_t; n_0 = 1.
  std::uint64_t scale(std::size_t t) const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < t; ++i) {
      const std::uint64_t len = block(i).size();
      require(n <= std::numeric_limits<std::uint64_t>::max() / len, ErrorCode::invalid_argument,
              "odometer scale overflows 64 bits");
      n *= len;
    }
    return n;
  }

 private:
  std::vector<Word> blocks_;
  bool repeat_last_ = false;
  std::size_t max_depth_ = kDefaultMaxDepth;
};

/// c_t = b^0 x ... x b^{t-1} (c_0 = "0").
inline Word morse_block(const BlockProduct& p, std::size_t t) {
  Word c{0};
  for (std::size_t i = 0; i < t; ++i) c = block_product(c, p.block(i));
  return c;
}

/// First n symbols of b^0 x b^1 x ...
inline Word morse_prefix(const BlockProduct& p, std::uint64_t n) {
  require(n >= 1, ErrorCode::invalid_argument, "prefix length must be >= 1");
  Word c{0};
  std::size_t t = 0;
  while (c.size() < n) {
    if (t >= p.depth()) {
      // every further block has length >= 2
      std::size_t more = 0;
      for (std::uint64_t have = c.size(); have < n; have *= 2) ++more;
      throw Error(ErrorCode::needs_more_blocks,
                  "prefix of length " + std::to_string(n) + " needs at least " +
                      std::to_string(t + more) + " blocks",
                  t + more);
    }
    c = block_product(c, p.block(t));
    ++t;
  }
  c.resize(n);
  return c;
}

/// x^(n) = x(n) + x(n+1) mod 2.
inline Word toeplitz_derive(const Word& x) {
  require(x.size() >= 2, ErrorCode::invalid_argument, "derivative needs a word of length >= 2");
  require(is_binary(x), ErrorCode::invalid_argument, "derivative needs a 0/1 word");
  Word out(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) out[i] = static_cast<Symbol>(x[i] ^ x[i + 1]);
  return out;
}

/// Smallest period 2^v (v <= max_exponent) with x(j) = x(j + m 2^v) for every
/// in-range m, if one exists within the realized word.
inline std::optional<std::uint64_t> toeplitz_dyadic_period(const Word& x, std::uint64_t j,
                                                           unsigned max_exponent) {
  require(j < x.size(), ErrorCode::insufficient_range, "position beyond the realized word");
  for (unsigned v = 0; v <= max_exponent; ++v) {
    const std::uint64_t k = std::uint64_t{1} << v;
    bool ok = true;
    for (std::uint64_t i = j + k; i < x.size(); i += k) {
      if (x[i] != x[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  return std::nullopt;
}

/// Introduces parentheses: group j is the product of the next grouping[j]
/// original blocks. The generated sequence is unchanged; blocks beyond the
/// grouping are carried over as they were.
inline BlockProduct regroup(const BlockProduct& p, std::span<const std::size_t> grouping) {
  std::vector<Word> grouped;
  std::size_t next = 0;
  for (std::size_t size : grouping) {
    require(size > 0, ErrorCode::invalid_argument, "group of size 0");
    Word w = p.block(next);
    for (std::size_t i = 1; i < size; ++i) w = block_product(w, p.block(next + i));
    grouped.push_back(std::move(w));
    next += size;
  }
  const auto& original = p.explicit_blocks();
  for (std::size_t i = next; i < original.size(); ++i) grouped.push_back(original[i]);
  if (p.repeat_last() && next >= original.size()) grouped.push_back(original.back());
  if (grouped.empty()) grouped.push_back(original.front());
  return BlockProduct(std::move(grouped), p.repeat_last(), p.max_depth());
}

inline constexpr std::int8_t kUndeterminedLevel = -1;

struct BoundaryLevel {
  std::uint64_t level;  // position in the (t+1)-tower
  Symbol value;
};

struct CocycleLevels {
  std::size_t t = 0;
  std::uint64_t height = 0;          // n_t
  std::vector<std::int8_t> levels;   // 0/1, last entry kUndeterminedLevel
  // Values on the tops of the copies of the t-tower inside the (t+1)-tower,
  // levels i n_t - 1 for 1 <= i < lambda_t; empty when b^t is not realized.
  std::vector<BoundaryLevel> next_boundaries;
};

/// Morse cocycle values on the levels D^{(t)}_i of the t-th tower:
/// c^_t(i) for i < n_t - 1, with the exceptional top level left undetermined.
inline CocycleLevels morse_cocycle_levels(const BlockProduct& p, std::size_t t) {
  require(t >= 1, ErrorCode::invalid_argument, "tower index must be >= 1");
  if (t > p.depth()) {
    throw Error(ErrorCode::needs_more_blocks,
                "tower " + std::to_string(t) + " needs " + std::to_string(t) + " blocks", t);
  }
  CocycleLevels out;
  out.t = t;
  const Word c = morse_block(p, t);
  out.height = c.size();
  out.levels.resize(c.size());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) out.levels[i] = static_cast<std::int8_t>(c[i] ^ c[i + 1]);
  out.levels.back() = kUndeterminedLevel;
  if (t < p.depth()) {
    const Word& b = p.block(t);
    for (std::size_t i = 1; i < b.size(); ++i) {
      out.next_boundaries.push_back(
          {i * out.height - 1, static_cast<Symbol>(b[i - 1] ^ b[i] ^ c.back())});
    }
  }
  return out;
}

struct PcWitnessEntry {
  std::size_t first_block = 0;  // index of the first original block in the group
  std::size_t group_size = 0;
  Word block;                   // the regrouped block
  Word derived;                 // its adjacent-XOR derivative
  bool witness = false;         // derived begins with 101 or 010
};

/// Kakutani pairing: every block followed by 01 is grouped with it
/// (01 x 01 = 0110, 00 x 01 = 0011); remaining blocks stay single.
/// Scans the first `depth` blocks (default: the explicit ones).
inline std::vector<PcWitnessEntry> pc_witness_kakutani(const BlockProduct& p,
                                                       std::optional<std::size_t> depth = {}) {
  const std::size_t n = std::min(depth.value_or(p.explicit_blocks().size()), p.depth());
  const Word zero_one{0, 1};
  const Word zero_zero{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    require(p.block(i) == zero_one || p.block(i) == zero_zero, ErrorCode::invalid_argument,
            "Kakutani pairing needs blocks 00 or 01");
  }
  std::vector<PcWitnessEntry> out;
  bool any = false;
  for (std::size_t i = 0; i < n;) {
    PcWitnessEntry e;
    e.first_block = i;
    if (i + 1 < n && p.block(i + 1) == zero_one) {
      e.group_size = 2;
      e.block = block_product(p.block(i), p.block(i + 1));
    } else {
      e.group_size = 1;
      e.block = p.block(i);
    }
    e.derived = toeplitz_derive(e.block);
    e.witness = e.derived.size() >= 3 &&
                ((e.derived[0] == 1 && e.derived[1] == 0 && e.derived[2] == 1) ||
                 (e.derived[0] == 0 && e.derived[1] == 1 && e.derived[2] == 0));
    any |= e.witness;
    i += e.group_size;
    out.push_back(std::move(e));
  }
  if (!any) {
    throw Error(ErrorCode::witness_exhausted,
                "no 01 block to pair with in the first " + std::to_string(n) + " blocks");
  }
  return out;
}

}  // namespace momo::symbolic
