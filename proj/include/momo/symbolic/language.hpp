#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "momo/symbolic/word.hpp"

namespace momo::symbolic {

/// Distinct length-L factors of the first n_scan symbols of `source`,
/// sorted lexicographically. A prefix scan, not a certified language:
/// factors that first occur beyond n_scan are missed.
inline std::vector<Word> admissible_words(std::span<const Symbol> source, std::size_t length,
                                          std::size_t n_scan) {
  const std::size_t n = std::min(n_scan, source.size());
  if (length == 0 || length > n) return {};
  std::vector<std::size_t> starts(n - length + 1);
  std::iota(starts.begin(), starts.end(), std::size_t{0});
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(source.begin() + a, source.begin() + a + length,
                                        source.begin() + b, source.begin() + b + length);
  };
  std::sort(starts.begin(), starts.end(), [&](std::size_t a, std::size_t b) {
    return less(a, b) || (!less(b, a) && a < b);
  });
  std::vector<Word> out;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (i > 0 && !less(starts[i - 1], starts[i])) continue;
    out.emplace_back(source.begin() + starts[i], source.begin() + starts[i] + length);
  }
  return out;
}

/// Suffix array of `text` by prefix doubling.
inline std::vector<std::size_t> suffix_array(std::span<const Symbol> text) {
  const std::size_t n = text.size();
  std::vector<std::size_t> sa(n), rank(n), tmp(n);
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) rank[i] = text[i];
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::size_t i) {
      return std::pair<std::size_t, std::size_t>{rank[i], i + k < n ? rank[i + k] + 1 : 0};
    };
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]));
    rank.swap(tmp);
    if (n == 0 || rank[sa[n - 1]] == n - 1 || k >= n) break;
  }
  return sa;
}

/// lcp[i] = longest common prefix of the suffixes at sa[i-1] and sa[i]
/// (lcp[0] = 0), by Kasai's algorithm.
inline std::vector<std::size_t> lcp_array(std::span<const Symbol> text, const std::vector<std::size_t>& sa) {
  const std::size_t n = text.size();
  std::vector<std::size_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = i;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace momo::symbolic
