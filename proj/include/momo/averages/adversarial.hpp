#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "momo/arith/arith_seq.hpp"
#include "momo/averages/observable.hpp"
#include "momo/averages/partition.hpp"
#include "momo/detail/parallel.hpp"
#include "momo/error.hpp"
#include "momo/symbolic/language.hpp"

namespace momo::averages {

struct AdversarialOptions {
  std::size_t beam = 64;                        // greedy beam width
  std::uint64_t exhaustive_limit = 1ULL << 20;  // enumerate when #words <= this
  std::size_t n_scan = 0;                       // scanned prefix of the source; 0 = all
};

/// A lower bound for the supremum over point sequences: the scanned
/// language is finite and the greedy path may miss the best word.
struct AdversarialResult {
  double value = 0.0;                     // (1/b_K) sum_k max |S_k|
  std::vector<double> block_abs;          // max |S_k| found per block
  std::vector<symbolic::Word> witnesses;  // the word realizing it
  std::vector<bool> exhaustive;           // block searched exhaustively
  std::vector<std::uint64_t> word_counts; // admissible words of the block's length
};

namespace detail_adv {

struct Language {
  std::span<const symbolic::Symbol> text;
  std::vector<std::size_t> sa, lcp;
  std::vector<std::complex<double>> fv;  // f at each window start
  std::size_t alphabet = 0;
};

/// One representative start for every distinct factor of length len.
inline std::vector<std::size_t> factor_starts(const Language& lang, std::size_t len) {
  std::vector<std::size_t> starts;
  const std::size_t n = lang.text.size();
  // run_lcp: common prefix with the last accepted suffix
  std::size_t run_lcp = n;
  bool have = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) run_lcp = std::min(run_lcp, lang.lcp[i]);
    if (n - lang.sa[i] < len) continue;
    if (!have || run_lcp < len) starts.push_back(lang.sa[i]);
    have = true;
    run_lcp = n;
  }
  return starts;
}

inline std::complex<double> window_sum(const Language& lang, std::size_t start, std::uint64_t b,
                                       std::uint64_t len, const arith::ArithSeq& u) {
  std::complex<double> s = 0.0;
  for (std::uint64_t i = 0; i < len; ++i) s += lang.fv[start + i] * u(b + i);
  return s;
}

struct BeamState {
  std::size_t lo = 0, hi = 0;  // SA interval of the current prefix
  std::complex<double> partial = 0.0;
};

/// Greedy left-to-right extension keeping the `beam` prefixes with largest |partial sum|.
inline std::pair<double, std::size_t> beam_search(const Language& lang, std::uint64_t b, std::uint64_t gap,
                                                  std::size_t width, const arith::ArithSeq& u,
                                                  std::size_t beam) {
  const std::size_t len = gap + width - 1;
  const std::size_t n = lang.text.size();
  std::vector<BeamState> states{{0, n, 0.0}};
  for (std::size_t depth = 0; depth < len; ++depth) {
    std::vector<BeamState> next;
    for (const auto& st : states) {
      // suffixes in [lo, hi) share `depth` symbols and are sorted by the next one
      std::size_t lo = st.lo;
      while (lo < st.hi && n - lang.sa[lo] <= depth) ++lo;
      for (std::size_t c = 0; c < lang.alphabet; ++c) {
        auto sym_at = [&](std::size_t idx) { return lang.text[lang.sa[idx] + depth]; };
        std::size_t a = lo, z = st.hi;
        // lower bound for c
        std::size_t l = a, r = z;
        while (l < r) {
          const std::size_t mid = (l + r) / 2;
          if (sym_at(mid) < c) l = mid + 1; else r = mid;
        }
        a = l;
        r = z;
        while (l < r) {
          const std::size_t mid = (l + r) / 2;
          if (sym_at(mid) <= c) l = mid + 1; else r = mid;
        }
        z = l;
        if (a == z) continue;
        BeamState child{a, z, st.partial};
        if (depth + 1 >= width) {
          const std::uint64_t i = depth + 1 - width;
          child.partial += lang.fv[lang.sa[a] + i] * u(b + i);
        }
        next.push_back(child);
      }
    }
    if (next.size() > beam) {
      std::stable_sort(next.begin(), next.end(), [](const BeamState& x, const BeamState& y) {
        return std::abs(x.partial) > std::abs(y.partial);
      });
      next.resize(beam);
    }
    states = std::move(next);
  }
  double best = -1.0;
  std::size_t start = 0;
  for (const auto& st : states) {
    const double v = std::abs(st.partial);
    if (v > best) {
      best = v;
      start = lang.sa[st.lo];
    }
  }
  return {best, start};
}

}  // namespace detail_adv

/// Per block, maximizes |sum_{b_k <= n < b_{k+1}} f(w[n-b_k .. n-b_k+width)) u(n)|
/// over admissible words w of length gap_k + width - 1.
inline AdversarialResult adversarial_strong_momo(std::span<const symbolic::Symbol> source, std::size_t width,
                                                 const WindowFn& f, const arith::ArithSeq& u,
                                                 const BlockPartition& cuts, const AdversarialOptions& opts = {},
                                                 const Exec& exec = {}) {
  require(width >= 1, ErrorCode::invalid_argument, "window width must be >= 1");
  require(opts.beam >= 1, ErrorCode::invalid_argument, "beam must be >= 1");
  const std::size_t n_scan = opts.n_scan == 0 ? source.size() : std::min(opts.n_scan, source.size());
  require_range(n_scan, cuts.max_gap() + width - 1, "scanned language");
  require_range(u.size(), cuts.total() - 1, "arithmetic function");

  detail_adv::Language lang;
  lang.text = source.first(n_scan);
  lang.sa = symbolic::suffix_array(lang.text);
  lang.lcp = symbolic::lcp_array(lang.text, lang.sa);
  for (auto s : lang.text) lang.alphabet = std::max<std::size_t>(lang.alphabet, s + 1u);
  lang.fv.resize(n_scan - width + 1);
  for (std::size_t p = 0; p + width <= n_scan; ++p) lang.fv[p] = f(lang.text.subspan(p, width));

  const std::size_t k_count = cuts.count();
  AdversarialResult out;
  out.block_abs.resize(k_count);
  out.witnesses.resize(k_count);
  out.exhaustive.resize(k_count);
  out.word_counts.resize(k_count);
  std::vector<char> exhaustive(k_count);
  momo::detail::parallel_chunks(k_count, exec.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      const std::uint64_t b = cuts.begin(k), gap = cuts.gap(k);
      const std::size_t len = gap + width - 1;
      const auto starts = detail_adv::factor_starts(lang, len);
      out.word_counts[k] = starts.size();
      std::size_t best_start = 0;
      double best = -1.0;
      if (starts.size() <= opts.exhaustive_limit) {
        exhaustive[k] = 1;
        for (std::size_t p : starts) {
          const double v = std::abs(detail_adv::window_sum(lang, p, b, gap, u));
          if (v > best) {
            best = v;
            best_start = p;
          }
        }
      } else {
        std::tie(best, best_start) = detail_adv::beam_search(lang, b, gap, width, u, opts.beam);
      }
      out.block_abs[k] = best;
      out.witnesses[k].assign(lang.text.begin() + best_start, lang.text.begin() + best_start + len);
    }
  });
  // same normalization as strong_momo_sum
  const double total = static_cast<double>(cuts.total());
  for (std::size_t k = 0; k < k_count; ++k) {
    out.value += out.block_abs[k] / total;
    out.exhaustive[k] = exhaustive[k] != 0;
  }
  return out;
}

}  // namespace momo::averages
