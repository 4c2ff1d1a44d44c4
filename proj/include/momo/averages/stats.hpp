#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "momo/arith/arith_seq.hpp"
#include "momo/averages/observable.hpp"
#include "momo/averages/partition.hpp"
#include "momo/detail/parallel.hpp"
#include "momo/error.hpp"

// Summation order: every inner sum runs over ascending n; per-block and
// per-window values are reduced over ascending k or m on the calling thread.
// Sign-encoded inputs are summed as integers, so those paths are exact up
// to the final divisions.

namespace momo::averages {

using arith::ArithSeq;
using Complex = std::complex<double>;

/// Observables for the blocks of a partition: one per block, or one shared
/// by all blocks. Each is indexed from its block's origin.
class BlockObservables {
 public:
  static BlockObservables shared(ObservableSeq a) {
    BlockObservables b;
    b.items_.push_back(std::move(a));
    b.shared_ = true;
    return b;
  }
  static BlockObservables per_block(std::vector<ObservableSeq> items) {
    BlockObservables b;
    b.items_ = std::move(items);
    return b;
  }

  bool is_shared() const noexcept { return shared_; }
  const ObservableSeq& operator[](std::size_t k) const { return shared_ ? items_[0] : items_[k]; }
  std::size_t size() const noexcept { return items_.size(); }

 private:
  std::vector<ObservableSeq> items_;
  bool shared_ = false;
};

struct StrongMomo {
  double value = 0.0;
  std::vector<Complex> block_sums;  // S_k
  std::vector<double> z;            // |S_k| / (b_{k+1} - b_k)
};

namespace detail {

/// S_k = sum_{b_k <= n < b_{k+1}} f_k(n - b_k) u(q n + h), for every block.
inline std::vector<Complex> block_sums(const BlockPartition& cuts, const BlockObservables& blocks,
                                       const ArithSeq& u, std::uint64_t q, std::uint64_t h,
                                       const Exec& exec) {
  require(q >= 1, ErrorCode::invalid_argument, "progression modulus must be >= 1");
  const std::size_t k_count = cuts.count();
  if (!blocks.is_shared()) {
    require(blocks.size() == k_count, ErrorCode::invalid_argument,
            "need one observable per block: have " + std::to_string(blocks.size()) + ", blocks " +
                std::to_string(k_count));
  }
  for (std::size_t k = 0; k < (blocks.is_shared() ? 1 : k_count); ++k) {
    const std::uint64_t need = blocks.is_shared() ? cuts.max_gap() : cuts.gap(k);
    require_range(blocks[k].size(), need, "block observable " + std::to_string(k));
  }
  require_range(u.size(), q * (cuts.total() - 1) + h, "arithmetic function");

  std::vector<Complex> sums(k_count);
  momo::detail::parallel_chunks(k_count, exec.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      const ObservableSeq& f = blocks[k];
      const std::uint64_t b = cuts.begin(k), len = cuts.gap(k);
      if (f.is_signed() && u.is_signed()) {
        const auto fs = f.signs();
        const auto us = u.signs_with_origin();
        std::int64_t s = 0;
        for (std::uint64_t i = 0; i < len; ++i) s += fs[i] * us[q * (b + i) + h];
        sums[k] = Complex(static_cast<double>(s), 0.0);
      } else {
        Complex s = 0.0;
        for (std::uint64_t i = 0; i < len; ++i) s += f(i) * u(q * (b + i) + h);
        sums[k] = s;
      }
    }
  });
  return sums;
}

inline StrongMomo strong_from_sums(const BlockPartition& cuts, std::vector<Complex> sums) {
  StrongMomo out;
  out.z.resize(sums.size());
  // each term is |S_k / b_K|, so a single block gives |sarnak_avg| bit for bit
  const double total = static_cast<double>(cuts.total());
  for (std::size_t k = 0; k < sums.size(); ++k) {
    out.value += std::abs(sums[k] / total);
    out.z[k] = std::abs(sums[k]) / static_cast<double>(cuts.gap(k));
  }
  out.block_sums = std::move(sums);
  return out;
}

/// |sum_{m <= g < m+H} v(g)| for every m in [M, 2M), by integer sliding
/// windows; each worker seeds its first window directly.
template <class ValueAt>
std::vector<std::uint64_t> window_abs_sums(std::uint64_t m0, std::uint64_t h_len, const Exec& exec,
                                           ValueAt&& v) {
  std::vector<std::uint64_t> out(m0);
  momo::detail::parallel_chunks(m0, exec.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::int64_t s = 0;
    const std::uint64_t first = m0 + lo;
    for (std::uint64_t g = first; g < first + h_len; ++g) s += v(g);
    out[lo] = static_cast<std::uint64_t>(std::llabs(s));
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
      const std::uint64_t m = m0 + i;
      s += v(m + h_len - 1) - v(m - 1);
      out[i] = static_cast<std::uint64_t>(std::llabs(s));
    }
  });
  return out;
}

inline double mean_of_windows(const std::vector<std::uint64_t>& abs_sums, std::uint64_t h_len) {
  double acc = 0.0;
  for (std::uint64_t s : abs_sums) acc += static_cast<double>(s) / static_cast<double>(h_len);
  return acc / static_cast<double>(abs_sums.size());
}

inline void check_window_args(std::uint64_t m0, std::uint64_t h_len) {
  require(m0 >= 1 && h_len >= 1, ErrorCode::invalid_argument, "M and H must be >= 1");
}

}  // namespace detail

/// (1/N) sum_{n<N} a(n) u(n).
inline Complex sarnak_avg(const ObservableSeq& a, const ArithSeq& u, std::uint64_t n) {
  require(n >= 1, ErrorCode::invalid_argument, "N must be >= 1");
  require_range(a.size(), n, "observable");
  require_range(u.size(), n - 1, "arithmetic function");
  if (a.is_signed() && u.is_signed()) {
    const auto as = a.signs();
    const auto us = u.signs_with_origin();
    std::int64_t s = 0;
    for (std::uint64_t i = 0; i < n; ++i) s += as[i] * us[i];
    return Complex(static_cast<double>(s), 0.0) / static_cast<double>(n);
  }
  Complex s = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) s += a(i) * u(i);
  return s / static_cast<double>(n);
}

/// (1/b_K) sum_k sum_{b_k <= n < b_{k+1}} f_k(n - b_k) u(n).
inline Complex momo_sum(const BlockPartition& cuts, const BlockObservables& blocks, const ArithSeq& u,
                        const Exec& exec = {}) {
  const auto sums = detail::block_sums(cuts, blocks, u, 1, 0, exec);
  Complex acc = 0.0;
  for (const auto& s : sums) acc += s;
  return acc / static_cast<double>(cuts.total());
}

/// (1/b_K) sum_k |sum_{b_k <= n < b_{k+1}} f_k(n - b_k) u(n)|.
inline StrongMomo strong_momo_sum(const BlockPartition& cuts, const BlockObservables& blocks,
                                  const ArithSeq& u, const Exec& exec = {}) {
  return detail::strong_from_sums(cuts, detail::block_sums(cuts, blocks, u, 1, 0, exec));
}

/// Strong MOMO sum with u read along q n + h.
inline StrongMomo ap_strong_momo(const BlockObservables& blocks, const ArithSeq& u, std::uint64_t q,
                                 std::uint64_t h, const BlockPartition& cuts, const Exec& exec = {}) {
  return detail::strong_from_sums(cuts, detail::block_sums(cuts, blocks, u, q, h, exec));
}

/// (1/M) sum_{M <= m < 2M} |(1/H) sum_{m <= h < m+H} a(h) u(h)|, every m.
inline double short_interval_avg(const ObservableSeq& a, const ArithSeq& u, std::uint64_t m0,
                                 std::uint64_t h_len, const Exec& exec = {}) {
  detail::check_window_args(m0, h_len);
  const std::uint64_t top = 2 * m0 + h_len - 1;  // one past the last index
  require_range(a.size(), top, "observable");
  require_range(u.size(), top - 1, "arithmetic function");
  if (a.is_signed() && u.is_signed()) {
    const auto as = a.signs();
    const auto us = u.signs_with_origin();
    return detail::mean_of_windows(
        detail::window_abs_sums(m0, h_len, exec, [&](std::uint64_t g) { return as[g] * us[g]; }), h_len);
  }
  std::vector<double> per(m0);
  momo::detail::parallel_chunks(m0, exec.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      Complex s = 0.0;
      for (std::uint64_t g = m0 + i; g < m0 + i + h_len; ++g) s += a(g) * u(g);
      per[i] = std::abs(s);
    }
  });
  double acc = 0.0;
  for (double v : per) acc += v / static_cast<double>(h_len);
  return acc / static_cast<double>(m0);
}

/// (1/M) sum_{M <= m < 2M} |(1/H) sum_{m <= g < m+H} u(q g + h)|.
inline double ap_short_interval(const ArithSeq& u, std::uint64_t q, std::uint64_t h, std::uint64_t m0,
                                std::uint64_t h_len, const Exec& exec = {}) {
  detail::check_window_args(m0, h_len);
  require(q >= 1, ErrorCode::invalid_argument, "progression modulus must be >= 1");
  require_range(u.size(), q * (2 * m0 + h_len - 2) + h, "arithmetic function");
  if (u.is_signed()) {
    const auto us = u.signs_with_origin();
    return detail::mean_of_windows(
        detail::window_abs_sums(m0, h_len, exec, [&](std::uint64_t g) { return std::int64_t{us[q * g + h]}; }),
        h_len);
  }
  std::vector<double> per(m0);
  momo::detail::parallel_chunks(m0, exec.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      Complex s = 0.0;
      for (std::uint64_t g = m0 + i; g < m0 + i + h_len; ++g) s += u(q * g + h);
      per[i] = std::abs(s);
    }
  });
  double acc = 0.0;
  for (double v : per) acc += v / static_cast<double>(h_len);
  return acc / static_cast<double>(m0);
}

/// Quadrants are indexed [e][f] with index 0 for +1 and 1 for -1.
struct QuadrantTable {
  std::array<std::array<double, 2>, 2> deviation{};         // (1/M) sum_m |count/H - 1/4|
  std::array<std::array<double, 2>, 2> global_frequency{};  // over [M, 2M+H-1)
  double max_deviation = 0.0;
};

/// Window frequencies of the four sign patterns (x(h), u(h)) = (e, f).
inline QuadrantTable quadrant_freq(const ObservableSeq& x, const ArithSeq& u, std::uint64_t m0,
                                   std::uint64_t h_len, const Exec& exec = {}) {
  detail::check_window_args(m0, h_len);
  const std::uint64_t top = 2 * m0 + h_len - 1;
  require_range(x.size(), top, "observable");
  require_range(u.size(), top - 1, "arithmetic function");
  require(x.is_signed() && u.is_signed(), ErrorCode::invalid_argument,
          "quadrant frequencies need +-1 sequences");
  const auto xs = x.signs();
  const auto us = u.signs_with_origin();
  for (std::uint64_t h = m0; h < top; ++h) {
    require(xs[h] != 0 && us[h] != 0, ErrorCode::invalid_argument,
            "quadrant frequencies need +-1 values; zero at n = " + std::to_string(h));
  }
  auto key = [&](std::uint64_t h) { return (xs[h] < 0 ? 2 : 0) + (us[h] < 0 ? 1 : 0); };

  std::vector<std::array<std::uint32_t, 4>> counts(m0);
  momo::detail::parallel_chunks(m0, exec.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::array<std::uint32_t, 4> c{};
    for (std::uint64_t g = m0 + lo; g < m0 + lo + h_len; ++g) ++c[key(g)];
    counts[lo] = c;
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
      const std::uint64_t m = m0 + i;
      --c[key(m - 1)];
      ++c[key(m + h_len - 1)];
      counts[i] = c;
    }
  });

  QuadrantTable out;
  std::array<double, 4> acc{};
  for (const auto& c : counts) {
    for (int j = 0; j < 4; ++j) acc[j] += std::abs(static_cast<double>(c[j]) / static_cast<double>(h_len) - 0.25);
  }
  std::array<std::uint64_t, 4> global{};
  for (std::uint64_t h = m0; h < top; ++h) ++global[key(h)];
  for (int j = 0; j < 4; ++j) {
    out.deviation[j / 2][j % 2] = acc[j] / static_cast<double>(m0);
    out.global_frequency[j / 2][j % 2] =
        static_cast<double>(global[j]) / static_cast<double>(top - m0);
    out.max_deviation = std::max(out.max_deviation, out.deviation[j / 2][j % 2]);
  }
  return out;
}

/// (1/N) sum_{n<N} a(r n) conj(a(s n)) for distinct primes r, s.
inline Complex kbsz_corr(const ObservableSeq& a, std::uint64_t r, std::uint64_t s, std::uint64_t n) {
  auto is_prime = [](std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  };
  require(is_prime(r) && is_prime(s), ErrorCode::invalid_argument, "r and s must be prime");
  require(r != s, ErrorCode::invalid_argument, "r and s must differ");
  require(n >= 1, ErrorCode::invalid_argument, "N must be >= 1");
  require_range(a.size(), std::max(r, s) * (n - 1) + 1, "observable");
  if (a.is_signed()) {
    const auto as = a.signs();
    std::int64_t acc = 0;
    for (std::uint64_t i = 0; i < n; ++i) acc += as[r * i] * as[s * i];
    return Complex(static_cast<double>(acc), 0.0) / static_cast<double>(n);
  }
  Complex acc = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) acc += a(r * i) * std::conj(a(s * i));
  return acc / static_cast<double>(n);
}

}  // namespace momo::averages
