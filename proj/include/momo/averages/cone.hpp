#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "momo/averages/partition.hpp"
#include "momo/error.hpp"

namespace momo::averages {

/// The third roots of unity 1, e^{2 pi i/3}, e^{4 pi i/3}, in that order.
inline const std::array<std::complex<double>, 3>& third_roots() {
  static const std::array<std::complex<double>, 3> roots{
      std::complex<double>{1.0, 0.0},
      std::complex<double>{-0.5, std::sqrt(3.0) / 2.0},
      std::complex<double>{-0.5, -std::sqrt(3.0) / 2.0},
  };
  return roots;
}

struct ConeRotation {
  std::vector<std::uint8_t> index;           // e_k = third_roots()[index[k]]
  std::vector<std::complex<double>> rotated;  // e_k c_k
};

/// Picks e_k with arg(e_k c_k) in [-pi/3, pi/3], i.e. the root maximizing
/// Re(e c). Near-ties (a cone boundary) go to the smallest index.
inline ConeRotation cone_rotate(std::span<const std::complex<double>> values) {
  const auto& roots = third_roots();
  ConeRotation out;
  out.index.reserve(values.size());
  out.rotated.reserve(values.size());
  for (const auto& c : values) {
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(c);
    std::uint8_t best = 0;
    double best_re = (roots[0] * c).real();
    for (std::uint8_t j = 1; j < 3; ++j) {
      const double re = (roots[j] * c).real();
      if (re > best_re + slack) {
        best = j;
        best_re = re;
      }
    }
    out.index.push_back(best);
    out.rotated.push_back(best == 0 ? c : roots[best] * c);
  }
  return out;
}

struct BadIntervals {
  std::vector<std::size_t> blocks;  // selected k, ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals;  // [b_k, b_{k+1})
  double density = 0.0;        // |union| / b_K
  double upper_density = 0.0;  // max over the last half of the cuts of |union cap [0, b_j)| / b_j
  double density_floor = 0.0;  // eps0 / (2 sup_bound)
};

/// Blocks with z_k >= eps0/2, as intervals, and the density of their union.
inline BadIntervals bad_intervals(std::span<const double> z, const BlockPartition& cuts, double eps0,
                                  double sup_bound = 1.0) {
  require(eps0 > 0.0, ErrorCode::invalid_argument, "eps0 must be positive");
  require(sup_bound > 0.0, ErrorCode::invalid_argument, "sup bound must be positive");
  require(z.size() == cuts.count(), ErrorCode::invalid_argument, "need one z_k per block");
  BadIntervals out;
  out.density_floor = eps0 / (2.0 * sup_bound);
  std::uint64_t covered = 0;
  const std::size_t tail = cuts.count() / 2;
  for (std::size_t k = 0; k < cuts.count(); ++k) {
    if (z[k] >= eps0 / 2.0) {
      out.blocks.push_back(k);
      out.intervals.emplace_back(cuts.begin(k), cuts.end(k));
      covered += cuts.gap(k);
    }
    if (k >= tail) {
      out.upper_density = std::max(out.upper_density, static_cast<double>(covered) /
                                                          static_cast<double>(cuts.end(k)));
    }
  }
  out.density = static_cast<double>(covered) / static_cast<double>(cuts.total());
  return out;
}

}  // namespace momo::averages
