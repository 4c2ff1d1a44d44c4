#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "momo/arith/sieve.hpp"
#include "momo/detail/phase.hpp"
#include "momo/error.hpp"
#include "momo/symbolic/word.hpp"

namespace momo::averages {

/// A realization n -> f(T^n x) for 0 <= n < N.
///
/// Observables are 0-based; they meet arithmetic functions at the same
/// literal n. Values in {-1,0,+1} are kept as bytes so the statistics can
/// sum them as integers.
class ObservableSeq {
 public:
  ObservableSeq() = default;

  static ObservableSeq from_signs(std::vector<std::int8_t> values, std::string description) {
    ObservableSeq a;
    for (std::int8_t v : values) {
      require(v >= -1 && v <= 1, ErrorCode::invalid_argument, "sign observable outside {-1,0,+1}");
      if (v != 0) a.sup_bound_ = 1.0;
    }
    a.signs_ = std::move(values);
    a.signed_ = true;
    a.description_ = std::move(description);
    return a;
  }

  /// Demotes to the sign encoding when every value is exactly -1, 0 or +1.
  static ObservableSeq from_complex(std::vector<std::complex<double>> values, std::string description) {
    bool signs = true;
    double sup = 0.0;
    for (const auto& v : values) {
      require(std::isfinite(v.real()) && std::isfinite(v.imag()), ErrorCode::invalid_argument,
              "observable value is not finite");
      sup = std::max(sup, std::abs(v));
      signs = signs && v.imag() == 0.0 && (v.real() == 0.0 || v.real() == 1.0 || v.real() == -1.0);
    }
    if (signs) {
      std::vector<std::int8_t> s(values.size());
      for (std::size_t i = 0; i < values.size(); ++i) s[i] = static_cast<std::int8_t>(values[i].real());
      return from_signs(std::move(s), std::move(description));
    }
    ObservableSeq a;
    a.complex_ = std::move(values);
    a.sup_bound_ = sup;
    a.description_ = std::move(description);
    return a;
  }

  std::uint64_t size() const noexcept { return signed_ ? signs_.size() : complex_.size(); }
  bool is_signed() const noexcept { return signed_; }
  double sup_bound() const noexcept { return sup_bound_; }
  const std::string& description() const noexcept { return description_; }

  std::complex<double> operator()(std::uint64_t n) const {
    if (signed_) return {static_cast<double>(signs_[n]), 0.0};
    return complex_[n];
  }
  std::int8_t sign(std::uint64_t n) const { return signs_[n]; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  /// True when every value is +-1.
  bool is_unimodular_sign() const noexcept {
    if (!signed_) return false;
    for (std::int8_t v : signs_) {
      if (v == 0) return false;
    }
    return true;
  }

 private:
  bool signed_ = false;
  std::vector<std::int8_t> signs_;
  std::vector<std::complex<double>> complex_;
  double sup_bound_ = 0.0;
  std::string description_;
};

inline ObservableSeq constant_observable(std::complex<double> c, std::uint64_t n) {
  return ObservableSeq::from_complex(std::vector<std::complex<double>>(n, c), "f = const");
}

/// e^{2 pi i alpha n}; the phase alpha*n mod 1 is reduced in long double.
inline ObservableSeq rotation_observable(double alpha, std::uint64_t n) {
  require(n >= 1, ErrorCode::invalid_argument, "rotation observable needs N >= 1");
  require(alpha >= 0.0 && alpha < 1.0, ErrorCode::invalid_argument, "alpha must lie in [0, 1)");
  std::vector<std::complex<double>> v(n);
  const long double a = alpha;
  for (std::uint64_t i = 0; i < n; ++i) {
    v[i] = momo::detail::unit_phase(std::fmod(a * static_cast<long double>(i), 1.0L));
  }
  return ObservableSeq::from_complex(std::move(v), "f(z) = z along the rotation by alpha");
}

/// (-1)^{popcount(n & mask)} for n = start, ..., start+N-1.
inline ObservableSeq digit_sign_observable(std::uint64_t mask, std::uint64_t n, std::uint64_t start,
                                           std::string description) {
  std::vector<std::int8_t> v(n);
  for (std::uint64_t i = 0; i < n; ++i) v[i] = (std::popcount((start + i) & mask) & 1) ? -1 : 1;
  return ObservableSeq::from_signs(std::move(v), std::move(description));
}

/// (-1)^{x_A(n)} for n = start, ..., start+N-1.
inline ObservableSeq kakutani_sign_observable(const arith::DigitSet& a, std::uint64_t n,
                                              std::uint64_t start = 0) {
  return digit_sign_observable(a.mask(), n, start, "f(z) = (-1)^{z(0)} along a Kakutani orbit");
}

inline ObservableSeq tm_sign_observable(std::uint64_t n, std::uint64_t start = 0) {
  return digit_sign_observable(~std::uint64_t{0}, n, start, "f(z) = (-1)^{z(0)} along the Thue-Morse orbit");
}

/// Window observable along a symbolic orbit: value f(x[start+n .. start+n+w)).
using WindowFn = std::function<std::complex<double>(std::span<const symbolic::Symbol>)>;

inline ObservableSeq window_observable(std::span<const symbolic::Symbol> x, std::size_t width,
                                       const WindowFn& f, std::uint64_t n, std::uint64_t start = 0,
                                       std::string description = "f(z) = window function") {
  require(width >= 1, ErrorCode::invalid_argument, "window width must be >= 1");
  require_range(x.size(), start + n + width - 1, "symbolic orbit");
  std::vector<std::complex<double>> v(n);
  for (std::uint64_t i = 0; i < n; ++i) v[i] = f(x.subspan(start + i, width));
  return ObservableSeq::from_complex(std::move(v), std::move(description));
}

/// (-1)^{x(start+n)} for a 0/1 word.
inline ObservableSeq word_sign_observable(std::span<const symbolic::Symbol> x, std::uint64_t n,
                                          std::uint64_t start = 0) {
  require_range(x.size(), start + n, "symbolic orbit");
  std::vector<std::int8_t> v(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    require(x[start + i] <= 1, ErrorCode::invalid_argument, "word is not binary");
    v[i] = x[start + i] ? -1 : 1;
  }
  return ObservableSeq::from_signs(std::move(v), "f(z) = (-1)^{z(0)} along a symbolic orbit");
}

}  // namespace momo::averages
