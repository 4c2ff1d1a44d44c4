#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "momo/detail/fnv.hpp"

namespace momo::averages {

/// One statistic with the parameters that produced it. `hash` covers the
/// name, the parameters and the value bits, so equal hashes mean a
/// bit-identical recomputation.
struct AverageReport {
  std::string statistic;
  std::complex<double> value;
  std::uint64_t n_terms = 0;
  std::vector<std::pair<std::string, std::string>> parameters;  // in insertion order

  AverageReport& param(std::string key, std::string v) {
    parameters.emplace_back(std::move(key), std::move(v));
    return *this;
  }

  std::uint64_t hash() const {
    momo::detail::Fnv1a h;
    h.text(statistic);
    for (const auto& [k, v] : parameters) {
      h.text(k);
      h.text(v);
    }
    h.value(value.real());
    h.value(value.imag());
    h.value(n_terms);
    return h.digest();
  }
};

}  // namespace momo::averages
