#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "momo/arith/arith_seq.hpp"
#include "momo/detail/phase.hpp"
#include "momo/error.hpp"

namespace momo::arith {

inline constexpr std::uint32_t kDefaultQMax = 100;

struct DirichletCharacter {
  std::uint32_t modulus = 1;
  std::vector<std::complex<double>> table;  // table[n mod q]
  bool principal = true;

  std::complex<double> operator()(std::uint64_t n) const { return table[n % modulus]; }
};

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// One cyclic factor of (Z/p^e)^*: discrete logs of every residue mod p^e
// with respect to `generator`, or -1 for non-units.
struct CyclicFactor {
  std::uint32_t modulus;
  std::uint32_t order;
  std::vector<std::int64_t> log;
};

inline std::uint32_t primitive_root_mod_p(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2;; ++g) {
    bool ok = true;
    for (std::uint32_t f : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

// Generates the cyclic factors for p^e; for p = 2 this is {-1} x {5}.
inline std::vector<CyclicFactor> unit_group_factors(std::uint32_t p, int e) {
  std::uint32_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  std::vector<CyclicFactor> out;
  if (p != 2) {
    std::uint64_t g = primitive_root_mod_p(p);
    if (e > 1 && pow_mod(g, p - 1, std::uint64_t{p} * p) == 1) g += p;
    const std::uint32_t order = pe / p * (p - 1);
    CyclicFactor f{pe, order, std::vector<std::int64_t>(pe, -1)};
    std::uint64_t x = 1;
    for (std::uint32_t k = 0; k < order; ++k) {
      f.log[x] = k;
      x = x * g % pe;
    }
    out.push_back(std::move(f));
    return out;
  }
  if (e == 1) return out;
  // n = (-1)^a 5^b mod 2^e, b < 2^{e-2}
  CyclicFactor sign{pe, 2, std::vector<std::int64_t>(pe, -1)};
  CyclicFactor five{pe, pe / 4, std::vector<std::int64_t>(pe, -1)};
  std::uint64_t x = 1;
  for (std::uint32_t b = 0; b < pe / 4; ++b) {
    sign.log[x] = 0;
    five.log[x] = b;
    const std::uint64_t neg = (pe - x) % pe;
    sign.log[neg] = 1;
    five.log[neg] = b;
    x = x * 5 % pe;
  }
  out.push_back(std::move(sign));
  if (e >= 3) out.push_back(std::move(five));
  return out;
}

}  // namespace detail

/// All phi(q) Dirichlet characters mod q, principal first.
///
/// Built from the CRT decomposition of (Z/q)^*: a primitive root for each
/// odd prime power, {-1, 5} for powers of two. Character number j assigns
/// exponent digits (j_1, ..., j_r) to the cyclic generators, first generator
/// most significant.
inline std::vector<DirichletCharacter> dirichlet_characters(std::uint32_t q,
                                                            std::uint32_t q_max = kDefaultQMax) {
  require(q >= 1, ErrorCode::invalid_argument, "modulus must be >= 1");
  if (q > q_max) {
    throw Error(ErrorCode::unsupported_modulus,
                "modulus " + std::to_string(q) + " exceeds Q_MAX " + std::to_string(q_max));
  }
  std::vector<detail::CyclicFactor> factors;
  {
    std::uint32_t m = q;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      for (auto& f : detail::unit_group_factors(p, e)) factors.push_back(std::move(f));
    }
    if (m > 1) {
      for (auto& f : detail::unit_group_factors(m, 1)) factors.push_back(std::move(f));
    }
  }

  std::uint64_t count = 1;
  std::uint64_t period = 1;  // lcm of generator orders
  for (const auto& f : factors) {
    count *= f.order;
    period = std::lcm(period, std::uint64_t{f.order});
  }

  // exponent vectors of every unit residue mod q
  std::vector<std::vector<std::int64_t>> logs(q);
  std::vector<char> unit(q, 0);
  for (std::uint32_t n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    unit[n] = 1;
    auto& v = logs[n];
    for (const auto& f : factors) v.push_back(f.log[n % f.modulus]);
  }

  std::vector<DirichletCharacter> out;
  out.reserve(count);
  std::vector<std::uint64_t> digits(factors.size(), 0);
  for (std::uint64_t j = 0; j < count; ++j) {
    std::uint64_t rest = j;
    for (std::size_t i = factors.size(); i-- > 0;) {
      digits[i] = rest % factors[i].order;
      rest /= factors[i].order;
    }
    DirichletCharacter chi{q, std::vector<std::complex<double>>(q, {0.0, 0.0}), j == 0};
    for (std::uint32_t n = 0; n < q; ++n) {
      if (!unit[n]) continue;
      std::uint64_t phase = 0;  // in units of 1/period turns
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::uint64_t step = period / factors[i].order;
        phase = (phase + digits[i] * static_cast<std::uint64_t>(logs[n][i]) % factors[i].order *
                             step) % period;
      }
      chi.table[n] = momo::detail::root_of_unity(phase, period);
    }
    out.push_back(std::move(chi));
  }
  return out;
}

inline ArithSeq character_seq(const DirichletCharacter& chi, std::uint64_t n) {
  std::vector<std::complex<double>> values(n);
  for (std::uint64_t k = 1; k <= n; ++k) values[k - 1] = chi(k);
  return ArithSeq::from_complex(SeqTag::character, values);
}

/// n -> chi(n) n^{it}
inline ArithSeq twist_seq(const DirichletCharacter& chi, double t, std::uint64_t n) {
  std::vector<std::complex<double>> values(n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    values[k - 1] = chi(k) * std::polar(1.0, t * std::log(static_cast<double>(k)));
  }
  return ArithSeq::from_complex(SeqTag::twist, values);
}

}  // namespace momo::arith
