#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momo/arith.hpp"
#include "momo/averages.hpp"
#include "momo/cli/config.hpp"
#include "momo/cli/csv.hpp"
#include "momo/detail/parallel.hpp"
#include "momo/entropy.hpp"
#include "momo/symbolic.hpp"

namespace momo::cli {

/// A grid point: computes its rows with the worker budget it is handed.
using Task = std::function<std::vector<Row>(const Exec&)>;

struct Suite {
  std::string name;
  std::string summary;
  json defaults;
  std::function<std::vector<Task>(ParamReader&)> plan;
};

namespace suite_detail {

using SeqPtr = std::shared_ptr<const arith::ArithSeq>;

struct Window {
  std::uint64_t m = 0, h = 0;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline std::vector<Window> read_grid(ParamReader& r, const std::string& key = "grid") {
  const json& arr = r.array(key);
  std::vector<Window> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    ParamReader w(arr[i], r.child(key) + "/" + std::to_string(i));
    Window g;
    g.m = w.u64("M", 1);
    g.h = w.u64("H", 1);
    w.finish();
    out.push_back(g);
  }
  return out;
}

/// "mobius" | "liouville", realized to n (or to `sieve_n` when the config caps it).
inline std::string read_arith(ParamReader& r, const std::vector<std::string>& allowed = {"mobius", "liouville"}) {
  return r.text("u", allowed);
}

inline std::optional<std::uint64_t> read_sieve_cap(ParamReader& r) {
  if (!r.has("sieve_n")) return std::nullopt;
  return r.u64("sieve_n", 1);
}

inline SeqPtr realize(const std::string& name, std::uint64_t need, std::optional<std::uint64_t> cap) {
  const std::uint64_t n = cap.value_or(std::max<std::uint64_t>(need, 1));
  if (name == "mobius") return std::make_shared<const arith::ArithSeq>(arith::sieve_mobius(n));
  return std::make_shared<const arith::ArithSeq>(arith::sieve_liouville(n));
}

struct CutSpec {
  bool power = true;
  averages::PowerCuts p;
  averages::LinearGrowingCuts l;
  json described;

  averages::BlockPartition make(std::uint64_t limit) const {
    return power ? averages::make_cuts(p, limit) : averages::make_cuts(l, limit);
  }
};

inline CutSpec read_cuts(ParamReader& parent, const std::string& key = "cuts") {
  ParamReader r = parent.object(key);
  CutSpec c;
  const std::string kind = r.text("kind", {"power", "linear_growing"});
  c.power = kind == "power";
  if (c.power) {
    c.p.c = r.real("c");
    c.p.gamma = r.real("gamma");
    if (c.p.gamma <= 1.0) throw ConfigError(r.child("gamma"), "gaps-not-divergent: gamma must be > 1");
    if (c.p.c < 1.0) throw ConfigError(r.child("c"), "must be >= 1");
    c.described = {{"kind", kind}, {"c", c.p.c}, {"gamma", c.p.gamma}};
  } else {
    c.l.c = r.u64("c", 1);
    c.described = {{"kind", kind}, {"c", c.l.c}};
  }
  r.finish();
  return c;
}

inline arith::DigitSet read_digit_set(ParamReader& parent, const std::string& key) {
  ParamReader r = parent.object(key);
  arith::DigitSet a;
  const json& pos = r.array("positions");
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const auto p = ParamReader::as_u64(pos[i], r.child("positions") + "/" + std::to_string(i));
    if (p >= 64) throw ConfigError(r.child("positions") + "/" + std::to_string(i), "digit positions must be < 64");
    a.positions.insert(static_cast<unsigned>(p));
  }
  a.complement = r.boolean("complement");
  r.finish();
  return a;
}

inline json describe(const arith::DigitSet& a) {
  return {{"positions", std::vector<unsigned>(a.positions.begin(), a.positions.end())}, {"complement", a.complement}};
}

struct ObservableSpec {
  std::string kind;  // constant | rotation | tm | kakutani
  double value = 1.0;
  double alpha = 0.0;
  arith::DigitSet digits;
  json described;

  averages::ObservableSeq make(std::uint64_t n) const {
    if (kind == "constant") return averages::constant_observable(value, n);
    if (kind == "rotation") return averages::rotation_observable(alpha, n);
    if (kind == "tm") return averages::tm_sign_observable(n);
    return averages::kakutani_sign_observable(digits, n);
  }
};

inline ObservableSpec read_observable(const json& j, const std::string& pointer) {
  ParamReader r(j, pointer);
  ObservableSpec o;
  o.kind = r.text("kind", {"constant", "rotation", "tm", "kakutani"});
  o.described = {{"kind", o.kind}};
  if (o.kind == "constant") {
    if (r.has("value")) o.value = r.real("value");
    if (std::abs(o.value) > 1.0) throw ConfigError(r.child("value"), "constant must lie in [-1, 1]");
    o.described["value"] = o.value;
  } else if (o.kind == "rotation") {
    o.alpha = r.real("alpha");
    if (!(o.alpha >= 0.0 && o.alpha < 1.0)) throw ConfigError(r.child("alpha"), "alpha must lie in [0, 1)");
    o.described["alpha"] = o.alpha;
  } else if (o.kind == "kakutani") {
    o.digits = read_digit_set(r, "A");
    o.described["A"] = describe(o.digits);
  }
  r.finish();
  return o;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::vector<Row> stamp(std::vector<Row> rows, const Stopwatch& sw) {
  const double ms = sw.ms();
  for (auto& r : rows) r.wall_ms = ms;
  return rows;
}

inline Row row(std::string statistic, json params, std::complex<double> value, std::uint64_t n_terms) {
  return Row{std::move(statistic), std::move(params), value, n_terms, 0.0};
}

// ---- suites ----------------------------------------------------------------

inline std::vector<Task> plan_mobius_like(ParamReader& r) {
  const std::string u_name = read_arith(r);
  const CutSpec cuts = read_cuts(r);
  const json& limits_j = r.array("limits");
  std::vector<std::uint64_t> limits;
  for (std::size_t i = 0; i < limits_j.size(); ++i) {
    limits.push_back(ParamReader::as_u64(limits_j[i], r.child("limits") + "/" + std::to_string(i), 2));
  }
  const auto cap = read_sieve_cap(r);
  r.finish();
  if (limits.empty()) return {};
  const SeqPtr u = realize(u_name, *std::max_element(limits.begin(), limits.end()), cap);
  std::vector<Task> tasks;
  for (std::uint64_t limit : limits) {
    tasks.push_back([=](const Exec& exec) {
      Stopwatch sw;
      const auto p = cuts.make(limit);
      const auto blocks = averages::BlockObservables::shared(averages::constant_observable(1.0, p.max_gap()));
      const auto strong = averages::strong_momo_sum(p, blocks, *u, exec);
      const json params = {{"u", u_name}, {"f", "const 1"}, {"cuts", cuts.described}, {"limit", limit},
                           {"b_K", p.total()}, {"K", p.count()}, {"min_gap", p.min_gap()},
                           {"max_gap", p.max_gap()}, {"tail_min_gap", p.min_gap_from(p.count() / 2)},
                           {"cuts_fnv1a", p.hash()}};
      return stamp({row("strong_momo", params, strong.value, p.total()),
                    row("momo", params, averages::momo_sum(p, blocks, *u, exec), p.total())},
                   sw);
    });
  }
  return tasks;
}

/// Quadrant table and short-interval average for x = (-1)^{x_A}, u = lambda.
inline std::vector<Task> plan_quadrants(ParamReader& r, bool general_a) {
  arith::DigitSet a = arith::DigitSet::all();
  if (general_a) a = read_digit_set(r, "A");
  const auto grid = read_grid(r);
  const auto cap = read_sieve_cap(r);
  r.finish();
  if (grid.empty()) return {};
  std::uint64_t need = 1;
  for (const auto& g : grid) need = std::max(need, 2 * g.m + g.h - 2);
  const SeqPtr u = realize("liouville", need, cap);
  std::vector<Task> tasks;
  for (const auto& g : grid) {
    tasks.push_back([=](const Exec& exec) {
      Stopwatch sw;
      const auto x = averages::kakutani_sign_observable(a, 2 * g.m + g.h - 1);
      const json base = {{"x", "kakutani-sign"}, {"A", describe(a)}, {"u", "liouville"}, {"M", g.m}, {"H", g.h}};
      std::vector<Row> rows;
      rows.push_back(row("short_interval_avg", base, averages::short_interval_avg(x, *u, g.m, g.h, exec), g.m * g.h));
      const auto table = averages::quadrant_freq(x, *u, g.m, g.h, exec);
      const int signs[2] = {1, -1};
      for (int e = 0; e < 2; ++e) {
        for (int f = 0; f < 2; ++f) {
          json p = base;
          p["e"] = signs[e];
          p["f"] = signs[f];
          rows.push_back(row("quadrant_deviation", p, table.deviation[e][f], g.m * g.h));
        }
      }
      rows.push_back(row("quadrant_max_deviation", base, table.max_deviation, g.m * g.h));
      for (int e = 0; e < 2; ++e) {
        for (int f = 0; f < 2; ++f) {
          json p = base;
          p["e"] = signs[e];
          p["f"] = signs[f];
          rows.push_back(row("quadrant_global_frequency", p, table.global_frequency[e][f], g.m + g.h - 1));
        }
      }
      return stamp(std::move(rows), sw);
    });
  }
  return tasks;
}

inline std::vector<Task> plan_short_interval(ParamReader& r) {
  const std::string u_name = read_arith(r);
  const ObservableSpec obs = read_observable(r.raw("observable"), r.child("observable"));
  const auto grid = read_grid(r);
  const auto cap = read_sieve_cap(r);
  r.finish();
  if (grid.empty()) return {};
  std::uint64_t need = 1;
  for (const auto& g : grid) need = std::max(need, 2 * g.m + g.h - 2);
  const SeqPtr u = realize(u_name, need, cap);
  std::vector<Task> tasks;
  for (const auto& g : grid) {
    tasks.push_back([=](const Exec& exec) {
      Stopwatch sw;
      const auto a = obs.make(2 * g.m + g.h - 1);
      const json params = {{"u", u_name}, {"observable", obs.described}, {"M", g.m}, {"H", g.h}};
      return stamp({row("short_interval_avg", params, averages::short_interval_avg(a, *u, g.m, g.h, exec), g.m * g.h)},
                   sw);
    });
  }
  return tasks;
}

inline std::vector<Task> plan_kbsz(ParamReader& r) {
  const std::uint64_t n = r.u64("N", 1);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  const json& pj = r.array("pairs");
  for (std::size_t i = 0; i < pj.size(); ++i) {
    const std::string ptr = r.child("pairs") + "/" + std::to_string(i);
    if (!pj[i].is_array() || pj[i].size() != 2) throw ConfigError(ptr, "expected [r, s]");
    const auto rr = ParamReader::as_u64(pj[i][0], ptr + "/0", 2), ss = ParamReader::as_u64(pj[i][1], ptr + "/1", 2);
    if (!is_prime(rr) || !is_prime(ss) || rr == ss) {
      throw ConfigError(ptr, "r and s must be distinct primes");
    }
    pairs.emplace_back(rr, ss);
  }
  std::vector<ObservableSpec> observables;
  const json& oj = r.array("observables");
  for (std::size_t i = 0; i < oj.size(); ++i) {
    observables.push_back(read_observable(oj[i], r.child("observables") + "/" + std::to_string(i)));
  }
  r.finish();
  std::vector<Task> tasks;
  for (const auto& obs : observables) {
    for (auto [rr, ss] : pairs) {
      tasks.push_back([=](const Exec&) {
        Stopwatch sw;
        const auto a = obs.make(std::max(rr, ss) * (n - 1) + 1);
        const json params = {{"observable", obs.described}, {"r", rr}, {"s", ss}, {"N", n}};
        std::vector<Row> rows{row("kbsz_corr", params, averages::kbsz_corr(a, rr, ss, n), n)};
        if (obs.kind == "rotation") {
          // (1/N) sum_{n<N} z^{(r-s)n} with z = e^{2 pi i alpha}
          const double d = static_cast<double>(rr) - static_cast<double>(ss);
          const std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi * obs.alpha * d);
          std::complex<double> closed = 1.0;
          if (std::abs(w - 1.0) > 1e-15) {
            closed = (std::polar(1.0, 2.0 * std::numbers::pi * std::fmod(obs.alpha * d * static_cast<double>(n), 1.0)) -
                      1.0) / (w - 1.0) / static_cast<double>(n);
          }
          rows.push_back(row("kbsz_closed_form", params, closed, n));
        }
        return stamp(std::move(rows), sw);
      });
    }
  }
  return tasks;
}

inline std::vector<Task> plan_ap(ParamReader& r) {
  const std::string u_name = read_arith(r);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> progs;
  const json& pj = r.array("progressions");
  for (std::size_t i = 0; i < pj.size(); ++i) {
    ParamReader p(pj[i], r.child("progressions") + "/" + std::to_string(i));
    const auto q = p.u64("q", 1);
    const auto h = p.u64("h");
    p.finish();
    progs.emplace_back(q, h);
  }
  const auto grid = read_grid(r);
  const CutSpec cuts = read_cuts(r);
  const std::uint64_t limit = r.u64("limit", 2);
  const auto cap = read_sieve_cap(r);
  r.finish();
  if (progs.empty()) return {};
  const auto partition = cuts.make(limit);
  std::uint64_t need = 1;
  for (auto [q, h] : progs) {
    need = std::max(need, q * (partition.total() - 1) + h);
    for (const auto& g : grid) need = std::max(need, q * (2 * g.m + g.h - 2) + h);
  }
  const SeqPtr u = realize(u_name, need, cap);
  std::vector<Task> tasks;
  for (auto [q, h] : progs) {
    for (const auto& g : grid) {
      tasks.push_back([=](const Exec& exec) {
        Stopwatch sw;
        const json params = {{"u", u_name}, {"q", q}, {"h", h}, {"M", g.m}, {"H", g.h}};
        return stamp({row("ap_short_interval", params, averages::ap_short_interval(*u, q, h, g.m, g.h, exec), g.m * g.h)},
                     sw);
      });
    }
    tasks.push_back([=](const Exec& exec) {
      Stopwatch sw;
      const auto blocks = averages::BlockObservables::shared(averages::constant_observable(1.0, partition.max_gap()));
      const json params = {{"u", u_name}, {"f", "const 1"}, {"q", q}, {"h", h}, {"cuts", cuts.described},
                           {"limit", limit}, {"b_K", partition.total()}, {"K", partition.count()},
                           {"cuts_fnv1a", partition.hash()}};
      return stamp({row("ap_strong_momo", params, averages::ap_strong_momo(blocks, *u, q, h, partition, exec).value,
                        partition.total())},
                   sw);
    });
  }
  return tasks;
}

inline std::vector<Task> plan_root_rotation(ParamReader& r) {
  const std::uint64_t rr = r.u64("r", 1), ss = r.u64("s", 1), k = r.u64("k", 1), base = r.u64("base", 2);
  const std::uint64_t t_min = r.u64("t_min", 1), t_max = r.u64("t_max", 1);
  r.finish();
  if (t_min > t_max) return {};
  std::vector<std::uint64_t> scale;
  std::uint64_t n = 1;
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    if (n > UINT64_MAX / base) throw ConfigError(r.child("t_max"), "base^t_max overflows 64 bits");
    n *= base;
    if (t >= t_min) scale.push_back(n);
  }
  return {[=](const Exec&) {
    Stopwatch sw;
    std::vector<Row> rows;
    for (std::size_t i = 0; i < scale.size(); ++i) {
      const auto rot = symbolic::root_rotation(rr, ss, scale[i], k);
      const json params = {{"r", rr}, {"s", ss}, {"k", k}, {"t", t_min + i}, {"n_t", scale[i]},
                           {"b_t", rot.residue}, {"margin", rot.margin}};
      rows.push_back(row("root_rotation_margin_ratio", params,
                         static_cast<double>(rot.margin) / static_cast<double>(scale[i]), scale[i]));
    }
    return stamp(std::move(rows), sw);
  }};
}

inline std::vector<Task> plan_entropy_mix(ParamReader& r) {
  const double p = r.real("p");
  if (!(p > 0.0 && p < 1.0)) throw ConfigError(r.child("p"), "p must lie in (0, 1)");
  const std::uint64_t n = r.u64("N", 1);
  const std::uint64_t seed = r.u64("seed");
  r.finish();
  return {[=](const Exec&) {
    Stopwatch sw;
    const auto lambda = arith::sieve_liouville(n);
    const auto u = entropy::bernoulli_mix(lambda, p, n, seed);
    const json params = {{"p", p}, {"N", n}, {"seed", seed}, {"y", "P(y=1)=p"}};
    const auto corr = entropy::correlation(u, lambda, n);
    // the two readings of the Bernoulli parameter's orientation
    return stamp({row("correlation", params, corr, n),
                  row("sign_match_freq", params, entropy::sign_match_freq(u, lambda, n), n),
                  row("match_frequency_stated", params, 0.5 + (1.0 - p) / 2.0, 0),
                  row("match_frequency_p_on_one", params, p + (1.0 - p) / 2.0, 0)},
                 sw);
  }};
}

/// {"alphabet": [...], "rules": {...}, "start"?} or {"blocks": [...], "repeat_last": bool}, realized to n symbols.
inline symbolic::Word read_language(ParamReader& parent, const std::string& key, std::uint64_t n) {
  ParamReader r = parent.object(key);
  const std::string ptr = r.pointer();
  try {
    if (r.has("blocks")) {
      const json& bj = r.array("blocks");
      std::vector<symbolic::Word> blocks;
      for (std::size_t i = 0; i < bj.size(); ++i) {
        if (!bj[i].is_string()) throw ConfigError(r.child("blocks") + "/" + std::to_string(i), "expected a 0/1 string");
        const std::string digits = bj[i].get<std::string>();
        if (digits.find_first_not_of("01") != std::string::npos) {
          throw ConfigError(r.child("blocks") + "/" + std::to_string(i), "expected a 0/1 string");
        }
        blocks.push_back(symbolic::word_from_digits(digits));
      }
      const bool repeat_last = r.has("repeat_last") && r.boolean("repeat_last");
      r.finish();
      return symbolic::morse_prefix(symbolic::BlockProduct(std::move(blocks), repeat_last), n);
    }
    const json& aj = r.array("alphabet");
    std::vector<std::string> alphabet;
    for (std::size_t i = 0; i < aj.size(); ++i) {
      if (!aj[i].is_string() || aj[i].get<std::string>().empty()) {
        throw ConfigError(r.child("alphabet") + "/" + std::to_string(i), "expected a non-empty letter");
      }
      alphabet.push_back(aj[i].get<std::string>());
    }
    auto index_of = [&](const std::string& letter, const std::string& where) {
      const auto it = std::find(alphabet.begin(), alphabet.end(), letter);
      if (it == alphabet.end()) throw ConfigError(where, "letter '" + letter + "' not in the alphabet");
      return static_cast<symbolic::Symbol>(it - alphabet.begin());
    };
    ParamReader rules = r.object("rules");
    std::vector<symbolic::Word> images(alphabet.size());
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      const std::string where = rules.child(alphabet[a]);
      const json& img = rules.raw(alphabet[a]);
      if (img.is_string()) {
        // single-character letters spelled as one string
        for (char c : img.get<std::string>()) images[a].push_back(index_of(std::string(1, c), where));
      } else if (img.is_array()) {
        for (std::size_t i = 0; i < img.size(); ++i) {
          const std::string at = where + "/" + std::to_string(i);
          if (!img[i].is_string()) throw ConfigError(at, "expected a letter");
          images[a].push_back(index_of(img[i].get<std::string>(), at));
        }
      } else {
        throw ConfigError(where, "expected a string or an array of letters");
      }
    }
    rules.finish();
    symbolic::Symbol start = 0;
    if (r.has("start")) start = index_of(r.text("start"), r.child("start"));
    r.finish();
    return symbolic::substitution_fixed_point(symbolic::Substitution(alphabet, std::move(images)), start, n);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(ptr, e.what());
  }
}

inline std::vector<Task> plan_adversarial(ParamReader& r) {
  const std::string u_name = read_arith(r);
  const CutSpec cuts = read_cuts(r);
  const std::uint64_t limit = r.u64("limit", 2);
  averages::AdversarialOptions opts;
  opts.beam = r.u64("beam", 1);
  opts.exhaustive_limit = r.u64("exhaustive_limit");
  opts.n_scan = r.u64("scan", 1);
  const json language_spec = r.raw("language");
  const auto partition = cuts.make(limit);
  const symbolic::Word source =
      read_language(r, "language", std::max<std::uint64_t>(opts.n_scan, partition.total()));
  if (std::any_of(source.begin(), source.end(), [](symbolic::Symbol c) { return c > 1; })) {
    throw ConfigError(r.child("language"), "f(z) = (-1)^{z(0)} needs a binary language");
  }
  r.finish();
  return {[=](const Exec& exec) {
    Stopwatch sw;
    const SeqPtr u = realize(u_name, partition.total(), std::nullopt);
    const averages::WindowFn f = [](std::span<const symbolic::Symbol> z) {
      return std::complex<double>(z[0] ? -1.0 : 1.0, 0.0);
    };
    const auto adv = averages::adversarial_strong_momo(source, 1, f, *u, partition, opts, exec);
    std::uint64_t exhaustive = 0;
    for (bool e : adv.exhaustive) exhaustive += e;
    json params = {{"u", u_name}, {"f", "(-1)^{z(0)}"}, {"language", language_spec}, {"scan", opts.n_scan},
                   {"cuts", cuts.described}, {"limit", limit}, {"b_K", partition.total()},
                   {"K", partition.count()}, {"beam", opts.beam}, {"exhaustive_limit", opts.exhaustive_limit},
                   {"exhaustive_blocks", exhaustive}, {"bound", "lower"}};
    std::vector<averages::ObservableSeq> orbit;
    for (std::size_t k = 0; k < partition.count(); ++k) {
      orbit.push_back(averages::word_sign_observable(source, partition.gap(k), partition.begin(k)));
    }
    json base = params;
    base.erase("exhaustive_blocks");
    base.erase("beam");
    base.erase("exhaustive_limit");
    base.erase("bound");
    base["orbit"] = "x_k = T^{b_k} of the fixed point";
    const auto fixed = averages::strong_momo_sum(partition, averages::BlockObservables::per_block(std::move(orbit)), *u, exec);
    return stamp({row("adversarial_strong_momo", params, adv.value, partition.total()),
                  row("strong_momo_fixed_orbit", base, fixed.value, partition.total())},
                 sw);
  }};
}

inline std::vector<Task> plan_pretentious(ParamReader& r) {
  const std::string u_name = read_arith(r);
  const std::uint64_t m = r.u64("M", 2), h = r.u64("H", 10), grid = r.u64("grid_points", 1);
  r.finish();
  return {[=](const Exec&) {
    Stopwatch sw;
    const SeqPtr u = realize(u_name, m, std::nullopt);
    arith::MrtOptions opts;
    opts.grid_points = grid;
    const auto res = arith::mrt_infimum(*u, m, h, opts);
    const json params = {{"u", u_name}, {"M", m}, {"H", h}, {"grid_points", grid}, {"t", res.t}, {"q", res.q},
                         {"character_index", res.character_index}, {"q_bound", res.q_bound}};
    std::vector<std::int8_t> ones(m, 1);
    const auto one = arith::ArithSeq::from_signs(arith::SeqTag::custom, ones);
    const json dparams = {{"u", u_name}, {"v", "1"}, {"M", m}};
    return stamp({row("mrt_infimum_sq", params, res.value, res.grid_size),
                  row("pretentious_distance", dparams, arith::pretentious_distance(*u, one, m), m)},
                 sw);
  }};
}

inline json grid_json(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> g) {
  json a = json::array();
  for (auto [m, h] : g) a.push_back({{"M", m}, {"H", h}});
  return a;
}

}  // namespace suite_detail

/// The canned experiment catalogue, in listing order.
inline const std::vector<Suite>& suites() {
  using namespace suite_detail;
  static const std::vector<Suite> all = [] {
    const json power15 = {{"kind", "power"}, {"c", 1}, {"gamma", 1.5}};
    const json power2 = {{"kind", "power"}, {"c", 1}, {"gamma", 2}};
    const json propd_grid = grid_json({{10000, 10}, {100000, 100}, {1000000, 1000}});
    std::vector<Suite> s;
    s.push_back({"mobius-like", "strong MOMO trace (1/b_K) sum_k |sum mu(n)| over power cuts",
                 {{"u", "mobius"}, {"cuts", power15}, {"limits", {10000, 100000, 1000000, 10000000}}},
                 plan_mobius_like});
    s.push_back({"propD", "quadrant frequencies and short-interval averages of Thue-Morse signs against lambda",
                 {{"grid", propd_grid}}, [](ParamReader& r) { return plan_quadrants(r, false); }});
    s.push_back({"short-interval", "double averages (1/M) sum_m |(1/H) sum f(T^h x) u(h)| on an (M, H) grid",
                 {{"u", "mobius"},
                  {"observable", {{"kind", "constant"}}},
                  {"grid", grid_json({{10000, 10}, {10000, 100}, {100000, 100}, {100000, 1000}, {1000000, 1000}})}},
                 plan_short_interval});
    s.push_back({"kbsz", "prime-dilation cross-correlations (1/N) sum a(rn) conj(a(sn))",
                 {{"N", 100000},
                  {"pairs", {{3, 5}, {7, 11}}},
                  {"observables",
                   {{{"kind", "rotation"}, {"alpha", (std::sqrt(5.0) - 1.0) / 2.0}},
                    {{"kind", "rotation"}, {"alpha", 1.0 / 7.0}},
                    {{"kind", "rotation"}, {"alpha", 0.3}},
                    {{"kind", "tm"}}}}},
                 plan_kbsz});
    s.push_back({"ap-aperiodicity", "u along progressions qn+h: short-interval and strong MOMO averages",
                 {{"u", "mobius"},
                  {"progressions", {{{"q", 3}, {"h", 1}}, {{"q", 4}, {"h", 1}}}},
                  {"grid", grid_json({{10000, 100}})},
                  {"cuts", power2},
                  {"limit", 10000}},
                 plan_ap});
    s.push_back({"kakutani-vs-liouville", "quadrant frequencies for a general digit set A against lambda",
                 {{"A", {{"positions", json::array()}, {"complement", true}}}, {"grid", propd_grid}},
                 [](ParamReader& r) { return plan_quadrants(r, true); }});
    s.push_back({"root-rotation", "residues b_t = r/s mod n_t and their margin from the k-th roots, n_t = base^t",
                 {{"r", 3}, {"s", 5}, {"k", 1}, {"base", 2}, {"t_min", 5}, {"t_max", 25}}, plan_root_rotation});
    s.push_back({"entropy-mix", "lambda mixed with -1 by a Bernoulli(p) mask: correlation and sign matches",
                 {{"p", 0.8}, {"N", 1000000}, {"seed", 20240601}}, plan_entropy_mix});
    s.push_back({"adversarial-tm", "strong MOMO maximized over Thue-Morse words per block (a lower bound)",
                 {{"u", "liouville"},
                  {"cuts", power2},
                  {"limit", 1000},
                  {"beam", 64},
                  {"exhaustive_limit", 1 << 20},
                  {"scan", 1 << 14},
                  {"language", {{"alphabet", {"0", "1"}}, {"rules", {{"0", "01"}, {"1", "10"}}}}}},
                 plan_adversarial});
    s.push_back({"pretentious", "finite-M infimum of D(u, chi n^{it}; M)^2 over characters and t",
                 {{"u", "liouville"}, {"M", 100000}, {"H", 1000}, {"grid_points", 2001}}, plan_pretentious});
    return s;
  }();
  return all;
}

inline const Suite& find_suite(const std::string& name) {
  for (const auto& s : suites()) {
    if (s.name == name) return s;
  }
  throw ConfigError("/suite", "unknown suite '" + name + "' (see `momo-lab list`)");
}

/// Suite defaults with the user's params laid over them key by key.
inline json merged_params(const Suite& suite, const json& user) {
  json merged = suite.defaults;
  for (const auto& [k, v] : user.items()) merged[k] = v;
  return merged;
}

}  // namespace momo::cli
