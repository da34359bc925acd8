#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "multi_index.hpp"
#include "rational.hpp"
#include "sym_tensor.hpp"
#include "univariate.hpp"
#include "verdict.hpp"

namespace coposit {

/// Integer composition of the resolution N over the coordinates; k/N is a
/// point of the standard simplex.
struct LatticePoint {
  std::vector<long long> k;
  long long resolution = 0;
};

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleOptions {
  long long resolution = 0;  // 0: 240 for dim 2, 60 for dim 3, 20 otherwise
  double tol = 1e-9;         // relative tolerance band, float mode only
  long long max_points = 0;  // 0: COPOSITIVITY_MAX_LATTICE env var, else 5'000'000
  unsigned threads = 0;      // 0: hardware concurrency
  int refine_passes = 12;
};

inline long long default_lattice_cap() {
  if (const char* env = std::getenv("COPOSITIVITY_MAX_LATTICE")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v >= 0) return v;
  }
  return 5'000'000;
}

inline long long default_resolution(int dim) { return dim == 2 ? 240 : (dim == 3 ? 60 : 20); }

inline long long composition_count_checked(int n, long long N, long long cap) {
  Integer count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(N + n - 1),
               static_cast<unsigned long>(n - 1));
  if (cmp(count, static_cast<long>(cap)) > 0)
    throw ResourceLimitError("lattice would need " + count.get_str() +
                             " points, above the configured cap of " + std::to_string(cap));
  return static_cast<long long>(count.get_si());
}

/// All compositions of N into n nonnegative parts, ascending lexicographic
/// order, flattened with stride n.
inline std::vector<long long> enumerate_compositions(int n, long long N, long long cap) {
  const long long total = composition_count_checked(n, N, cap);
  std::vector<long long> flat;
  flat.reserve(static_cast<std::size_t>(total) * static_cast<std::size_t>(n));
  std::vector<long long> k(static_cast<std::size_t>(n), 0);
  const auto emit = [&](auto&& self, int pos, long long remaining) -> void {
    if (pos == n - 1) {
      k[static_cast<std::size_t>(pos)] = remaining;
      flat.insert(flat.end(), k.begin(), k.end());
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      k[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  emit(emit, 0, N);
  return flat;
}

namespace detail {

/// Tensor terms scaled to 64-bit integers by the common denominator, when the
/// worst-case lattice sum fits. Keeps the inner scan loop allocation-free.
struct Int64Terms {
  struct Term {
    std::vector<int> labels;
    long long coeff_times_mult;
  };
  std::vector<Term> terms;
  Integer denominator;  // scanned values are denominator * true value
};

inline std::optional<Int64Terms> int64_terms(const RationalTensor& T, long long N) {
  Integer common_den(1);
  for (const auto& [idx, value] : T.entries())
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), value.get_den().get_mpz_t());

  Integer point_pow;
  mpz_ui_pow_ui(point_pow.get_mpz_t(), static_cast<unsigned long>(std::max<long long>(N, 1)),
                static_cast<unsigned long>(T.order()));
  Integer bound(0);
  Int64Terms out;
  out.denominator = common_den;
  for (const auto& [idx, value] : T.entries()) {
    Integer scaled = value.get_num() * (common_den / value.get_den());
    scaled *= static_cast<unsigned long>(multiplicity(idx));
    bound += abs(scaled) * point_pow;
    if (!scaled.fits_slong_p()) return std::nullopt;
    out.terms.push_back({std::vector<int>(idx.begin(), idx.end()), scaled.get_si()});
  }
  Integer limit(1);
  limit <<= 61;
  if (cmp(bound, limit) >= 0) return std::nullopt;
  return out;
}

inline long long eval_int64(const Int64Terms& terms, const long long* k) {
  long long acc = 0;
  for (const auto& term : terms.terms) {
    long long prod = term.coeff_times_mult;
    for (int label : term.labels) prod *= k[label - 1];
    acc += prod;
  }
  return acc;
}

/// Deterministic chunked minimum scan: identical result for any thread count,
/// ties resolved toward the earliest (lexicographically smallest) point.
template <class Value, class Eval>
std::pair<Value, long long> scan_min(long long points, const Eval& eval, unsigned threads) {
  if (points <= 0) throw std::invalid_argument("empty lattice scan");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const long long chunk = std::max<long long>(256, (points + threads - 1) / threads);
  struct Local {
    Value value;
    long long index;
  };
  std::vector<std::pair<long long, long long>> ranges;
  for (long long begin = 0; begin < points; begin += chunk)
    ranges.emplace_back(begin, std::min(points, begin + chunk));
  std::vector<Local> locals(ranges.size(), Local{Value{}, 0});

  auto run_range = [&](std::size_t r) {
    const auto [begin, end] = ranges[r];
    Value best = eval(begin);
    long long best_index = begin;
    for (long long i = begin + 1; i < end; ++i) {
      Value v = eval(i);
      if (v < best) {
        best = std::move(v);
        best_index = i;
      }
    }
    locals[r] = Local{std::move(best), best_index};
  };

  if (ranges.size() == 1 || threads == 1) {
    for (std::size_t r = 0; r < ranges.size(); ++r) run_range(r);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t r = t; r < ranges.size(); r += threads) run_range(r);
      });
    for (auto& th : pool) th.join();
  }

  Value best = locals[0].value;
  long long best_index = locals[0].index;
  for (std::size_t r = 1; r < locals.size(); ++r) {
    if (locals[r].value < best) {
      best = locals[r].value;
      best_index = locals[r].index;
    }
  }
  return {std::move(best), best_index};
}

}  // namespace detail

template <class S>
struct LatticeMin {
  S value;
  LatticePoint argmin;
};

/// Exact minimum of the form over all integer compositions k of N, evaluated
/// at the integer points themselves (so values scale like N^order).
template <class S>
LatticeMin<S> lattice_min(const SymTensor<S>& T, long long N, const OracleOptions& opts = {}) {
  if (N < 1) throw std::invalid_argument("lattice resolution must be >= 1");
  const long long cap = opts.max_points > 0 ? opts.max_points : default_lattice_cap();
  const int n = T.dim();
  const std::vector<long long> flat = enumerate_compositions(n, N, cap);
  const long long points = static_cast<long long>(flat.size()) / n;

  long long best_index = 0;
  S best_value(0);
  if constexpr (std::is_same_v<S, Rational>) {
    if (auto fast = detail::int64_terms(T, N)) {
      auto [value, index] = detail::scan_min<long long>(
          points, [&](long long i) { return detail::eval_int64(*fast, &flat[i * n]); },
          opts.threads);
      best_value = Rational(static_cast<long>(value));
      best_value /= Rational(fast->denominator);
      best_index = index;
    } else {
      auto [value, index] = detail::scan_min<Rational>(
          points,
          [&](long long i) {
            return T.evaluate_lattice(
                std::span<const long long>(&flat[i * n], static_cast<std::size_t>(n)));
          },
          opts.threads);
      best_value = value;
      best_index = index;
    }
  } else {
    auto [value, index] = detail::scan_min<S>(
        points,
        [&](long long i) {
          return T.evaluate_lattice(std::span<const long long>(&flat[i * n], static_cast<std::size_t>(n)));
        },
        opts.threads);
    best_value = value;
    best_index = index;
  }
  LatticePoint argmin;
  argmin.resolution = N;
  argmin.k.assign(flat.begin() + best_index * n, flat.begin() + (best_index + 1) * n);
  return {std::move(best_value), std::move(argmin)};
}

/// Local improvement by pairwise mass transfer: value never increases, the
/// iterate stays exactly on the simplex, and the search exits early once a
/// full sweep makes no progress.
template <class S>
std::vector<S> refine(const SymTensor<S>& T, std::vector<S> x, int passes = 12) {
  if (static_cast<int>(x.size()) != T.dim())
    throw std::invalid_argument("refine: point dimension mismatch");
  S best = T.evaluate(x);
  const int n = T.dim();
  std::vector<S> cand(x.size());
  for (int pass = 0; pass < passes; ++pass) {
    bool improved = false;
    for (int i = 0; i < n; ++i) {
      if (!(S(0) < x[static_cast<std::size_t>(i)])) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        S lo(0);
        S hi = x[static_cast<std::size_t>(i)];
        S best_t(0);
        S best_v = best;
        for (int level = 0; level < 4; ++level) {
          S step = (hi - lo) / 8;
          if (!(S(0) < step)) break;
          for (int g = 0; g <= 8; ++g) {
            S t = lo + step * g;
            cand = x;
            cand[static_cast<std::size_t>(i)] -= t;
            cand[static_cast<std::size_t>(j)] += t;
            S v = T.evaluate(cand);
            if (v < best_v) {
              best_v = std::move(v);
              best_t = t;
            }
          }
          lo = best_t - step;
          if (lo < S(0)) lo = S(0);
          hi = best_t + step;
          if (x[static_cast<std::size_t>(i)] < hi) hi = x[static_cast<std::size_t>(i)];
        }
        if (best_v < best) {
          x[static_cast<std::size_t>(i)] -= best_t;
          x[static_cast<std::size_t>(j)] += best_t;
          best = std::move(best_v);
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  return x;
}

template <class S>
struct OracleVerdict {
  Verdict verdict = Verdict::NotCopositive;
  S min_value{};  // lattice minimum at the integer points
  LatticePoint argmin;
  long long resolution = 0;
  bool decisive = false;
  std::optional<Witness<S>> witness;
};

namespace detail {

/// Restriction of a dim-2 tensor to x2 = 1 as a univariate polynomial in x1.
inline Poly halfline_restriction(const RationalTensor& T) {
  const int m = T.order();
  Poly p(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int j = 0; j <= m; ++j) {
    MultiIndex idx;
    for (int i = 0; i < m - j; ++i) idx.push_back(2);
    for (int i = 0; i < j; ++i) idx.push_back(1);
    std::sort(idx.begin(), idx.end());
    p[static_cast<std::size_t>(j)] = T.at(idx) * static_cast<long>(multiplicity(idx));
  }
  return p;
}

inline std::vector<Rational> slope_point(const Rational& s) {
  return {Rational(s.get_num()), Rational(s.get_den())};
}

}  // namespace detail

/// Ground-truth verdict from the lattice scan plus refinement. In exact mode
/// with one or two coordinates the verdict is certified by univariate root
/// counting and is always decisive; in three or more it is exact for
/// rejections and zero witnesses, and labeled decisive for a strictly
/// positive lattice scan that refinement cannot push to zero. Float verdicts
/// use the relative tolerance band and only rejections are decisive.
template <class S>
OracleVerdict<S> oracle_verdict(const SymTensor<S>& T, OracleOptions opts = {}) {
  const long long N = opts.resolution > 0 ? opts.resolution : default_resolution(T.dim());
  LatticeMin<S> lat = lattice_min(T, N, opts);
  OracleVerdict<S> out;
  out.min_value = lat.value;
  out.argmin = lat.argmin;
  out.resolution = N;

  constexpr bool exact = std::is_same_v<S, Rational>;

  if constexpr (exact) {
    if (T.dim() == 1) {
      const Rational diag = T.at(MultiIndex(static_cast<std::size_t>(T.order()), 1));
      out.decisive = true;
      out.verdict = sgn(diag) > 0   ? Verdict::StrictlyCopositive
                    : sgn(diag) == 0 ? Verdict::CopositiveNotStrict
                                     : Verdict::NotCopositive;
      if (sgn(diag) <= 0) out.witness = make_witness(T, {Rational(1)});
      return out;
    }
    if (T.dim() == 2) {
      const auto analysis = analyze_halfline(detail::halfline_restriction(T));
      const Rational vertex = T.at(MultiIndex(static_cast<std::size_t>(T.order()), 1));
      out.decisive = true;
      const bool copositive = analysis.nonneg && sgn(vertex) >= 0;
      if (!copositive) {
        out.verdict = Verdict::NotCopositive;
        if (sgn(vertex) < 0)
          out.witness = make_witness(T, {Rational(1), Rational(0)});
        else if (analysis.negative_point)
          out.witness = make_witness(T, detail::slope_point(*analysis.negative_point));
        return out;
      }
      if (analysis.positive && sgn(vertex) > 0) {
        out.verdict = Verdict::StrictlyCopositive;
        return out;
      }
      out.verdict = Verdict::CopositiveNotStrict;
      if (sgn(vertex) == 0)
        out.witness = make_witness(T, {Rational(1), Rational(0)});
      else if (analysis.zero_point)
        out.witness = make_witness(T, detail::slope_point(*analysis.zero_point));
      return out;
    }
  }

  // Tolerance bands scale with the magnitude of the form: lattice values are
  // taken at integer points (factor N^order), refined values on the unit
  // simplex.
  double scale_base = 1e-300;
  for (const auto& [idx, value] : T.entries()) {
    double c;
    if constexpr (exact) {
      c = std::abs(to_double(value));
    } else {
      c = std::abs(value);
    }
    scale_base += static_cast<double>(multiplicity(idx)) * c;
  }
  const double unit_band = opts.tol * scale_base;
  const double lattice_band =
      unit_band * std::pow(static_cast<double>(N), static_cast<double>(T.order()));

  const auto below_band = [&](const S& v, double band) {
    if constexpr (exact) {
      (void)band;
      return sgn(v) < 0;
    } else {
      return v < -band;
    }
  };
  const auto is_zeroish = [&](const S& v, double band) {
    if constexpr (exact) {
      (void)band;
      return sgn(v) == 0;
    } else {
      return std::abs(v) <= band;
    }
  };

  if (below_band(lat.value, lattice_band)) {
    out.verdict = Verdict::NotCopositive;
    out.decisive = true;
    out.witness = make_lattice_witness(T, lat.argmin.k);
    return out;
  }

  // Polish the lattice argmin; mass transfer can only lower the value.
  std::vector<S> x0;
  x0.reserve(lat.argmin.k.size());
  for (long long c : lat.argmin.k) {
    S coord(0);
    coord += static_cast<long>(c);
    coord /= static_cast<long>(N);
    x0.push_back(coord);
  }
  const std::vector<S> xr = refine(T, std::move(x0), opts.refine_passes);
  const S vr = T.evaluate(xr);

  if (below_band(vr, unit_band)) {
    out.verdict = Verdict::NotCopositive;
    out.decisive = true;
    out.witness = make_witness(T, xr);
    return out;
  }
  if (is_zeroish(vr, unit_band) || is_zeroish(lat.value, lattice_band)) {
    out.verdict = Verdict::CopositiveNotStrict;
    if constexpr (exact) {
      out.decisive = true;
      out.witness = sgn(vr) == 0 ? make_witness(T, xr) : make_lattice_witness(T, lat.argmin.k);
    }
    return out;
  }
  out.verdict = Verdict::StrictlyCopositive;
  out.decisive = exact;  // all lattice values positive and refinement found nothing <= 0
  return out;
}

/// Cheap certificate that the form is somewhere positive on the nonnegative
/// orthant: unit vectors, then all-ones, then a coarse lattice.
template <class S>
std::optional<Witness<S>> find_positive_witness(const SymTensor<S>& T) {
  const int n = T.dim();
  for (int i = 1; i <= n; ++i) {
    std::vector<S> e(static_cast<std::size_t>(n), S(0));
    e[static_cast<std::size_t>(i - 1)] = S(1);
    if (S(0) < T.evaluate(e)) return make_witness(T, std::move(e));
  }
  std::vector<S> ones(static_cast<std::size_t>(n), S(1));
  if (S(0) < T.evaluate(ones)) return make_witness(T, std::move(ones));
  const long long N = 8;
  const std::vector<long long> flat = enumerate_compositions(n, N, default_lattice_cap());
  const long long points = static_cast<long long>(flat.size()) / n;
  for (long long p = 0; p < points; ++p) {
    std::span<const long long> k(&flat[p * n], static_cast<std::size_t>(n));
    if (S(0) < T.evaluate_lattice(k))
      return make_lattice_witness(T, std::vector<long long>(k.begin(), k.end()));
  }
  return std::nullopt;
}

/// Searches for a nonzero nonnegative zero of the form: lattice scan, then
/// refinement from the lattice argmin, plus exact root extraction in
/// dimension 2. Exact mode accepts only exact zeros; float mode accepts
/// values within tol * scale.
template <class S>
std::optional<Witness<S>> find_zero_nonneg(const SymTensor<S>& T, long long N = 0,
                                           double tol = 1e-9) {
  OracleOptions opts;
  opts.resolution = N;
  opts.tol = tol;
  const long long resolution = N > 0 ? N : default_resolution(T.dim());
  const long long cap = default_lattice_cap();
  const int n = T.dim();
  constexpr bool exact = std::is_same_v<S, Rational>;

  double scale_base = 1e-300;
  for (const auto& [idx, value] : T.entries()) {
    double c;
    if constexpr (exact) {
      c = std::abs(to_double(value));
    } else {
      c = std::abs(value);
    }
    scale_base += static_cast<double>(multiplicity(idx)) * c;
  }
  const double unit_band = tol * scale_base;
  const double lattice_band =
      unit_band * std::pow(static_cast<double>(resolution), static_cast<double>(T.order()));

  const auto zeroish = [&](const S& v, double band) {
    if constexpr (exact) {
      (void)band;
      return sgn(v) == 0;
    } else {
      return std::abs(v) <= band;
    }
  };

  const std::vector<long long> flat = enumerate_compositions(n, resolution, cap);
  const long long points = static_cast<long long>(flat.size()) / n;
  for (long long p = 0; p < points; ++p) {
    std::span<const long long> k(&flat[p * n], static_cast<std::size_t>(n));
    bool nonzero = false;
    for (long long c : k) nonzero |= (c != 0);
    if (!nonzero) continue;
    const S v = T.evaluate_lattice(k);
    if (zeroish(v, lattice_band)) {
      auto w = make_lattice_witness(T, std::vector<long long>(k.begin(), k.end()));
      w.kind = WitnessKind::Zero;
      return w;
    }
  }

  if constexpr (exact) {
    if (n == 2) {
      const auto analysis = analyze_halfline(detail::halfline_restriction(T));
      const Rational vertex = T.at(MultiIndex(static_cast<std::size_t>(T.order()), 1));
      if (sgn(vertex) == 0) return make_witness(T, {Rational(1), Rational(0)});
      if (analysis.zero_point) return make_witness(T, detail::slope_point(*analysis.zero_point));
      return std::nullopt;
    }
  }

  LatticeMin<S> lat = lattice_min(T, resolution, opts);
  std::vector<S> x0;
  for (long long c : lat.argmin.k) {
    S coord(0);
    coord += static_cast<long>(c);
    coord /= static_cast<long>(resolution);
    x0.push_back(coord);
  }
  const std::vector<S> xr = refine(T, std::move(x0), opts.refine_passes);
  const S vr = T.evaluate(xr);
  if (zeroish(vr, unit_band)) {
    auto w = make_witness(T, xr);
    w.kind = WitnessKind::Zero;
    return w;
  }
  return std::nullopt;
}

}  // namespace coposit
