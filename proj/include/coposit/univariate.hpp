#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace coposit {

/// Dense univariate polynomial over the rationals, ascending coefficients.
using Poly = std::vector<Rational>;

namespace polyops {

inline Poly trimmed(Poly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

/// Degree of a trimmed polynomial; -1 for the zero polynomial.
inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Rational eval(const Poly& p, const Rational& s) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= s;
    acc += p[i];
  }
  return acc;
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return trimmed(std::move(d));
}

/// Scales so the leading coefficient has absolute value 1; positive scaling
/// keeps every sign so Sturm chains may be normalized freely.
inline Poly normalized(Poly p) {
  p = trimmed(std::move(p));
  if (p.empty()) return p;
  Rational lead = p.back();
  if (sgn(lead) < 0) lead = -lead;
  for (Rational& c : p) c /= lead;
  return p;
}

inline Poly remainder(Poly a, const Poly& b) {
  a = trimmed(std::move(a));
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  const int db = degree(b);
  while (degree(a) >= db) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a = trimmed(std::move(a));
  }
  return a;
}

/// Quotient for exactly divisible inputs.
inline Poly quotient_exact(Poly a, const Poly& b) {
  a = trimmed(std::move(a));
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  const int db = degree(b);
  if (degree(a) < db) return {};
  Poly q(static_cast<std::size_t>(degree(a) - db) + 1, Rational(0));
  while (degree(a) >= db) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a = trimmed(std::move(a));
  }
  return trimmed(std::move(q));
}

inline Poly gcd(Poly a, Poly b) {
  a = normalized(std::move(a));
  b = normalized(std::move(b));
  while (!b.empty()) {
    Poly r = normalized(remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// p with all repeated factors reduced to multiplicity one.
inline Poly square_free_part(const Poly& p_in) {
  Poly p = normalized(p_in);
  if (degree(p) <= 1) return p;
  Poly g = gcd(p, derivative(p));
  if (degree(g) <= 0) return p;
  return normalized(quotient_exact(p, g));
}

inline std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  Poly f0 = normalized(p);
  if (f0.empty()) return chain;
  chain.push_back(f0);
  Poly f1 = normalized(derivative(f0));
  while (!f1.empty()) {
    chain.push_back(f1);
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    for (Rational& c : r) c = -c;
    f1 = normalized(std::move(r));
  }
  return chain;
}

/// Sign variations of the chain at a point, zero values skipped.
inline int variations(const std::vector<Poly>& chain, const Rational& s) {
  int count = 0;
  int prev = 0;
  for (const Poly& f : chain) {
    const int sig = sgn(eval(f, s));
    if (sig == 0) continue;
    if (prev != 0 && sig != prev) ++count;
    prev = sig;
  }
  return count;
}

/// Cauchy bound: every real root has absolute value strictly below this.
inline Rational root_upper_bound(const Poly& p_in) {
  Poly p = trimmed(p_in);
  if (degree(p) < 1) return Rational(1);
  Rational max_ratio(0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational ratio = abs(p[i] / p.back());
    if (ratio > max_ratio) max_ratio = ratio;
  }
  return max_ratio + 1;
}

/// Every nonzero real root has absolute value strictly above this
/// (requires p(0) != 0).
inline Rational root_lower_bound(const Poly& p_in) {
  Poly p = trimmed(p_in);
  if (degree(p) < 1) return Rational(1);
  Rational max_ratio(0);
  for (std::size_t i = 1; i < p.size(); ++i) {
    Rational ratio = abs(p[i] / p[0]);
    if (ratio > max_ratio) max_ratio = ratio;
  }
  return Rational(1) / (max_ratio + 1);
}

}  // namespace polyops

namespace detail {

/// A point in (a, b) where g does not vanish. g has finitely many roots, so
/// scanning dyadic subdivision points terminates quickly for small degrees.
inline Rational nonroot_between(const Poly& g, const Rational& a, const Rational& b) {
  const Rational width = b - a;
  for (long den = 2; den <= 1024; den *= 2) {
    for (long num = 1; num < den; num += 2) {
      Rational t = a + width * Rational(num, den);
      if (sgn(polyops::eval(g, t)) != 0) return t;
    }
  }
  throw std::logic_error("could not find a non-root subdivision point");
}

}  // namespace detail

/// Isolates the distinct real roots of a square-free polynomial in (lo, hi)
/// into disjoint open intervals, one root each. Endpoints are never roots;
/// requires g(lo) != 0 and g(hi) != 0.
inline std::vector<std::pair<Rational, Rational>> isolate_roots(
    const Poly& g, const std::vector<Poly>& chain, const Rational& lo, const Rational& hi) {
  struct Segment {
    Rational a, b;
    int va, vb;
  };
  std::vector<std::pair<Rational, Rational>> out;
  std::vector<Segment> work;
  work.push_back({lo, hi, polyops::variations(chain, lo), polyops::variations(chain, hi)});
  while (!work.empty()) {
    Segment seg = std::move(work.back());
    work.pop_back();
    const int count = seg.va - seg.vb;
    if (count <= 0) continue;
    if (count == 1) {
      out.emplace_back(seg.a, seg.b);
      continue;
    }
    const Rational mid = detail::nonroot_between(g, seg.a, seg.b);
    const int vm = polyops::variations(chain, mid);
    work.push_back({seg.a, mid, seg.va, vm});
    work.push_back({mid, seg.b, vm, seg.vb});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

/// Rational roots of a polynomial whose square-free part has degree <= 2.
/// Covers the repeated-root parts of quartics, which is where rational zero
/// witnesses of copositive-but-not-strict forms live.
inline std::vector<Rational> rational_roots_low_degree(const Poly& h_in) {
  Poly g = polyops::square_free_part(h_in);
  std::vector<Rational> roots;
  if (polyops::degree(g) == 1) {
    roots.push_back(-g[0] / g[1]);
  } else if (polyops::degree(g) == 2) {
    const Rational disc = g[1] * g[1] - 4 * g[2] * g[0];
    if (auto root = exact_sqrt(disc)) {
      roots.push_back((-g[1] + *root) / (2 * g[2]));
      roots.push_back((-g[1] - *root) / (2 * g[2]));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Exact sign portrait of a univariate polynomial on [0, infinity).
struct HalflineAnalysis {
  bool nonneg = false;    // p(s) >= 0 for all s >= 0
  bool positive = false;  // p(s) > 0 for all s >= 0
  int distinct_positive_roots = 0;
  bool root_at_zero = false;
  /// A rational s >= 0 with p(s) = 0, when one exists and is rational.
  std::optional<Rational> zero_point;
  /// A rational s >= 0 with p(s) < 0; present whenever nonneg is false.
  std::optional<Rational> negative_point;
};

inline HalflineAnalysis analyze_halfline(const Poly& p_in) {
  HalflineAnalysis out;
  const Poly p = polyops::trimmed(p_in);
  if (p.empty()) {
    out.nonneg = true;
    out.root_at_zero = true;
    out.zero_point = Rational(0);
    return out;
  }

  // p = s^k * q with q(0) != 0; for s > 0 the sign of p is the sign of q.
  std::size_t k = 0;
  while (k < p.size() && sgn(p[k]) == 0) ++k;
  const Poly q(p.begin() + static_cast<std::ptrdiff_t>(k), p.end());
  out.root_at_zero = k > 0;
  const Rational p_at_zero = out.root_at_zero ? Rational(0) : q[0];

  std::vector<std::pair<Rational, Rational>> intervals;
  if (polyops::degree(q) >= 1) {
    const Poly g = polyops::square_free_part(q);
    const auto chain = polyops::sturm_chain(g);
    Rational hi = polyops::root_upper_bound(g);
    while (sgn(polyops::eval(g, hi)) == 0) hi += 1;
    intervals = isolate_roots(g, chain, Rational(0), hi);

    std::vector<Rational> samples;
    if (intervals.empty()) {
      samples.push_back(hi);
    } else {
      samples.push_back(polyops::root_lower_bound(q) / 2);  // below the smallest positive root
      for (const auto& iv : intervals) samples.push_back(iv.second);
      samples.push_back(hi);
    }
    bool all_pos = sgn(p_at_zero) >= 0;
    if (sgn(p_at_zero) < 0) out.negative_point = Rational(0);
    for (const Rational& s : samples) {
      if (sgn(polyops::eval(q, s)) < 0) {
        all_pos = false;
        if (!out.negative_point) out.negative_point = s;
      }
    }
    out.nonneg = all_pos;
  } else {
    const bool cpos = sgn(q[0]) > 0;
    out.nonneg = cpos;
    if (!cpos) out.negative_point = out.root_at_zero ? Rational(1) : Rational(0);
  }

  out.distinct_positive_roots = static_cast<int>(intervals.size());
  out.positive = out.nonneg && !out.root_at_zero && intervals.empty();

  if (out.root_at_zero) {
    out.zero_point = Rational(0);
  } else if (out.nonneg && !intervals.empty()) {
    // A zero of a nonnegative p has even multiplicity, so it is a root of
    // gcd(q, q'); that part has low degree and yields rational roots exactly.
    const Poly h = polyops::gcd(q, polyops::derivative(q));
    for (const Rational& r : rational_roots_low_degree(h)) {
      if (sgn(r) > 0 && sgn(polyops::eval(q, r)) == 0) {
        out.zero_point = r;
        break;
      }
    }
  }
  return out;
}

}  // namespace coposit
