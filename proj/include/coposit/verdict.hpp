#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "sym_tensor.hpp"

namespace coposit {

/// Three-way copositivity decision.
enum class Verdict { NotCopositive, CopositiveNotStrict, StrictlyCopositive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotCopositive: return "not_copositive";
    case Verdict::CopositiveNotStrict: return "copositive_not_strict";
    case Verdict::StrictlyCopositive: return "strictly_copositive";
  }
  return "?";
}

enum class WitnessKind { Negative, Zero, Positive };

inline const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Negative: return "negative";
    case WitnessKind::Zero: return "zero";
    case WitnessKind::Positive: return "positive";
  }
  return "?";
}

/// A nonnegative nonzero vector together with its form value. The kind
/// always matches the sign of the value.
template <class S>
struct Witness {
  std::vector<S> x;
  S value;
  WitnessKind kind;
};

template <class S>
Witness<S> make_witness(const SymTensor<S>& T, std::vector<S> x) {
  bool nonzero = false;
  for (const S& c : x) {
    if (c < S(0)) throw std::invalid_argument("witness coordinates must be nonnegative");
    if (!(c == S(0))) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("witness must be a nonzero vector");
  S value = T.evaluate(x);
  const int s = sign_of(value);
  const WitnessKind kind =
      s < 0 ? WitnessKind::Negative : (s > 0 ? WitnessKind::Positive : WitnessKind::Zero);
  return Witness<S>{std::move(x), std::move(value), kind};
}

/// Witness at an integer lattice point, reduced by the gcd of its coordinates
/// so reports stay readable ((120,120) -> (1,1)).
template <class S>
Witness<S> make_lattice_witness(const SymTensor<S>& T, std::vector<long long> k) {
  long long g = 0;
  for (long long c : k) g = std::gcd(g, c);
  if (g > 1)
    for (long long& c : k) c /= g;
  std::vector<S> x;
  x.reserve(k.size());
  for (long long c : k) {
    S coord(0);
    coord += static_cast<long>(c);
    x.push_back(coord);
  }
  return make_witness(T, std::move(x));
}

/// Outcome of one analytic rule: which rule fired (if any), its verdict,
/// and an explicit evidence point for rejections when one is available.
template <class S>
struct ClassifierReport {
  bool applicable = false;
  std::optional<Verdict> verdict;
  std::string rule;
  std::optional<Witness<S>> evidence;
  bool decisive = false;
};

}  // namespace coposit
