#pragma once

#include <random>
#include <vector>

#include <coposit/coposit.hpp>

namespace coposit::testing {

/// Independent evaluation oracle: full m-fold nested summation over every
/// index tuple, no multiplicity shortcut. Deliberately kept separate from
/// SymTensor::evaluate so the two routes can check each other.
template <class S>
S nested_sum_evaluate(const SymTensor<S>& T, const std::vector<S>& x) {
  const int m = T.order();
  const int n = T.dim();
  MultiIndex idx(static_cast<std::size_t>(m), 1);
  S total(0);
  while (true) {
    S term = T.at(idx);
    if (!(term == S(0))) {
      for (int label : idx) term *= x[static_cast<std::size_t>(label - 1)];
      total += term;
    }
    int pos = m - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < m; ++i) idx[static_cast<std::size_t>(i)] = 1;
  }
  return total;
}

/// Uniform rational with numerator in [-num_range, num_range] and denominator
/// drawn from {1, 2}.
inline Rational random_half_integer(std::mt19937& rng, int num_range) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, 2);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_positive_half_integer(std::mt19937& rng, int num_range) {
  std::uniform_int_distribution<int> num(1, num_range);
  std::uniform_int_distribution<int> den(1, 2);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random order-4 tensor with half-integer entries on every canonical slot.
inline RationalTensor random_quartic_tensor(std::mt19937& rng, int dim, int num_range = 3) {
  std::vector<RationalTensor::Entry> entries;
  for (const MultiIndex& idx : canonical_indices(4, dim))
    entries.emplace_back(idx, random_half_integer(rng, num_range));
  return RationalTensor(4, dim, entries);
}

/// Member of the opposite-pair family: unit diagonal and square pairs,
/// near-diagonal pairs (t1112,t1222)=(p12,-p12) etc., mixed slots m1,m2,m3.
inline RationalTensor unit_pair_tensor(int p12, int p13, int p23, int m1, int m2, int m3) {
  return RationalTensor(4, 3,
                        {{{1, 1, 1, 1}, Rational(1)},   {{2, 2, 2, 2}, Rational(1)},
                         {{3, 3, 3, 3}, Rational(1)},   {{1, 1, 2, 2}, Rational(1)},
                         {{1, 1, 3, 3}, Rational(1)},   {{2, 2, 3, 3}, Rational(1)},
                         {{1, 1, 1, 2}, Rational(p12)}, {{1, 2, 2, 2}, Rational(-p12)},
                         {{1, 1, 1, 3}, Rational(p13)}, {{1, 3, 3, 3}, Rational(-p13)},
                         {{2, 2, 2, 3}, Rational(p23)}, {{2, 3, 3, 3}, Rational(-p23)},
                         {{1, 1, 2, 3}, Rational(m1)},  {{1, 2, 2, 3}, Rational(m2)},
                         {{1, 2, 3, 3}, Rational(m3)}});
}

/// Member of the mixed-slot-sum family: unit diagonal and near-diagonals,
/// square pairs -1, mixed slots m1,m2,m3.
inline RationalTensor sum_family_tensor(int m1, int m2, int m3) {
  std::vector<RationalTensor::Entry> entries;
  for (int i = 1; i <= 3; ++i) entries.push_back({MultiIndex{i, i, i, i}, Rational(1)});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) entries.push_back({canonicalized(MultiIndex{i, i, i, j}, 3), Rational(1)});
  entries.push_back({{1, 1, 2, 2}, Rational(-1)});
  entries.push_back({{1, 1, 3, 3}, Rational(-1)});
  entries.push_back({{2, 2, 3, 3}, Rational(-1)});
  entries.push_back({{1, 1, 2, 3}, Rational(m1)});
  entries.push_back({{1, 2, 2, 3}, Rational(m2)});
  entries.push_back({{1, 2, 3, 3}, Rational(m3)});
  return RationalTensor(4, 3, entries);
}

/// Member of the square-pair family: unit diagonal and near-diagonals,
/// mixed slots -1, square pairs p,q,r.
inline RationalTensor square_family_tensor(int p, int q, int r) {
  std::vector<RationalTensor::Entry> entries;
  for (int i = 1; i <= 3; ++i) entries.push_back({MultiIndex{i, i, i, i}, Rational(1)});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) entries.push_back({canonicalized(MultiIndex{i, i, i, j}, 3), Rational(1)});
  entries.push_back({{1, 1, 2, 3}, Rational(-1)});
  entries.push_back({{1, 2, 2, 3}, Rational(-1)});
  entries.push_back({{1, 2, 3, 3}, Rational(-1)});
  entries.push_back({{1, 1, 2, 2}, Rational(p)});
  entries.push_back({{1, 1, 3, 3}, Rational(q)});
  entries.push_back({{2, 2, 3, 3}, Rational(r)});
  return RationalTensor(4, 3, entries);
}

/// The eleven strictly-copositive proof fixtures: the rewritten sum-of-terms
/// forms from the opposite-pair family's three case patterns, plus the three
/// auxiliary lower-bound forms of the other two families.
inline std::vector<RationalTensor> proof_fixture_tensors() {
  std::vector<RationalTensor> out;
  // all mixed slots positive
  out.push_back(unit_pair_tensor(-1, -1, 1, 1, 1, 1));
  // one negative mixed slot
  out.push_back(unit_pair_tensor(1, 1, 1, -1, 1, 1));
  out.push_back(unit_pair_tensor(1, -1, 1, -1, 1, 1));
  out.push_back(unit_pair_tensor(-1, 1, 1, -1, 1, 1));
  // two negative mixed slots
  out.push_back(unit_pair_tensor(1, 1, 1, -1, -1, 1));
  out.push_back(unit_pair_tensor(1, -1, 1, -1, -1, 1));
  out.push_back(unit_pair_tensor(-1, 1, 1, -1, -1, 1));
  out.push_back(unit_pair_tensor(-1, 1, -1, -1, -1, 1));
  // auxiliary lower-bound forms
  out.push_back(sum_family_tensor(-1, 1, 0));
  out.push_back(sum_family_tensor(0, 0, 0));
  out.push_back(square_family_tensor(1, 1, 0));
  return out;
}

}  // namespace coposit::testing
