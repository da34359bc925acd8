#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multi_index.hpp"
#include "rational.hpp"

namespace coposit {

/// Symmetric tensor stored sparsely over canonical (sorted) index tuples.
/// Missing entries read as exactly zero. Instances are immutable after
/// construction and safe to share across threads; every operation here is
/// a pure function of the inputs.
template <class S>
class SymTensor {
 public:
  using Scalar = S;
  using Entry = std::pair<MultiIndex, S>;

  SymTensor(int order, int dim) : order_(order), dim_(dim) {
    if (order < 1) throw std::invalid_argument("tensor order must be >= 1");
    if (dim < 1) throw std::invalid_argument("tensor dimension must be >= 1");
  }

  /// Entries may use any index permutation; keys are canonicalized and a
  /// later assignment to the same canonical slot overwrites an earlier one.
  SymTensor(int order, int dim, const std::vector<Entry>& entries) : SymTensor(order, dim) {
    for (const auto& [idx, value] : entries) {
      if (static_cast<int>(idx.size()) != order)
        throw std::invalid_argument("entry index has " + std::to_string(idx.size()) +
                                    " labels, expected " + std::to_string(order));
      MultiIndex key = canonicalized(idx, dim);
      if (value == S(0)) {
        entries_.erase(key);
      } else {
        entries_[std::move(key)] = value;
      }
    }
    rebuild_terms();
  }

  int order() const { return order_; }
  int dim() const { return dim_; }

  /// Canonical nonzero entries.
  const std::map<MultiIndex, S>& entries() const { return entries_; }

  S at(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != order_)
      throw std::invalid_argument("index tuple length does not match tensor order");
    const MultiIndex key = canonicalized(idx, dim_);
    auto it = entries_.find(key);
    return it == entries_.end() ? S(0) : it->second;
  }

  S at(std::initializer_list<int> idx) const { return at(MultiIndex(idx)); }

  /// Form value: sum over canonical tuples of multiplicity * entry * prod x_i.
  /// Exact when S is Rational.
  S evaluate(std::span<const S> x) const {
    if (static_cast<int>(x.size()) != dim_)
      throw std::invalid_argument("point has " + std::to_string(x.size()) +
                                  " coordinates, tensor dimension is " + std::to_string(dim_));
    S total(0);
    for (const Term& term : terms_) {
      S value = term.coeff;
      value *= static_cast<long>(term.mult);
      for (int label : term.idx) value *= x[static_cast<std::size_t>(label - 1)];
      total += value;
    }
    return total;
  }

  S evaluate(const std::vector<S>& x) const { return evaluate(std::span<const S>(x)); }

  /// Evaluation at an integer lattice point. Coordinate products are formed
  /// in 64-bit integers when they provably fit, otherwise in full precision.
  S evaluate_lattice(std::span<const long long> k) const {
    if (static_cast<int>(k.size()) != dim_)
      throw std::invalid_argument("lattice point dimension mismatch");
    long long max_coord = 1;
    for (long long c : k) max_coord = std::max(max_coord, c < 0 ? -c : c);
    // mult * max_coord^order must stay below 2^62, checked in logs
    const double bits = std::log2(static_cast<double>(max_coord) + 1.0) * order_ +
                        std::log2(static_cast<double>(max_mult_) + 1.0);
    if (bits >= 61.0) {
      std::vector<S> x;
      x.reserve(k.size());
      for (long long c : k) {
        S coord(0);
        coord += static_cast<long>(c);
        x.push_back(coord);
      }
      return evaluate(x);
    }
    S total(0);
    for (const Term& term : terms_) {
      long long prod = static_cast<long long>(term.mult);
      for (int label : term.idx) prod *= k[static_cast<std::size_t>(label - 1)];
      if (prod == 0) continue;
      S value = term.coeff;
      value *= static_cast<long>(prod);
      total += value;
    }
    return total;
  }

  /// Restriction to a coordinate subset, relabeled to 1..|subset| preserving order.
  SymTensor principal(std::vector<int> subset) const {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) throw std::invalid_argument("principal subtensor needs a nonempty subset");
    for (int label : subset)
      if (label < 1 || label > dim_)
        throw std::out_of_range("subset label " + std::to_string(label) + " outside 1.." +
                                std::to_string(dim_));
    std::vector<int> relabel(static_cast<std::size_t>(dim_) + 1, 0);
    for (std::size_t pos = 0; pos < subset.size(); ++pos)
      relabel[static_cast<std::size_t>(subset[pos])] = static_cast<int>(pos) + 1;

    std::vector<Entry> kept;
    for (const auto& [idx, value] : entries_) {
      MultiIndex mapped;
      mapped.reserve(idx.size());
      bool inside = true;
      for (int label : idx) {
        const int m = relabel[static_cast<std::size_t>(label)];
        if (m == 0) {
          inside = false;
          break;
        }
        mapped.push_back(m);
      }
      if (inside) kept.emplace_back(std::move(mapped), value);
    }
    return SymTensor(order_, static_cast<int>(subset.size()), kept);
  }

  std::size_t term_count() const { return terms_.size(); }

  bool operator==(const SymTensor& other) const {
    return order_ == other.order_ && dim_ == other.dim_ && entries_ == other.entries_;
  }

 private:
  struct Term {
    MultiIndex idx;
    std::uint64_t mult;
    S coeff;
  };

  void rebuild_terms() {
    terms_.clear();
    terms_.reserve(entries_.size());
    max_mult_ = 1;
    for (const auto& [idx, value] : entries_) {
      terms_.push_back({idx, multiplicity(idx), value});
      max_mult_ = std::max(max_mult_, terms_.back().mult);
    }
  }

  int order_;
  int dim_;
  std::map<MultiIndex, S> entries_;
  std::vector<Term> terms_;
  std::uint64_t max_mult_ = 1;
};

using RationalTensor = SymTensor<Rational>;
using FloatTensor = SymTensor<double>;

/// Evidence that a zero diagonal entry sits next to a negative near-diagonal
/// one: t_{i..i} = 0 with t_{i..ij} < 0, which rules out copositivity.
struct DiagonalViolation {
  int diag_label;
  int offdiag_label;
};

template <class S>
std::optional<DiagonalViolation> zero_diagonal_filter(const SymTensor<S>& T) {
  for (int i = 1; i <= T.dim(); ++i) {
    MultiIndex diag(static_cast<std::size_t>(T.order()), i);
    if (!(T.at(diag) == S(0))) continue;
    for (int j = 1; j <= T.dim(); ++j) {
      if (j == i) continue;
      MultiIndex near = diag;
      near.back() = j;
      if (T.at(near) < S(0)) return DiagonalViolation{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace coposit
