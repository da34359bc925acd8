#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sign_classifiers.hpp"
#include "simplex_oracle.hpp"
#include "sym_tensor.hpp"
#include "verdict.hpp"

namespace coposit {

/// An enumerable family of sign tensors: fixed entries plus free slots, where
/// each slot picks one alternative assignment (possibly covering several
/// coupled entries at once, e.g. a pair constrained to opposite signs).
struct FamilySpec {
  struct Alternative {
    std::vector<std::pair<MultiIndex, int>> assignment;
  };
  struct Slot {
    std::vector<Alternative> alternatives;
  };

  std::string name;
  int dim = 0;
  std::vector<std::pair<MultiIndex, int>> fixed;
  std::vector<Slot> slots;
  std::size_t expected_count = 0;
};

namespace detail {

inline FamilySpec::Slot ternary_slot(MultiIndex idx) {
  FamilySpec::Slot slot;
  for (int v : {-1, 0, 1}) slot.alternatives.push_back({{{idx, v}}});
  return slot;
}

inline FamilySpec::Slot pm_slot(MultiIndex idx) {
  FamilySpec::Slot slot;
  for (int v : {-1, 1}) slot.alternatives.push_back({{{idx, v}}});
  return slot;
}

inline FamilySpec::Slot opposite_pair_slot(MultiIndex a, MultiIndex b) {
  FamilySpec::Slot slot;
  slot.alternatives.push_back({{{a, 1}, {b, -1}}});
  slot.alternatives.push_back({{{a, -1}, {b, 1}}});
  return slot;
}

inline std::vector<std::pair<MultiIndex, int>> unit_diag_near_diag_3d() {
  std::vector<std::pair<MultiIndex, int>> fixed;
  for (int i = 1; i <= 3; ++i) fixed.push_back({MultiIndex{i, i, i, i}, 1});
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) fixed.push_back({canonicalized(MultiIndex{i, i, i, j}, 3), 1});
  return fixed;
}

}  // namespace detail

inline const std::vector<FamilySpec>& builtin_families() {
  static const std::vector<FamilySpec> families = [] {
    std::vector<FamilySpec> out;

    {
      FamilySpec f;
      f.name = "L25";
      f.dim = 2;
      for (const MultiIndex& idx : std::vector<MultiIndex>{
               {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2}, {2, 2, 2, 2}})
        f.slots.push_back(detail::ternary_slot(idx));
      f.expected_count = 243;
      out.push_back(std::move(f));
    }
    {
      FamilySpec f;
      f.name = "L26";
      f.dim = 2;
      for (const MultiIndex& idx : std::vector<MultiIndex>{
               {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2}, {2, 2, 2, 2}})
        f.slots.push_back(detail::pm_slot(idx));
      f.expected_count = 32;
      out.push_back(std::move(f));
    }
    {
      FamilySpec f;
      f.name = "T32";
      f.dim = 3;
      for (int i = 1; i <= 3; ++i) f.fixed.push_back({MultiIndex{i, i, i, i}, 1});
      f.fixed.push_back({MultiIndex{1, 1, 2, 2}, 1});
      f.fixed.push_back({MultiIndex{1, 1, 3, 3}, 1});
      f.fixed.push_back({MultiIndex{2, 2, 3, 3}, 1});
      f.slots.push_back(detail::opposite_pair_slot({1, 1, 1, 2}, {1, 2, 2, 2}));
      f.slots.push_back(detail::opposite_pair_slot({1, 1, 1, 3}, {1, 3, 3, 3}));
      f.slots.push_back(detail::opposite_pair_slot({2, 2, 2, 3}, {2, 3, 3, 3}));
      f.slots.push_back(detail::pm_slot({1, 1, 2, 3}));
      f.slots.push_back(detail::pm_slot({1, 2, 2, 3}));
      f.slots.push_back(detail::pm_slot({1, 2, 3, 3}));
      f.expected_count = 64;
      out.push_back(std::move(f));
    }
    {
      FamilySpec f;
      f.name = "T33";
      f.dim = 3;
      f.fixed = detail::unit_diag_near_diag_3d();
      f.fixed.push_back({MultiIndex{1, 1, 2, 2}, -1});
      f.fixed.push_back({MultiIndex{1, 1, 3, 3}, -1});
      f.fixed.push_back({MultiIndex{2, 2, 3, 3}, -1});
      f.slots.push_back(detail::ternary_slot({1, 1, 2, 3}));
      f.slots.push_back(detail::ternary_slot({1, 2, 2, 3}));
      f.slots.push_back(detail::ternary_slot({1, 2, 3, 3}));
      f.expected_count = 27;
      out.push_back(std::move(f));
    }
    {
      FamilySpec f;
      f.name = "T36";
      f.dim = 3;
      f.fixed = detail::unit_diag_near_diag_3d();
      f.fixed.push_back({MultiIndex{1, 1, 2, 3}, -1});
      f.fixed.push_back({MultiIndex{1, 2, 2, 3}, -1});
      f.fixed.push_back({MultiIndex{1, 2, 3, 3}, -1});
      f.slots.push_back(detail::ternary_slot({1, 1, 2, 2}));
      f.slots.push_back(detail::ternary_slot({1, 1, 3, 3}));
      f.slots.push_back(detail::ternary_slot({2, 2, 3, 3}));
      f.expected_count = 27;
      out.push_back(std::move(f));
    }
    {
      FamilySpec f;
      f.name = "C34";
      f.dim = 3;
      f.fixed = detail::unit_diag_near_diag_3d();
      f.slots.push_back(detail::ternary_slot({1, 1, 2, 2}));
      f.slots.push_back(detail::ternary_slot({1, 1, 3, 3}));
      f.slots.push_back(detail::ternary_slot({2, 2, 3, 3}));
      f.slots.push_back(detail::ternary_slot({1, 1, 2, 3}));
      f.slots.push_back(detail::ternary_slot({1, 2, 2, 3}));
      f.slots.push_back(detail::ternary_slot({1, 2, 3, 3}));
      f.expected_count = 729;
      out.push_back(std::move(f));
    }
    return out;
  }();
  return families;
}

inline const FamilySpec* find_family(std::string_view name) {
  for (const FamilySpec& f : builtin_families())
    if (f.name == name) return &f;
  return nullptr;
}

/// Every member exactly once, deterministic odometer order over the slots
/// (rightmost slot advances fastest).
inline std::vector<RationalTensor> enumerate_family(const FamilySpec& spec) {
  std::vector<RationalTensor> out;
  std::vector<std::size_t> pick(spec.slots.size(), 0);
  bool done = false;
  while (!done) {
    std::vector<RationalTensor::Entry> entries;
    for (const auto& [idx, v] : spec.fixed) entries.emplace_back(idx, Rational(v));
    for (std::size_t s = 0; s < spec.slots.size(); ++s)
      for (const auto& [idx, v] : spec.slots[s].alternatives[pick[s]].assignment)
        entries.emplace_back(idx, Rational(v));
    out.emplace_back(4, spec.dim, entries);

    done = true;
    for (std::size_t pos = pick.size(); pos-- > 0;) {
      if (++pick[pos] < spec.slots[pos].alternatives.size()) {
        done = false;
        break;
      }
      pick[pos] = 0;
    }
  }
  if (out.size() != spec.expected_count)
    throw std::logic_error("family " + spec.name + " generated " + std::to_string(out.size()) +
                           " members, expected " + std::to_string(spec.expected_count));
  return out;
}

/// Order-sensitive digest of the enumerated stream; stable across runs and
/// thread counts.
inline std::uint64_t family_stream_hash(const FamilySpec& spec) {
  std::uint64_t h = 1469598103934665603ULL;
  const auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (const RationalTensor& T : enumerate_family(spec)) {
    mix(static_cast<std::uint64_t>(T.dim()));
    for (const auto& [idx, value] : T.entries()) {
      for (int label : idx) mix(static_cast<std::uint64_t>(label));
      mix(static_cast<std::uint64_t>(value.get_num().get_si() + 7));
    }
    mix(0x9e3779b97f4a7c15ULL);
  }
  return h;
}

/// The family's own gated rule applied to one member.
inline ClassifierReport<Rational> family_classifier(const FamilySpec& spec,
                                                    const RationalTensor& T) {
  if (spec.name == "L25") {
    const auto sign2 = SignTensor4x2::from_tensor(T);
    if (!sign2) throw std::logic_error("L25 member failed its own gate");
    return classify_sign_2d(*sign2);
  }
  if (spec.name == "L26") {
    const auto sign2 = SignTensor4x2::from_tensor(T);
    if (!sign2) throw std::logic_error("L26 member failed its own gate");
    ClassifierReport<Rational> report;
    report.applicable = true;
    report.rule = "lemma26";
    report.decisive = true;
    if (strict_sign_2d_allones(*sign2)) report.verdict = Verdict::StrictlyCopositive;
    return report;
  }
  const auto sign3 = SignTensor4x3::from_tensor(T);
  if (!sign3) throw std::logic_error(spec.name + " member failed its own gate");
  ClassifierReport<Rational> report;
  if (spec.name == "T32")
    report = thm32_decide(*sign3);
  else if (spec.name == "T33")
    report = thm33_decide(*sign3);
  else if (spec.name == "T36")
    report = thm36_decide(*sign3);
  else if (spec.name == "C34")
    report = cor34_sufficient(*sign3);
  else
    throw std::invalid_argument("unknown family: " + spec.name);
  if (!report.applicable) throw std::logic_error(spec.name + " member failed its own gate");
  return report;
}

struct FamilyCheckRow {
  std::size_t index = 0;
  RationalTensor tensor{4, 2};
  ClassifierReport<Rational> classifier;
  OracleVerdict<Rational> oracle;
  bool mismatch = false;
};

/// Per-member comparison of the family's gated rule against the lattice
/// oracle. For the strict-only rules (L26, C34) only claimed certificates
/// are compared; silence is not a mismatch.
inline std::vector<FamilyCheckRow> family_check(const FamilySpec& spec, long long resolution = 0,
                                                const OracleOptions& base = {}) {
  OracleOptions opts = base;
  opts.resolution = resolution > 0 ? resolution : default_resolution(spec.dim);

  std::vector<FamilyCheckRow> rows;
  const auto members = enumerate_family(spec);
  for (std::size_t index = 0; index < members.size(); ++index) {
    FamilyCheckRow row;
    row.index = index;
    row.tensor = members[index];
    row.classifier = family_classifier(spec, row.tensor);
    row.oracle = oracle_verdict(row.tensor, opts);

    if (spec.name == "L26") {
      const bool claims_strict =
          row.classifier.verdict && *row.classifier.verdict == Verdict::StrictlyCopositive;
      row.mismatch = row.oracle.decisive &&
                     claims_strict != (row.oracle.verdict == Verdict::StrictlyCopositive);
    } else if (spec.name == "C34") {
      row.mismatch = row.classifier.verdict.has_value() && row.oracle.decisive &&
                     row.oracle.verdict != Verdict::StrictlyCopositive;
    } else {
      row.mismatch = row.classifier.verdict.has_value() && row.oracle.decisive &&
                     row.oracle.verdict != *row.classifier.verdict;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// One classifier/oracle conflict; recorded only when the oracle is decisive.
struct MismatchRecord {
  std::size_t member_index;
  RationalTensor tensor;
  ClassifierReport<Rational> classifier;
  OracleVerdict<Rational> oracle;
};

inline std::vector<MismatchRecord> cross_validate(const FamilySpec& spec,
                                                  long long resolution = 0,
                                                  const OracleOptions& base = {}) {
  std::vector<MismatchRecord> mismatches;
  for (auto& row : family_check(spec, resolution, base))
    if (row.mismatch)
      mismatches.push_back({row.index, row.tensor, row.classifier, row.oracle});
  return mismatches;
}

}  // namespace coposit
