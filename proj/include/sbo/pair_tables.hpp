#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sbo/rational.hpp"

namespace sbo {

// One summand of a Lie-algebra descriptor: a named simple (or reductive)
// factor with integer signature arguments and an optional field marker,
// e.g. o(3,1), sl(4,R), su*(6), f4(-20), plus the special atoms R and 0,
// the s(...) trace-zero wrapper, and a "diag" marker.
struct AlgebraAtom {
  std::string name;
  std::vector<long> args;
  char field = 0;  // 0, 'R', 'C', 'H'
  bool diag = false;
  std::vector<AlgebraAtom> inner;  // only for the s(...) wrapper (name == "s")
};

using AlgebraSum = std::vector<AlgebraAtom>;

struct PairDescriptor {
  AlgebraSum g, h;
};

// Parses "(g, h)" in the small descriptor grammar. Throws precondition_error
// on malformed input.
PairDescriptor parse_pair(std::string_view text);
AlgebraSum parse_algebra(std::string_view text);

// Canonical form: so -> o naming, signatures sorted descending with trailing
// zeros dropped, zero-dimensional summands removed, s(single u) collapsed to
// su, summands sorted. Idempotent.
AlgebraSum normalize(const AlgebraSum& a);
std::string algebra_to_string(const AlgebraSum& a);
std::string normalize_descriptor(std::string_view pair_text);

struct MatchedFamily {
  std::string tag;
  std::map<std::string, long> params;
};

struct PairQueryResult {
  std::string normalized;
  std::vector<MatchedFamily> families;  // empty: no match under implemented rules
  bool finite = false;
  bool bounded = false;
};

struct PairRecord {
  std::string tag;
  std::string pattern_g, pattern_h;
  std::string constraints;
  bool finite = false;
  bool bounded = false;
  std::string note;
};

struct ComplexFormRecord {
  std::string g, k, g_r;
  std::vector<std::string> constraints;  // nonempty when the split is not unique
};

enum class FamilyFilter { PP, BB, All };

class PairTable {
 public:
  // Embedded copy of the classification data, or the file named by
  // SBO_TABLE_PATH when that variable is set.
  static PairTable load_default();
  static PairTable load_file(const std::string& path);
  static PairTable load_json(const std::string& json_text);

  int version() const { return version_; }

  // Finite-multiplicity test: matches the whole pair against families A-H,
  // then falls back to direct-sum decomposition over the explicit patterns.
  PairQueryResult pp_query(const std::string& pair_text) const;

  // Uniformly-bounded-multiplicity test: decomposition over A, B, F1-F5.
  bool bb_query(const std::string& pair_text) const;

  std::optional<ComplexFormRecord> complex_form_lookup(const std::string& g_text) const;

  std::vector<PairRecord> list_families(FamilyFilter filter) const;

  const std::vector<std::string>& annotations() const { return annotations_; }

 private:
  struct Impl;
  explicit PairTable(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  int version_ = 0;
  std::vector<std::string> annotations_;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace sbo
