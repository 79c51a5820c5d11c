#pragma once

// Z2 words, differential fragments built from loops and region discs,
// the Fuchs parity test, and augmentation search.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lensdga/lagrangian.hpp"
#include "lensdga/loops.hpp"

namespace lensdga {

/// Empty word = constant term 1.
using Word = std::vector<GeneratorRef>;

std::string to_string(const Word& word);

struct DifferentialFragment {
  GridOneSpec spec;
  /// Generator -> word -> multiplicity (a multiset; only parity matters).
  std::map<GeneratorRef, std::map<Word, std::uint64_t>> terms;

  /// Keeps each word with odd multiplicity exactly once.
  DifferentialFragment reduced() const;
  const std::map<Word, std::uint64_t>& of(const GeneratorRef& gen) const;
};

/// True for q = p-1, h in {1,2}: the families with complete ground truth.
bool in_verified_scope(const GridOneSpec& spec);

/// a_i gets one word per N_i/S_i loop; b_i gets single-region discs with a
/// positive b_i corner and vanishing x-defect. Needs k = 1 and a primitive
/// spec; outside the verified scope needs `force`.
DifferentialFragment assemble_fragment(const GridOneSpec& spec, bool force = false);

/// Crossing of b_N, p mod (h+v); b_S is crossing h+v minus that.
int north_chord(const GridOneSpec& spec);
int south_chord(const GridOneSpec& spec);

/// Values of eps on b_1..b_n; eps(a) = 0 throughout.
struct Assignment {
  std::vector<std::uint8_t> b;

  int value(const GeneratorRef& gen) const;
  std::string to_string() const;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// Words of fragment[gen] all of whose letters map to 1, with multiplicity.
std::uint64_t fuchs_special_count(const DifferentialFragment& fragment, const Assignment& eps,
                                  const GeneratorRef& gen);

enum class SearchMode {
  /// eps(b_N) = eps(b_S) on K(p,p-1,2); unrestricted elsewhere.
  Restricted,
  Unrestricted,
};

struct Candidate {
  Assignment eps;
  std::map<GeneratorRef, std::uint64_t> special_counts;
  bool augmentation = false;
};

struct SearchResult {
  std::vector<Candidate> candidates;  // by binary value of (b_1, ..., b_n)
  std::vector<Assignment> augmentations;
  bool exists() const { return !augmentations.empty(); }
};

SearchResult augmentation_search(const DifferentialFragment& fragment, SearchMode mode = SearchMode::Restricted);

struct Theorem1Report {
  Theorem1Report(int p_, GridOneSpec spec_) : p(p_), spec(spec_) {}

  int p = 0;
  GridOneSpec spec;
  std::size_t da_terms = 0;  // after Z2 reduction
  std::size_t db_terms = 0;
  std::map<Word, std::uint64_t> da_raw;
  std::map<Word, std::uint64_t> db_raw;
  SearchResult search;
  bool pass = false;
};

/// K(p,p-1,1): checks ∂a = ∂b = 0 and that both eps(b) = 0, 1 augment.
Theorem1Report theorem1_check(int p);

/// p mod 12 in {3, 9}. Rejects even p.
bool theorem2_predicate(int p);

struct Theorem2Report {
  Theorem2Report(int p_, GridOneSpec spec_) : p(p_), spec(spec_) {}

  int p = 0;
  GridOneSpec spec;
  int north = 0;
  int south = 0;
  SwitchBound s_bound;
  SwitchBound n_bound;
  std::uint64_t s_loops = 0;  // S-loops through the fixed b_N
  std::uint64_t n_loops = 0;
  SearchResult search;
  bool exists = false;
  bool predicate = false;
  bool agree() const { return exists == predicate; }
};

/// Runs the restricted search on K(p,p-1,2) and compares with the predicate.
Theorem2Report theorem2_verify(int p);

}  // namespace lensdga
