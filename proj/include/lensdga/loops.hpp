#pragma once

// Lifted F_{p,q}-invariant grid diagram of the preimage of K(p,q,h) in S^3
// and the N-/S-loops on it whose chords index b-only boundary words.
//
// Strand points are the basepoint lifts met while walking along the lifted
// knot; point t (t in Z, period L = p(h+v)) has unwrapped grid position
// U(t). Within one period of h+v steps the knot first moves h columns
// right, then v rows up (rows grow downward). A point with t ≡ j (mod h+v),
// 1 <= j < h+v, is a lift of the upper end of chord b_j; points with
// t ≡ 0 sit in box 0 and are the lower ends of every b-chord lift.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lensdga/lagrangian.hpp"

namespace lensdga {

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Offset {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  friend auto operator<=>(const Offset&, const Offset&) = default;
};

/// End of a lifted b-chord traversed downward from its upper point.
struct ChordDrop {
  std::int64_t lower = 0;  // strand index of the box-0 end, in [0, L)
  Offset shift;            // (-(p - x_j), -(p - x_j))
};

class LiftedDiagram {
 public:
  /// Rejects non-primitive specs with ScopeError.
  explicit LiftedDiagram(const GridOneSpec& spec);

  const GridOneSpec& spec() const { return spec_; }
  int period() const { return spec_.h() + spec_.v(); }
  std::int64_t strand_count() const { return static_cast<std::int64_t>(spec_.p()) * period(); }
  /// Number of components of the lifted knot, gcd(h,p).
  int components() const { return components_; }

  Offset unwrapped(std::int64_t t) const;
  Cell position(std::int64_t t) const;
  /// Crossing whose b-chord starts at t, 0 for box-0 points.
  int crossing_at(std::int64_t t) const;
  /// Strand index in [0, L) of the box-0 point at `cell`.
  std::int64_t box0_index(Cell cell) const;
  /// The deck transformation: one row down, q columns right.
  Cell deck_shift(Cell c) const;
  bool deck_invariant() const;

  /// Needs k = 1; otherwise ScopeError.
  ChordDrop drop(std::int64_t upper) const;
  /// x_j / p for a-lifts, (p - x_j) / p for b-lifts.
  ExactFraction lifted_chord_length(int j, ChordKind kind) const;
  /// The fixed lift of b_j: the one whose box-0 end is strand point 0.
  std::int64_t base_lift(int j) const;

 private:
  GridOneSpec spec_;
  int components_ = 1;
  std::vector<int> steps_;  // chord_steps, index j (k = 1 only)
  std::map<Cell, std::int64_t> box0_;
};

enum class LoopKind { N, S, Ni, Si };
std::string to_string(LoopKind kind);

struct ChordVisit {
  int crossing = 0;
  std::int64_t upper = 0;
  std::int64_t lower = 0;
};

/// Strand segment walked between two chords, indices unreduced.
struct Segment {
  std::int64_t from = 0;
  std::int64_t to = 0;
};

struct LoopPath {
  LoopKind kind = LoopKind::N;
  /// i for N_i/S_i loops, the base crossing otherwise.
  int generator = 0;
  /// chords[0] is the fixed base chord; segments[k] follows chords[k].
  std::vector<ChordVisit> chords;
  std::vector<Segment> segments;

  /// b-symbols of the chords after the base chord.
  std::vector<GeneratorRef> boundary_word() const;
};

/// Explicit depth-first enumeration of all N (or S) loops through the base
/// lift of b_j. Throws std::length_error past `limit` loops.
std::vector<LoopPath> enumerate_loops(const LiftedDiagram& lifted, LoopKind kind, int base_crossing,
                                      std::size_t limit = 200000);

/// N_i- and S_i-loops: the N and S loops through b_i with that chord read
/// as a_i.
std::vector<LoopPath> loops_for_generator(const LiftedDiagram& lifted, int i, std::size_t limit = 200000);

/// Multiset of suffix words (crossing indices after the base chord).
using WordCounts = std::map<std::vector<int>, std::uint64_t>;

/// Counts loops by boundary word without listing them. Only chords whose
/// crossing is in `allowed` may be used after the base chord; empty
/// `allowed` means all chords.
WordCounts loop_word_counts(const LiftedDiagram& lifted, LoopKind kind, int base_crossing,
                            const std::vector<int>& allowed = {});

std::uint64_t total(const WordCounts& counts);

struct SwitchBound {
  int chords = 0;  // 2k+1 for S, 2k for N
  int k = 0;
};

/// Largest odd (S) or even (N) number at most (p-1)/2. p must be odd.
SwitchBound max_switch_chords(int p, LoopKind kind);

struct LoopCount {
  int k = 0;
  std::uint64_t count = 0;
  int parity = 0;
};

/// S(k) = k+1 + sum_{i=1..k} i S(k-i), S(0) = 1.
LoopCount count_S(int k);
/// N(k) = 1 + sum_{i=1..k} i N(k-i), N(0) = 1.
LoopCount count_N(int k);

enum class LengthParity { Odd, Even };

/// Alternating subsequences of ABAB...A (length 2k+1) that start with A,
/// by brute force over all subsets. Needs k <= 15.
std::uint64_t count_subseq_bruteforce(int k, LengthParity parity);

/// Addition that throws std::overflow_error instead of wrapping.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

}  // namespace lensdga
