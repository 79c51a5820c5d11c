#include <doctest.h>

#include <set>

#include "lensdga/loops.hpp"

using namespace lensdga;

TEST_CASE("lifted diagrams") {
  LiftedDiagram a(GridOneSpec::from_separation(5, 2, 3));
  CHECK(a.components() == 1);
  CHECK(a.strand_count() == 20);
  CHECK(a.deck_invariant());
  LiftedDiagram b(GridOneSpec::from_separation(8, 3, 5));
  CHECK(b.components() == 1);
  CHECK(b.deck_invariant());
  CHECK_THROWS_AS(b.drop(1), ScopeError);
  CHECK_THROWS_AS(LiftedDiagram(GridOneSpec::from_separation(9, 8, 3)), ScopeError);
}

TEST_CASE("strand points are distinct cells") {
  LiftedDiagram d(GridOneSpec::from_separation(11, 4, 2));
  std::set<Cell> cells;
  for (std::int64_t t = 0; t < d.strand_count(); ++t) cells.insert(d.position(t));
  CHECK(cells.size() == static_cast<std::size_t>(d.strand_count()));
}

TEST_CASE("lifted chords keep their length") {
  auto spec = GridOneSpec::from_separation(7, 6, 2);
  LiftedDiagram d(spec);
  for (int j = 1; j < d.period(); ++j) {
    CHECK(d.lifted_chord_length(j, ChordKind::A) == chord_length(spec, j, ChordKind::A));
    CHECK(d.lifted_chord_length(j, ChordKind::B) == chord_length(spec, j, ChordKind::B));
    auto t = d.base_lift(j);
    CHECK(d.crossing_at(t) == j);
    CHECK(d.drop(t).lower == 0);
  }
}

TEST_CASE("K(7,6,2) loops through b_N = b3") {
  LiftedDiagram d(GridOneSpec::from_separation(7, 6, 2));
  auto s = enumerate_loops(d, LoopKind::S, 3);
  auto n = enumerate_loops(d, LoopKind::N, 3);
  CHECK(s.size() == 3);
  CHECK(n.size() == 2);
  for (const auto& loop : s) {
    CHECK(loop.chords.front().crossing == 3);
    CHECK(loop.segments.size() == loop.chords.size());
    for (const auto& y : loop.boundary_word()) CHECK(y == b_gen(2));
  }
  CHECK(total(loop_word_counts(d, LoopKind::S, 3)) == 3);
  CHECK(total(loop_word_counts(d, LoopKind::N, 3)) == 2);
}

TEST_CASE("K(p,p-1,1) has one loop of each kind") {
  for (int p : {3, 5, 7, 9, 11}) {
    LiftedDiagram d(GridOneSpec::from_separation(p, p - 1, 1));
    auto s = enumerate_loops(d, LoopKind::S, 1);
    auto n = enumerate_loops(d, LoopKind::N, 1);
    REQUIRE(s.size() == 1);
    REQUIRE(n.size() == 1);
    CHECK(s[0].boundary_word().empty());
    CHECK(n[0].boundary_word().empty());
  }
}

TEST_CASE("loops_for_generator tags loops") {
  LiftedDiagram d(GridOneSpec::from_separation(7, 6, 2));
  auto loops = loops_for_generator(d, 3);
  CHECK(loops.size() == 5);
  int si = 0;
  for (const auto& l : loops) {
    CHECK((l.kind == LoopKind::Ni || l.kind == LoopKind::Si));
    si += l.kind == LoopKind::Si;
  }
  CHECK(si == 3);
}

TEST_CASE("allowed chords restrict the count") {
  LiftedDiagram d(GridOneSpec::from_separation(7, 6, 2));
  // only the single-chord N-loop survives when no other chord is allowed
  CHECK(total(loop_word_counts(d, LoopKind::S, 3, {3})) == 0);
  CHECK(total(loop_word_counts(d, LoopKind::N, 3, {3})) == 1);
  CHECK(total(loop_word_counts(d, LoopKind::S, 3, {1, 2, 3})) == 3);
}

TEST_CASE("enumeration limit") {
  LiftedDiagram d(GridOneSpec::from_separation(11, 10, 2));
  CHECK_THROWS_AS(enumerate_loops(d, LoopKind::S, 3, 2), std::length_error);
}

TEST_CASE("max_switch_chords") {
  CHECK(max_switch_chords(11, LoopKind::S).chords == 5);
  CHECK(max_switch_chords(11, LoopKind::S).k == 2);
  CHECK(max_switch_chords(7, LoopKind::N).chords == 2);
  CHECK(max_switch_chords(7, LoopKind::N).k == 1);
  CHECK(max_switch_chords(3, LoopKind::S).chords == 1);
  CHECK(max_switch_chords(3, LoopKind::S).k == 0);
  CHECK_THROWS_AS(max_switch_chords(8, LoopKind::S), std::invalid_argument);
}

TEST_CASE("S and N recursions") {
  CHECK(count_S(0).count == 1);
  CHECK(count_S(1).count == 3);
  CHECK(count_S(2).count == 8);
  CHECK(count_S(3).count == 21);
  CHECK(count_N(0).count == 1);
  CHECK(count_N(1).count == 2);
  CHECK(count_N(2).count == 5);
  CHECK(count_N(3).count == 13);
  CHECK(count_S(2).parity == 0);
  CHECK_THROWS_AS(count_S(-1), std::invalid_argument);
}

TEST_CASE("brute-force subsequence oracle") {
  CHECK(count_subseq_bruteforce(1, LengthParity::Odd) == 3);
  CHECK(count_subseq_bruteforce(2, LengthParity::Odd) == 8);
  CHECK(count_subseq_bruteforce(0, LengthParity::Even) == 1);
  CHECK_THROWS_AS(count_subseq_bruteforce(16, LengthParity::Odd), std::invalid_argument);
}

TEST_CASE("checked_add") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(~std::uint64_t{0}, 1), std::overflow_error);
}
