#include <doctest.h>

#include <random>

#include "lensdga/dga.hpp"
#include "lensdga/lagrangian.hpp"
#include "lensdga/loops.hpp"
#include "lensdga/selftest.hpp"

using namespace lensdga;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed5eedULL);
  return engine;
}

}  // namespace

TEST_CASE("property: v(s) solves s + vq = 0 mod p") {
  std::uniform_int_distribution<int> pick(3, 200);
  for (int trial = 0; trial < 500; ++trial) {
    const int p = pick(rng());
    const int q = std::uniform_int_distribution<int>(1, p - 1)(rng());
    const int s = std::uniform_int_distribution<int>(1, p - 1)(rng());
    if (std::gcd(p, q) != 1) continue;
    const int v = vertical_length(p, q, s);
    CHECK(v > 0);
    CHECK(v < p);
    CHECK((s + static_cast<long>(v) * q) % p == 0);
    const int h = normalize_h(p, q, s);
    CHECK(normalize_h(p, q, h) == h);
    CHECK(h + vertical_length(p, q, h) <= p);
  }
}

TEST_CASE("property: q = p-1 forces v = h") {
  for (int p = 3; p <= 61; p += 2) {
    for (int s = 1; s < p; ++s) {
      auto spec = GridOneSpec::from_separation(p, p - 1, s);
      CHECK(spec.v() == spec.h());
      if (spec.primitive()) CHECK(build_diagram(spec).grading_modulus() == 0);
    }
  }
}

TEST_CASE("property: crossing counts and region counts") {
  for (const auto& s : sample_specs(rng(), 200, 101, true)) {
    CHECK(static_cast<int>(crossing_set(s).size()) == s.h() + s.v() - 1);
    CHECK(static_cast<int>(build_diagram(s).regions().size()) == s.h() + s.v() + 1);
  }
  for (const auto& s : sample_specs(rng(), 200, 80, false)) {
    auto d = build_diagram(s, Labeling::CrossingsOnly);
    CHECK(d.region_count() - static_cast<int>(crossing_set(s).size()) == 2);
    for (int j = 1; j <= s.crossing_count(); ++j) {
      CHECK(chord_steps(s, j) >= 1);
      CHECK(static_cast<long>(s.k()) * chord_steps(s, j) <= s.p());
      CHECK(chord_length(s, j, ChordKind::A) + chord_length(s, j, ChordKind::B) == 1);
    }
  }
}

TEST_CASE("property: defects and areas") {
  for (const auto& s : sample_specs(rng(), 150, 101, true)) {
    auto d = build_diagram(s);
    ExactFraction area = 0;
    for (const auto& r : d.regions()) {
      area += r.area;
      if (r.pole == Pole::None) {
        CHECK(r.defect.denominator() == 1);
      } else {
        CHECK(r.corners.size() == 1);
        CHECK((r.defect * s.p()).denominator() == 1);
      }
    }
    CHECK(area == ExactFraction(1, s.p()));
  }
}

TEST_CASE("property: grading relations") {
  for (const auto& s : sample_specs(rng(), 100, 101, true)) {
    auto d = build_diagram(s);
    const int modulus = d.grading_modulus();
    CHECK(modulus == 2 * std::abs(s.h() - s.v()));
    for (const auto& c : d.crossings()) {
      const auto raw = raw_a_grading(d, c.index);
      CHECK(raw.denominator() == 1);
      CHECK(raw.numerator() % 2 != 0);
      if (modulus > 0) {
        CHECK(reduce_mod(*c.a.grading + *c.b.grading, modulus) == reduce_mod(ExactFraction(3), modulus));
      } else {
        CHECK(*c.a.grading + *c.b.grading == 3);
      }
    }
  }
}

TEST_CASE("property: constant terms sit on single-chord loops") {
  for (const auto& s : sample_specs(rng(), 40, 31, true)) {
    const int m = s.h() + s.v();
    if (s.p() % m == 0) continue;
    LiftedDiagram lifted(s);
    for (int j = 1; j < m; ++j) {
      const auto n_const = loop_word_counts(lifted, LoopKind::N, j).count({});
      const auto s_const = loop_word_counts(lifted, LoopKind::S, j).count({});
      CHECK(n_const == (j == s.p() % m ? 1U : 0U));
      CHECK(s_const == (j == m - s.p() % m ? 1U : 0U));
    }
  }
}

TEST_CASE("property: depth-first search matches word counts") {
  for (const auto& s : sample_specs(rng(), 30, 19, true)) {
    LiftedDiagram lifted(s);
    for (int j = 1; j < lifted.period(); ++j) {
      for (LoopKind side : {LoopKind::N, LoopKind::S}) {
        std::map<std::vector<int>, std::uint64_t> from_search;
        for (const auto& loop : enumerate_loops(lifted, side, j)) {
          std::vector<int> w;
          for (const auto& y : loop.boundary_word()) w.push_back(y.crossing);
          ++from_search[w];
        }
        CHECK(from_search == loop_word_counts(lifted, side, j));
      }
    }
  }
}

TEST_CASE("property: switching chords alternate strands") {
  // every loop word in the h = 2 family reads b2^n after the fixed chord
  for (int p = 5; p <= 21; p += 2) {
    auto spec = GridOneSpec::from_separation(p, p - 1, 2);
    LiftedDiagram lifted(spec);
    for (LoopKind side : {LoopKind::N, LoopKind::S}) {
      for (const auto& loop : enumerate_loops(lifted, side, north_chord(spec))) {
        for (const auto& y : loop.boundary_word()) CHECK(y == b_gen(2));
      }
    }
  }
}

TEST_CASE("property: recursion equals oracle") {
  for (int k = 0; k <= 12; ++k) {
    CHECK(count_S(k).count == count_subseq_bruteforce(k, LengthParity::Odd));
    CHECK(count_N(k).count == count_subseq_bruteforce(k, LengthParity::Even));
  }
}

TEST_CASE("property: parity periodicity") {
  for (int k = 3; k <= 30; ++k) {
    CHECK(count_S(k).parity == count_S(k - 3).parity);
    CHECK(count_N(k).parity == count_N(k - 3).parity);
  }
  for (int k = 0; k <= 30; ++k) {
    CHECK((count_S(k).parity == 1) == (k % 3 != 2));
    CHECK((count_N(k).parity == 1) == (k % 3 != 1));
  }
}

TEST_CASE("property: N2 and S2 loops correspond under b1 <-> b3") {
  for (int p = 5; p <= 31; p += 2) {
    LiftedDiagram lifted(GridOneSpec::from_separation(p, p - 1, 2));
    auto n2 = loop_word_counts(lifted, LoopKind::N, 2);
    auto s2 = loop_word_counts(lifted, LoopKind::S, 2);
    CHECK(total(n2) == total(s2));
    WordCounts swapped;
    for (const auto& [w, c] : n2) {
      std::vector<int> x;
      for (int j : w) x.push_back(j == 1 ? 3 : j == 3 ? 1 : j);
      swapped[x] += c;
    }
    CHECK(swapped == s2);
  }
}

TEST_CASE("invariant suite passes") {
  for (const auto& r : run_invariant_suite()) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }
}
