// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lensdga/dga.hpp"
#include "lensdga/lagrangian.hpp"
#include "lensdga/loops.hpp"
#include "lensdga/selftest.hpp"

using namespace lensdga;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string knot(const GridOneSpec& s) {
  return "K(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + "," + std::to_string(s.h()) + ")";
}

Outcome crossing_counts() {
  Outcome o;
  std::mt19937_64 rng(1);
  const auto specs = sample_specs(rng, 200, 101, true);
  for (const auto& s : specs) {
    if (static_cast<int>(crossing_set(s).size()) != s.h() + s.v() - 1) o.fail(knot(s));
  }
  if (o.pass) o.detail = "200 random primitive k=1 specs, p <= 101";
  return o;
}

Outcome golden_k523() {
  Outcome o;
  const auto d = build_diagram(GridOneSpec::from_separation(5, 2, 3));
  if (d.crossings().size() != 3) o.fail("crossing count");
  if (d.regions().size() != 5) o.fail("region count");
  if (d.crossing(1).a.length != ExactFraction(1, 5)) o.fail("l(a1) = " + to_string(d.crossing(1).a.length));
  if (d.crossing(1).b.length != ExactFraction(4, 5)) o.fail("l(b1) = " + to_string(d.crossing(1).b.length));
  if (o.pass) o.detail = "3 crossings, 5 regions, l(a1)=1/5, l(b1)=4/5";
  return o;
}

Outcome recursion_vs_oracle() {
  Outcome o;
  for (int k = 0; k <= 12; ++k) {
    if (count_S(k).count != count_subseq_bruteforce(k, LengthParity::Odd)) o.fail("S(" + std::to_string(k) + ")");
    if (count_N(k).count != count_subseq_bruteforce(k, LengthParity::Even)) o.fail("N(" + std::to_string(k) + ")");
  }
  if (count_S(0).count != 1 || count_S(1).count != 3 || count_S(2).count != 8) o.fail("S(0..2) != 1,3,8");
  if (count_N(0).count != 1 || count_N(1).count != 2) o.fail("N(0..1) != 1,2");
  if (o.pass) o.detail = "k <= 12; S(0..2)=1,3,8; N(0..1)=1,2";
  return o;
}

Outcome parity_laws() {
  Outcome o;
  for (int k = 0; k <= 30; ++k) {
    const int s = count_S(k).parity;
    const int n = count_N(k).parity;
    if (k >= 3 && s != count_S(k - 3).parity) o.fail("S period at k=" + std::to_string(k));
    if (k >= 3 && n != count_N(k - 3).parity) o.fail("N period at k=" + std::to_string(k));
    if ((s == 1) != (k % 3 != 2)) o.fail("S odd rule at k=" + std::to_string(k));
    if ((n == 1) != (k % 3 != 1)) o.fail("N odd rule at k=" + std::to_string(k));
  }
  if (o.pass) o.detail = "k <= 30";
  return o;
}

Outcome geometric_loops() {
  Outcome o;
  for (int p = 3; p <= 31; p += 2) {
    const auto spec = GridOneSpec::from_separation(p, p - 1, 2);
    const LiftedDiagram lifted(spec);
    const int base = north_chord(spec);
    const auto s = enumerate_loops(lifted, LoopKind::S, base).size();
    const auto n = enumerate_loops(lifted, LoopKind::N, base).size();
    const auto ks = max_switch_chords(p, LoopKind::S).k;
    const auto kn = max_switch_chords(p, LoopKind::N).k;
    if (s != count_S(ks).count) o.fail("S at p=" + std::to_string(p));
    if (n != count_N(kn).count) o.fail("N at p=" + std::to_string(p));
    if (p == 7 && (s != 3 || n != 2)) o.fail("K(7,6,2) gives S=" + std::to_string(s) + " N=" + std::to_string(n));
  }
  if (o.pass) o.detail = "odd p <= 31, K(7,6,2): S=3, N=2";
  return o;
}

Outcome theorem_two_generators() {
  Outcome o;
  for (int p = 3; p <= 59; p += 2) {
    const auto r = theorem1_check(p);
    if (r.da_terms != 0 || r.db_terms != 0) o.fail("nonzero differential at p=" + std::to_string(p));
    if (!r.pass) o.fail("augmentations at p=" + std::to_string(p));
  }
  if (o.pass) o.detail = "odd p in [3,59]: da=db=0, eps(b)=0 and eps(b)=1 augment";
  return o;
}

Outcome theorem_mod12() {
  Outcome o;
  int disagreements = 0;
  int rows = 0;
  for (int p = 3; p <= 99; p += 2) {
    const auto r = theorem2_verify(p);
    ++rows;
    if (!r.agree()) {
      ++disagreements;
      o.fail("p=" + std::to_string(p));
    }
  }
  if (o.pass) o.detail = std::to_string(rows) + " odd p in [3,99], " + std::to_string(disagreements) + " disagreements";
  return o;
}

Outcome a2_parity() {
  Outcome o;
  int checked = 0;
  for (int p = 5; p <= 31; p += 2) {
    const auto spec = GridOneSpec::from_separation(p, p - 1, 2);
    const auto fragment = assemble_fragment(spec);
    const int north = north_chord(spec);
    const int south = south_chord(spec);
    for (const auto& cand : augmentation_search(fragment, SearchMode::Unrestricted).candidates) {
      if (cand.eps.value(b_gen(north)) != cand.eps.value(b_gen(south))) continue;
      ++checked;
      if (fuchs_special_count(fragment, cand.eps, a_gen(2)) % 2 != 0) o.fail("p=" + std::to_string(p) + " " + cand.eps.to_string());
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " assignments, p in [5,31]";
  return o;
}

Outcome polar_words() {
  Outcome o;
  for (int p = 5; p <= 31; p += 2) {
    const auto spec = GridOneSpec::from_separation(p, p - 1, 2);
    const auto fragment = assemble_fragment(spec);
    const int north = north_chord(spec);
    const int south = south_chord(spec);
    for (int g : {north, south}) {
      for (const auto& [word, count] : fragment.of(a_gen(g))) {
        for (const auto& y : word) {
          if (y.crossing == north || y.crossing == south) o.fail("p=" + std::to_string(p) + " a" + std::to_string(g) + ": " + to_string(word));
        }
      }
    }
  }
  if (o.pass) o.detail = "p in [5,31]: words of a_N, a_S avoid b_N, b_S";
  return o;
}

Outcome grading_properties() {
  Outcome o;
  std::mt19937_64 rng(10);
  const auto specs = sample_specs(rng, 100, 101, true);
  int sum_ok = 0;
  int modulus_ok = 0;
  int frac_ok = 0;
  int generators = 0;
  std::string first_frac_failure;
  for (const auto& s : specs) {
    const auto d = build_diagram(s);
    if (d.grading_modulus() == 2 * std::abs(s.h() - s.v()) && (s.q() != s.p() - 1 || d.grading_modulus() == 0)) ++modulus_ok;
    const auto expected = fractional_part(ExactFraction(4 * s.v(), s.p()));
    for (const auto& c : d.crossings()) {
      ++generators;
      const auto a = raw_a_grading(d, c.index);
      const auto b = ExactFraction(3) - a;
      const int modulus = d.grading_modulus();
      const bool sum = modulus > 0 ? reduce_mod(*c.a.grading + *c.b.grading, modulus) == reduce_mod(ExactFraction(3), modulus)
                                   : *c.a.grading + *c.b.grading == 3;
      if (sum && a + b == 3) ++sum_ok;
      const auto frac = fractional_part(a);
      if (frac == expected && frac != 0) {
        ++frac_ok;
      } else if (first_frac_failure.empty()) {
        first_frac_failure = knot(s) + " a" + std::to_string(c.index) + ": |a|=" + to_string(a) + ", frac " +
                             to_string(frac) + " vs 4v/p frac " + to_string(expected);
      }
    }
  }
  std::ostringstream detail;
  detail << "|a|+|b|=3 on " << sum_ok << "/" << generators << "; modulus 2|h-v| on " << modulus_ok << "/" << specs.size()
         << "; frac(|a|)=frac(4v/p)!=0 on " << frac_ok << "/" << generators;
  if (!first_frac_failure.empty()) detail << " (first: " << first_frac_failure << ")";
  o.detail = detail.str();
  o.pass = sum_ok == generators && modulus_ok == static_cast<int>(specs.size()) && frac_ok == generators;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "crossing counts", 1.0, crossing_counts},
      {2, "K(5,2,3) golden values", 0.0, golden_k523},
      {3, "recursion vs oracle", 10.0, recursion_vs_oracle},
      {4, "parity laws", 0.0, parity_laws},
      {5, "geometric loops vs recursions", 0.0, geometric_loops},
      {6, "K(p,p-1,1) differential and augmentations", 0.0, theorem_two_generators},
      {7, "K(p,p-1,2) augmentation iff p = 3, 9 mod 12", 30.0, theorem_mod12},
      {8, "even special count at a2", 0.0, a2_parity},
      {9, "a_N, a_S words avoid b_N, b_S", 0.0, polar_words},
      {10, "grading properties", 0.0, grading_properties},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    }
    if (!o.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " [" << timing << "]  "
              << o.detail << "\n";
  }
  std::cout << (10 - failures) << "/10 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
