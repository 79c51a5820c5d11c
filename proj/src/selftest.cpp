#include "lensdga/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lensdga/dga.hpp"
#include "lensdga/lagrangian.hpp"
#include "lensdga/loops.hpp"

namespace lensdga {

std::vector<GridOneSpec> sample_specs(std::mt19937_64& rng, std::size_t count, int p_max, bool k1_primitive) {
  if (p_max < 3) throw std::invalid_argument("p_max must be at least 3");
  std::vector<GridOneSpec> out;
  std::uniform_int_distribution<int> pick_p(3, p_max);
  while (out.size() < count) {
    const int p = pick_p(rng);
    const int q = std::uniform_int_distribution<int>(2, p - 1)(rng);
    const int s = std::uniform_int_distribution<int>(1, p - 1)(rng);
    if (std::gcd(p, q) != 1) continue;
    auto spec = GridOneSpec::from_separation(p, q, s);
    if (k1_primitive && (spec.k() != 1 || !spec.primitive())) continue;
    out.push_back(spec);
  }
  return out;
}

namespace {

std::string name_of(const GridOneSpec& s) {
  return "K(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + "," + std::to_string(s.h()) + ")";
}

CheckResult check(std::string name, auto&& body) {
  CheckResult r{std::move(name), true, ""};
  try {
    std::string failure = body();
    if (!failure.empty()) {
      r.pass = false;
      r.detail = failure;
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto k1 = sample_specs(rng, 150, 101, true);
  const auto any = sample_specs(rng, 150, 60, false);
  std::vector<CheckResult> out;

  out.push_back(check("lens arithmetic", [&]() -> std::string {
    for (const auto& s : any) {
      if ((s.h() + static_cast<std::int64_t>(s.v()) * s.q()) % s.p() != 0) return name_of(s) + ": h + vq not 0 mod p";
      if (s.h() + s.v() > s.p()) return name_of(s) + ": h + v > p";
      if (normalize_h(s.p(), s.q(), s.h()) != s.h()) return name_of(s) + ": normalize_h not idempotent";
      if (s.q() == s.p() - 1 && s.h() != s.v()) return name_of(s) + ": q = p-1 but h != v";
      for (int j = 1; j <= s.crossing_count(); ++j) {
        const int x = chord_steps(s, j);
        if (x < 1 || static_cast<std::int64_t>(s.k()) * x > s.p()) return name_of(s) + ": chord steps out of range";
        if (chord_length(s, j, ChordKind::A) + chord_length(s, j, ChordKind::B) != 1) return name_of(s) + ": l(a)+l(b) != 1";
      }
    }
    return "";
  }));

  out.push_back(check("crossing and region counts", [&]() -> std::string {
    for (const auto& s : k1) {
      if (static_cast<int>(crossing_set(s).size()) != s.h() + s.v() - 1) return name_of(s) + ": crossings != h+v-1";
      if (static_cast<int>(build_diagram(s).regions().size()) != s.h() + s.v() + 1) return name_of(s) + ": regions != h+v+1";
    }
    for (const auto& s : any) {
      const auto d = build_diagram(s, Labeling::CrossingsOnly);
      if (d.region_count() - static_cast<int>(crossing_set(s).size()) != 2) return name_of(s) + ": regions - crossings != 2";
    }
    return "";
  }));

  out.push_back(check("areas and defects", [&]() -> std::string {
    for (const auto& s : k1) {
      const auto d = build_diagram(s);
      ExactFraction area = 0;
      for (const auto& r : d.regions()) {
        area += r.area;
        if (r.pole == Pole::None && r.defect.denominator() != 1) return name_of(s) + ": non-integral defect";
        if (r.pole != Pole::None && (r.defect * s.p()).denominator() != 1) return name_of(s) + ": polar defect not in Z/p";
        if (r.pole != Pole::None && r.corners.size() != 1) return name_of(s) + ": polar region corner count";
        if (r.corners.size() > 4) return name_of(s) + ": region with more than four corners";
      }
      if (area != ExactFraction(1, s.p())) return name_of(s) + ": total area != 1/p";
    }
    return "";
  }));

  out.push_back(check("gradings", [&]() -> std::string {
    for (const auto& s : k1) {
      const auto d = build_diagram(s);
      const int modulus = d.grading_modulus();
      if (modulus != 2 * std::abs(s.h() - s.v())) return name_of(s) + ": modulus";
      const auto first = raw_a_grading(d, 1);
      for (const auto& c : d.crossings()) {
        const auto raw = raw_a_grading(d, c.index);
        if (raw + (ExactFraction(3) - raw) != 3) return name_of(s) + ": |a|+|b| != 3";
        if (modulus > 0 && reduce_mod(*c.a.grading + *c.b.grading, modulus) != reduce_mod(ExactFraction(3), modulus)) {
          return name_of(s) + ": reduced |a|+|b| != 3";
        }
        const auto diff = raw - first;
        if (diff.denominator() != 1 || diff.numerator() % 2 != 0) return name_of(s) + ": gradings differ by a non-even amount";
        if (modulus > 0 && reduce_mod(raw, modulus) == 0) return name_of(s) + ": a-grading vanishes mod modulus";
        if (modulus == 0 && raw == 0) return name_of(s) + ": a-grading is zero";
      }
    }
    return "";
  }));

  out.push_back(check("capping constants", [&]() -> std::string {
    for (const auto& s : k1) {
      const auto d = build_diagram(s);
      std::vector<std::pair<int, Pole>> counted;
      for (const auto& path : capping_paths(d)) {
        if (path.contributes_constant) counted.emplace_back(path.crossing, path.side);
      }
      const int m = s.h() + s.v();
      if (s.p() % m == 0) continue;
      std::vector<std::pair<int, Pole>> expected{{s.p() % m, Pole::North}, {m - s.p() % m, Pole::South}};
      std::sort(counted.begin(), counted.end());
      std::sort(expected.begin(), expected.end());
      if (counted != expected) return name_of(s) + ": constant-term capping paths";
    }
    return "";
  }));

  out.push_back(check("recursion vs oracle (k <= 12)", [&]() -> std::string {
    for (int k = 0; k <= 12; ++k) {
      if (count_S(k).count != count_subseq_bruteforce(k, LengthParity::Odd)) return "S(" + std::to_string(k) + ")";
      if (count_N(k).count != count_subseq_bruteforce(k, LengthParity::Even)) return "N(" + std::to_string(k) + ")";
    }
    return "";
  }));

  out.push_back(check("parity laws (k <= 30)", [&]() -> std::string {
    for (int k = 0; k <= 30; ++k) {
      const int s = count_S(k).parity;
      const int n = count_N(k).parity;
      if (k >= 3 && (s != count_S(k - 3).parity || n != count_N(k - 3).parity)) return "period 3 at k=" + std::to_string(k);
      if ((s == 1) != (k % 3 != 2)) return "S parity at k=" + std::to_string(k);
      if ((n == 1) != (k % 3 != 1)) return "N parity at k=" + std::to_string(k);
    }
    return "";
  }));

  out.push_back(check("lifted diagrams", [&]() -> std::string {
    for (std::size_t i = 0; i < 40 && i < k1.size(); ++i) {
      const LiftedDiagram lifted(k1[i]);
      if (lifted.components() != 1 || !lifted.deck_invariant()) return name_of(k1[i]) + ": lift";
      for (int j = 1; j < lifted.period(); ++j) {
        if (lifted.lifted_chord_length(j, ChordKind::A) != chord_length(k1[i], j, ChordKind::A)) return name_of(k1[i]) + ": lifted length";
      }
    }
    return "";
  }));

  out.push_back(check("loop search vs word counts", [&]() -> std::string {
    for (const auto& s : k1) {
      if (s.p() > 23) continue;
      const LiftedDiagram lifted(s);
      for (int j = 1; j < lifted.period(); ++j) {
        for (LoopKind side : {LoopKind::N, LoopKind::S}) {
          if (enumerate_loops(lifted, side, j).size() != total(loop_word_counts(lifted, side, j))) {
            return name_of(s) + ": b" + std::to_string(j) + " " + to_string(side);
          }
        }
      }
    }
    return "";
  }));

  out.push_back(check("loop counts vs recursions (p <= 31)", [&]() -> std::string {
    for (int p = 3; p <= 31; p += 2) {
      const auto report = theorem2_verify(p);
      if (report.s_loops != count_S(report.s_bound.k).count) return "S at p=" + std::to_string(p);
      if (report.n_loops != count_N(report.n_bound.k).count) return "N at p=" + std::to_string(p);
    }
    return "";
  }));

  out.push_back(check("h=2 a_N, a_S words and a2 parity (p <= 31)", [&]() -> std::string {
    for (int p = 5; p <= 31; p += 2) {
      const auto spec = GridOneSpec::from_separation(p, p - 1, 2);
      const auto fragment = assemble_fragment(spec);
      const int north = north_chord(spec);
      const int south = south_chord(spec);
      for (int g : {north, south}) {
        for (const auto& [word, c] : fragment.of(a_gen(g))) {
          for (const auto& y : word) {
            if (y.crossing != 2) return "p=" + std::to_string(p) + ": a" + std::to_string(g) + " word " + to_string(word);
          }
        }
      }
      for (const auto& cand : augmentation_search(fragment, SearchMode::Unrestricted).candidates) {
        if (cand.eps.value(b_gen(north)) != cand.eps.value(b_gen(south))) continue;
        if (cand.special_counts.at(a_gen(2)) % 2 != 0) return "p=" + std::to_string(p) + ": odd count at a2";
      }
      const LiftedDiagram lifted(spec);
      if (total(loop_word_counts(lifted, LoopKind::N, 2)) != total(loop_word_counts(lifted, LoopKind::S, 2))) {
        return "p=" + std::to_string(p) + ": |N2| != |S2|";
      }
    }
    return "";
  }));

  out.push_back(check("K(p,p-1,1) algebra (odd p in [3,59])", [&]() -> std::string {
    for (int p = 3; p <= 59; p += 2) {
      if (!theorem1_check(p).pass) return "p=" + std::to_string(p);
    }
    return "";
  }));

  out.push_back(check("K(p,p-1,2) augmentation classes (odd p in [3,99])", [&]() -> std::string {
    for (int p = 3; p <= 99; p += 2) {
      const auto r = theorem2_verify(p);
      if (!r.agree()) return "p=" + std::to_string(p);
      const auto full = augmentation_search(assemble_fragment(r.spec), SearchMode::Unrestricted);
      if (full.exists() != r.exists) return "restricted and unrestricted searches differ at p=" + std::to_string(p);
    }
    return "";
  }));

  return out;
}

}  // namespace lensdga
