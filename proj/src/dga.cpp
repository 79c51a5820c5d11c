#include "lensdga/dga.hpp"

#include <stdexcept>

namespace lensdga {

std::string to_string(const Word& word) {
  if (word.empty()) return "1";
  std::string s;
  for (const auto& g : word) s += g.symbol();
  return s;
}

DifferentialFragment DifferentialFragment::reduced() const {
  DifferentialFragment out{spec, {}};
  for (const auto& [gen, words] : terms) {
    auto& dst = out.terms[gen];
    for (const auto& [word, count] : words) {
      if (count % 2 == 1) dst[word] = 1;
    }
  }
  return out;
}

const std::map<Word, std::uint64_t>& DifferentialFragment::of(const GeneratorRef& gen) const {
  auto it = terms.find(gen);
  if (it == terms.end()) throw std::out_of_range("generator " + gen.symbol() + " is not in the fragment");
  return it->second;
}

bool in_verified_scope(const GridOneSpec& spec) {
  return spec.q() == spec.p() - 1 && (spec.h() == 1 || spec.h() == 2);
}

int north_chord(const GridOneSpec& spec) {
  const int m = spec.h() + spec.v();
  const int j = spec.p() % m;
  if (j == 0) throw ScopeError("h+v divides p: no capping path bounds a counted disc");
  return j;
}

int south_chord(const GridOneSpec& spec) { return spec.h() + spec.v() - north_chord(spec); }

DifferentialFragment assemble_fragment(const GridOneSpec& spec, bool force) {
  if (!in_verified_scope(spec) && !force) {
    throw ScopeError("K(" + std::to_string(spec.p()) + "," + std::to_string(spec.q()) + "," +
                     std::to_string(spec.h()) + ") is outside the verified families q = p-1, h in {1,2}");
  }
  const auto diagram = build_diagram(spec);
  const LiftedDiagram lifted(spec);
  DifferentialFragment fragment{spec, {}};

  for (const auto& c : diagram.crossings()) {
    auto& words = fragment.terms[c.a.ref];
    for (LoopKind side : {LoopKind::N, LoopKind::S}) {
      for (const auto& [suffix, count] : loop_word_counts(lifted, side, c.index)) {
        Word w;
        for (int j : suffix) w.push_back(b_gen(j));
        words[w] = checked_add(words[w], count);
      }
    }
    fragment.terms[c.b.ref];
  }

  for (const auto& region : diagram.regions()) {
    if (region.pole != Pole::None) continue;
    const auto& corners = region.corners;
    const RegionWeight disc[] = {{region.id, 1}};
    for (std::size_t i = 0; i < corners.size(); ++i) {
      const auto positive = corners[i].positive_label();
      if (positive.preferred()) continue;
      Word negatives;
      for (std::size_t step = 1; step < corners.size(); ++step) {
        negatives.push_back(corners[(i + step) % corners.size()].negative_label());
      }
      if (x_defect(diagram, disc, positive, negatives) != 0) continue;
      auto& words = fragment.terms[positive];
      words[negatives] = checked_add(words[negatives], 1);
    }
  }
  return fragment;
}

int Assignment::value(const GeneratorRef& gen) const {
  if (gen.kind == ChordKind::A) return 0;
  if (gen.crossing < 1 || gen.crossing > static_cast<int>(b.size())) {
    throw std::out_of_range("assignment has no value for " + gen.symbol());
  }
  return b[static_cast<std::size_t>(gen.crossing - 1)];
}

std::string Assignment::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0) s += ",";
    s += "b" + std::to_string(i + 1) + "=" + std::to_string(b[i]);
  }
  return s;
}

std::uint64_t fuchs_special_count(const DifferentialFragment& fragment, const Assignment& eps,
                                  const GeneratorRef& gen) {
  std::uint64_t count = 0;
  for (const auto& [word, mult] : fragment.of(gen)) {
    bool special = true;
    for (const auto& y : word) {
      if (eps.value(y) != 1) {
        special = false;
        break;
      }
    }
    if (special) count = checked_add(count, mult);
  }
  return count;
}

SearchResult augmentation_search(const DifferentialFragment& fragment, SearchMode mode) {
  const auto& spec = fragment.spec;
  const int n = spec.crossing_count();
  if (n > 24) throw ScopeError("too many b-generators for an exhaustive search");
  const bool restrict = mode == SearchMode::Restricted && spec.q() == spec.p() - 1 && spec.h() == 2;
  const int north = restrict ? north_chord(spec) : 0;
  const int south = restrict ? south_chord(spec) : 0;

  SearchResult result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Assignment eps;
    eps.b.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eps.b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1U);
    if (restrict && eps.b[static_cast<std::size_t>(north - 1)] != eps.b[static_cast<std::size_t>(south - 1)]) continue;

    Candidate cand{eps, {}, true};
    for (const auto& [gen, words] : fragment.terms) {
      const auto count = fuchs_special_count(fragment, eps, gen);
      cand.special_counts[gen] = count;
      if (count % 2 != 0) cand.augmentation = false;
    }
    if (cand.augmentation) result.augmentations.push_back(eps);
    result.candidates.push_back(std::move(cand));
  }
  return result;
}

namespace {

void require_odd(int p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be odd and at least 3 (gcd(p-2,p) = 1)");
}

}  // namespace

Theorem1Report theorem1_check(int p) {
  require_odd(p);
  const auto spec = GridOneSpec::from_separation(p, p - 1, 1);
  const auto fragment = assemble_fragment(spec);
  const auto reduced = fragment.reduced();
  Theorem1Report report(p, spec);
  report.da_raw = fragment.of(a_gen(1));
  report.db_raw = fragment.of(b_gen(1));
  report.da_terms = reduced.of(a_gen(1)).size();
  report.db_terms = reduced.of(b_gen(1)).size();
  report.search = augmentation_search(fragment, SearchMode::Unrestricted);
  const std::vector<Assignment> both{{{0}}, {{1}}};
  report.pass = spec.crossing_count() == 1 && report.da_terms == 0 && report.db_terms == 0 &&
                report.search.augmentations == both;
  return report;
}

bool theorem2_predicate(int p) {
  require_odd(p);
  return p % 12 == 3 || p % 12 == 9;
}

Theorem2Report theorem2_verify(int p) {
  const bool predicate = theorem2_predicate(p);
  const auto spec = GridOneSpec::from_separation(p, p - 1, 2);
  Theorem2Report report(p, spec);
  report.predicate = predicate;
  report.north = north_chord(spec);
  report.south = south_chord(spec);
  report.s_bound = max_switch_chords(p, LoopKind::S);
  report.n_bound = max_switch_chords(p, LoopKind::N);
  const LiftedDiagram lifted(spec);
  report.s_loops = total(loop_word_counts(lifted, LoopKind::S, report.north));
  report.n_loops = total(loop_word_counts(lifted, LoopKind::N, report.north));
  report.search = augmentation_search(assemble_fragment(spec), SearchMode::Restricted);
  report.exists = report.search.exists();
  return report;
}

}  // namespace lensdga
