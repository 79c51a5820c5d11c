#include "lensdga/report.hpp"

namespace lensdga {

namespace {

Json fraction(const ExactFraction& x) { return to_string(x); }

}  // namespace

Json spec_json(const GridOneSpec& spec) {
  Json j;
  j["p"] = spec.p();
  j["q"] = spec.q();
  j["h"] = spec.h();
  j["v"] = spec.v();
  j["k"] = spec.k();
  j["requested_h"] = spec.requested_separation();
  j["primitive"] = spec.primitive();
  j["crossing_count"] = spec.crossing_count();
  return j;
}

Json diagram_json(const LabeledDiagram& diagram) {
  Json j;
  j["spec"] = spec_json(diagram.spec());
  j["labeling"] = diagram.fully_labeled() ? "full" : "crossings-only";
  j["grading_modulus"] = diagram.grading_modulus();
  j["region_count"] = diagram.region_count();
  Json crossings = Json::array();
  for (const auto& c : diagram.crossings()) {
    Json cj;
    cj["index"] = c.index;
    cj["box"] = c.box;
    for (const auto* g : {&c.a, &c.b}) {
      Json gj;
      gj["length"] = fraction(g->length);
      gj["preferred"] = g->ref.preferred();
      if (g->grading) gj["grading"] = fraction(*g->grading);
      cj[g->ref.symbol()] = gj;
    }
    crossings.push_back(cj);
  }
  j["crossings"] = crossings;
  Json regions = Json::array();
  for (const auto& r : diagram.regions()) {
    Json rj;
    rj["id"] = r.id;
    rj["pole"] = to_string(r.pole);
    Json corners = Json::array();
    for (const auto& c : r.corners) {
      corners.push_back(Json{{"crossing", c.crossing}, {"quadrant", to_string(c.quadrant)}, {"sign", c.sign()}});
    }
    rj["corners"] = corners;
    rj["area"] = fraction(r.area);
    rj["defect"] = fraction(r.defect);
    regions.push_back(rj);
  }
  j["regions"] = regions;
  return j;
}

Json capping_json(const CappingPath& path) {
  Json j;
  j["generator"] = a_gen(path.crossing).symbol();
  j["side"] = to_string(path.side);
  j["rotations"] = path.rotations;
  j["rotation_number"] = fraction(path.rotation_number);
  j["pole_winding"] = path.pole_winding;
  j["disc_defect"] = fraction(path.disc_defect);
  j["admissible"] = path.admissible;
  j["contributes_constant"] = path.contributes_constant;
  return j;
}

Json loop_json(const LoopPath& loop) {
  Json j;
  j["kind"] = to_string(loop.kind);
  j["generator"] = loop.generator;
  Json chords = Json::array();
  for (const auto& c : loop.chords) chords.push_back(Json{{"crossing", c.crossing}, {"upper", c.upper}, {"lower", c.lower}});
  j["chords"] = chords;
  Json segments = Json::array();
  for (const auto& s : loop.segments) segments.push_back(Json::array({s.from, s.to}));
  j["segments"] = segments;
  j["word"] = to_string(loop.boundary_word());
  return j;
}

Json word_counts_json(const WordCounts& counts) {
  Json j = Json::array();
  for (const auto& [word, count] : counts) {
    Word w;
    for (int c : word) w.push_back(b_gen(c));
    j.push_back(Json{{"word", to_string(w)}, {"count", count}});
  }
  return j;
}

Json loop_count_json(const LoopCount& count) {
  return Json{{"k", count.k}, {"count", count.count}, {"parity", count.parity}};
}

Json fragment_json(const DifferentialFragment& fragment) {
  Json j;
  j["spec"] = spec_json(fragment.spec);
  Json terms;
  for (const auto& [gen, words] : fragment.terms) {
    Json wj = Json::array();
    for (const auto& [word, count] : words) wj.push_back(Json{{"word", to_string(word)}, {"count", count}});
    terms[gen.symbol()] = wj;
  }
  j["terms"] = terms;
  return j;
}

Json search_json(const SearchResult& result) {
  Json j;
  Json candidates = Json::array();
  for (const auto& c : result.candidates) {
    Json counts;
    for (const auto& [gen, n] : c.special_counts) counts[gen.symbol()] = n;
    candidates.push_back(Json{{"eps", c.eps.to_string()}, {"special_counts", counts}, {"augmentation", c.augmentation}});
  }
  j["candidates"] = candidates;
  Json augs = Json::array();
  for (const auto& a : result.augmentations) augs.push_back(a.to_string());
  j["augmentations"] = augs;
  j["exists"] = result.exists();
  return j;
}

Json theorem1_json(const Theorem1Report& report) {
  Json j;
  j["p"] = report.p;
  j["spec"] = spec_json(report.spec);
  j["da_terms_reduced"] = report.da_terms;
  j["db_terms_reduced"] = report.db_terms;
  j["search"] = search_json(report.search);
  j["pass"] = report.pass;
  return j;
}

Json theorem2_json(const Theorem2Report& report) {
  Json j;
  j["p"] = report.p;
  j["p_mod_12"] = report.p % 12;
  j["spec"] = spec_json(report.spec);
  j["b_N"] = b_gen(report.north).symbol();
  j["b_S"] = b_gen(report.south).symbol();
  j["k_S"] = report.s_bound.k;
  j["k_N"] = report.n_bound.k;
  j["S_loops"] = report.s_loops;
  j["N_loops"] = report.n_loops;
  j["search"] = search_json(report.search);
  j["exists"] = report.exists;
  j["predicate"] = report.predicate;
  j["agree"] = report.agree();
  return j;
}

std::string scan_csv_header() { return "p,p_mod_12,k_S,k_N,S_parity,N_parity,exists,predicate,agree"; }

std::string scan_csv_row(const Theorem2Report& r) {
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  return std::to_string(r.p) + "," + std::to_string(r.p % 12) + "," + std::to_string(r.s_bound.k) + "," +
         std::to_string(r.n_bound.k) + "," + std::to_string(r.s_loops % 2) + "," + std::to_string(r.n_loops % 2) +
         "," + b(r.exists) + "," + b(r.predicate) + "," + b(r.agree());
}

}  // namespace lensdga
