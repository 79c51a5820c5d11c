#include "cli.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lensdga/dga.hpp"
#include "lensdga/lagrangian.hpp"
#include "lensdga/loops.hpp"
#include "lensdga/report.hpp"
#include "lensdga/selftest.hpp"

namespace lensdga::cli {

namespace {

struct Options {
  int p = 0;
  int q = 0;
  int h = 0;
  int p_min = 0;
  int p_max = 0;
  std::string format = "text";
  bool oracle = false;
  bool force = false;
  bool list = false;
  bool unrestricted = false;
  unsigned jobs = 0;
};

class DisagreementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string knot_name(const GridOneSpec& s) {
  return "K(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + "," + std::to_string(s.h()) + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string unsupported_reason(const GridOneSpec& s) {
  if (s.k() != 1) return "k=" + std::to_string(s.k()) + " > 1";
  if (!s.primitive()) return "not primitive";
  return "";
}

void print_header(const GridOneSpec& s, std::ostream& out) {
  out << knot_name(s) << " in L(" << s.p() << "," << s.q() << ")\n";
  out << "  h=" << s.h() << " v=" << s.v() << " k=" << s.k() << " primitive=" << yes_no(s.primitive())
      << " (requested h=" << s.requested_separation() << ")\n";
}

int analyze(const Options& o, std::ostream& out) {
  const auto spec = GridOneSpec::from_separation(o.p, o.q, o.h);
  const auto reason = unsupported_reason(spec);
  const auto diagram = build_diagram(spec, reason.empty() ? Labeling::Full : Labeling::CrossingsOnly);

  if (o.format == "json") {
    Json j;
    j["diagram"] = diagram_json(diagram);
    if (!reason.empty()) {
      j["labeling_unsupported"] = reason;
    } else {
      Json paths = Json::array();
      for (const auto& path : capping_paths(diagram)) paths.push_back(capping_json(path));
      j["capping_paths"] = paths;
      const auto disc = knot_disc(diagram);
      j["knot_disc"] = Json{{"rotation", disc.rotation}, {"area", to_string(disc.area)}, {"defect", to_string(disc.defect)}};
    }
    out << j.dump(2) << "\n";
    return Ok;
  }
  if (o.format == "csv") {
    out << "generator,crossing,box,length,grading\n";
    for (const auto& c : diagram.crossings()) {
      for (const auto* g : {&c.a, &c.b}) {
        out << g->ref.symbol() << "," << c.index << "," << c.box << "," << to_string(g->length) << ","
            << (g->grading ? to_string(*g->grading) : "") << "\n";
      }
    }
    return Ok;
  }

  print_header(spec, out);
  out << "  crossings: " << diagram.crossings().size() << "  regions: " << diagram.region_count() << "\n";
  if (!reason.empty()) {
    out << "  labeling: unsupported (" << reason << "), crossings only\n";
    out << "  crossing  box    l(a)    l(b)\n";
    for (const auto& c : diagram.crossings()) {
      out << "  " << std::setw(8) << c.index << std::setw(5) << c.box << std::setw(8) << to_string(c.a.length)
          << std::setw(8) << to_string(c.b.length) << "\n";
    }
    return Ok;
  }
  out << "  labeling: full  grading modulus: " << diagram.grading_modulus() << "\n";
  out << "  crossing  box    l(a)    l(b)     |a|     |b|\n";
  for (const auto& c : diagram.crossings()) {
    out << "  " << std::setw(8) << c.index << std::setw(5) << c.box << std::setw(8) << to_string(c.a.length)
        << std::setw(8) << to_string(c.b.length) << std::setw(8) << to_string(*c.a.grading) << std::setw(8)
        << to_string(*c.b.grading) << "\n";
  }
  out << "regions\n";
  for (const auto& r : diagram.regions()) {
    out << "  R" << r.id << " pole=" << to_string(r.pole) << " corners=";
    for (std::size_t i = 0; i < r.corners.size(); ++i) {
      out << (i ? "," : "") << to_string(r.corners[i].quadrant) << r.corners[i].crossing;
    }
    out << " area=" << to_string(r.area) << " defect=" << to_string(r.defect) << "\n";
  }
  out << "capping paths (least admissible)\n";
  for (const auto& path : capping_paths(diagram)) {
    out << "  a" << path.crossing << " " << to_string(path.side) << " turns=" << path.rotations
        << " defect=" << to_string(path.disc_defect) << (path.contributes_constant ? " constant term" : "") << "\n";
  }
  const auto disc = knot_disc(diagram);
  out << "knot disc: rotation=" << disc.rotation << " area=" << to_string(disc.area)
      << " defect=" << to_string(disc.defect) << "\n";
  return Ok;
}

int fixed_chord(const GridOneSpec& s) {
  const int m = s.h() + s.v();
  return s.p() % m == 0 ? 1 : s.p() % m;
}

int loops(const Options& o, std::ostream& out) {
  const auto spec = GridOneSpec::from_separation(o.p, o.q, o.h);
  if (spec.k() != 1) throw ScopeError("loop enumeration needs k = 1 (k = " + std::to_string(spec.k()) + ")");
  const LiftedDiagram lifted(spec);
  const int base = fixed_chord(spec);

  struct Row {
    int chord;
    std::uint64_t s;
    std::uint64_t n;
  };
  std::vector<Row> rows;
  for (int j = 1; j < lifted.period(); ++j) {
    rows.push_back({j, total(loop_word_counts(lifted, LoopKind::S, j)), total(loop_word_counts(lifted, LoopKind::N, j))});
  }
  const Row& fixed = rows[static_cast<std::size_t>(base - 1)];

  Json oracle;
  bool agree = true;
  if (o.oracle) {
    Json search = Json::array();
    for (const auto& r : rows) {
      const auto s = enumerate_loops(lifted, LoopKind::S, r.chord).size();
      const auto n = enumerate_loops(lifted, LoopKind::N, r.chord).size();
      const bool ok = s == r.s && n == r.n;
      agree = agree && ok;
      search.push_back(Json{{"base", b_gen(r.chord).symbol()}, {"S_search", s}, {"N_search", n}, {"agree", ok}});
    }
    oracle["explicit_search"] = search;
    if (spec.q() == spec.p() - 1 && spec.h() == 2 && spec.p() % 2 == 1) {
      const auto sb = max_switch_chords(spec.p(), LoopKind::S);
      const auto nb = max_switch_chords(spec.p(), LoopKind::N);
      const auto S = count_S(sb.k);
      const auto N = count_N(nb.k);
      Json rec{{"k_S", sb.k}, {"k_N", nb.k}, {"S_recursion", S.count}, {"N_recursion", N.count}};
      bool ok = S.count == fixed.s && N.count == fixed.n;
      if (sb.k <= 15) {
        const auto bs = count_subseq_bruteforce(sb.k, LengthParity::Odd);
        rec["S_bruteforce"] = bs;
        ok = ok && bs == S.count;
      }
      if (nb.k <= 15) {
        const auto bn = count_subseq_bruteforce(nb.k, LengthParity::Even);
        rec["N_bruteforce"] = bn;
        ok = ok && bn == N.count;
      }
      rec["agree"] = ok;
      agree = agree && ok;
      oracle["recursion"] = rec;
    }
    oracle["agree"] = agree;
  }

  if (o.format == "json") {
    Json j;
    j["spec"] = spec_json(spec);
    j["fixed_chord"] = b_gen(base).symbol();
    j["S"] = fixed.s;
    j["N"] = fixed.n;
    Json per = Json::array();
    for (const auto& r : rows) per.push_back(Json{{"base", b_gen(r.chord).symbol()}, {"S", r.s}, {"N", r.n}});
    j["per_chord"] = per;
    if (o.list) {
      Json listed = Json::array();
      for (LoopKind side : {LoopKind::S, LoopKind::N}) {
        for (const auto& loop : enumerate_loops(lifted, side, base)) listed.push_back(loop_json(loop));
      }
      j["loops"] = listed;
    }
    if (o.oracle) j["oracle"] = oracle;
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "base,S_loops,N_loops\n";
    for (const auto& r : rows) out << b_gen(r.chord).symbol() << "," << r.s << "," << r.n << "\n";
  } else {
    print_header(spec, out);
    out << "fixed chord " << b_gen(base).symbol() << ": S:" << fixed.s << ", N:" << fixed.n << "\n";
    out << "  base  S  N\n";
    for (const auto& r : rows) out << "  " << b_gen(r.chord).symbol() << "  " << r.s << "  " << r.n << "\n";
    if (o.list) {
      for (LoopKind side : {LoopKind::S, LoopKind::N}) {
        for (const auto& loop : enumerate_loops(lifted, side, base)) {
          out << "  " << to_string(side) << "-loop chords:";
          for (const auto& c : loop.chords) out << " b" << c.crossing;
          out << "  word: " << to_string(loop.boundary_word()) << "\n";
        }
      }
    }
    if (o.oracle) {
      if (oracle.contains("recursion")) {
        const auto& r = oracle["recursion"];
        out << "oracle: S=" << fixed.s << " S(" << r["k_S"].get<int>() << ")=" << r["S_recursion"].get<std::uint64_t>()
            << ", N=" << fixed.n << " N(" << r["k_N"].get<int>() << ")=" << r["N_recursion"].get<std::uint64_t>() << "\n";
      }
      out << "oracle: " << (agree ? "agree" : "DISAGREE") << "\n";
    }
  }
  if (!agree) throw DisagreementError("loop counts disagree with the oracle");
  return Ok;
}

int augment(const Options& o, std::ostream& out) {
  const auto spec = GridOneSpec::from_separation(o.p, o.q, o.h);
  const auto fragment = assemble_fragment(spec, o.force);
  const auto result = augmentation_search(fragment, o.unrestricted ? SearchMode::Unrestricted : SearchMode::Restricted);
  if (o.format == "json") {
    Json j;
    j["spec"] = spec_json(spec);
    j["verified_scope"] = in_verified_scope(spec);
    j["fragment"] = fragment_json(fragment.reduced());
    j["search"] = search_json(result);
    out << j.dump(2) << "\n";
    return Ok;
  }
  if (o.format == "csv") {
    out << "eps,augmentation\n";
    for (const auto& c : result.candidates) out << "\"" << c.eps.to_string() << "\"," << (c.augmentation ? "true" : "false") << "\n";
    return Ok;
  }
  print_header(spec, out);
  for (const auto& c : result.candidates) {
    out << "  " << c.eps.to_string() << "  special:";
    for (const auto& [gen, n] : c.special_counts) out << " " << gen.symbol() << "=" << n;
    out << (c.augmentation ? "  augmentation" : "") << "\n";
  }
  out << "augmentations: " << result.augmentations.size() << "\n";
  out << "exists=" << (result.exists() ? "true" : "false") << "\n";
  return Ok;
}

int scan(const Options& o, std::ostream& out) {
  if (o.p_min > o.p_max) throw std::invalid_argument("scan needs p_min <= p_max");
  std::vector<int> ps;
  for (int p = std::max(3, o.p_min); p <= o.p_max; ++p) {
    if (p % 2 == 1) ps.push_back(p);
  }
  unsigned jobs = o.jobs ? o.jobs : std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::optional<Theorem2Report>> reports(ps.size());
  for (std::size_t start = 0; start < ps.size(); start += jobs) {
    std::vector<std::future<Theorem2Report>> batch;
    for (std::size_t i = start; i < ps.size() && i < start + jobs; ++i) {
      batch.push_back(std::async(std::launch::async, theorem2_verify, ps[i]));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) reports[start + i] = batch[i].get();
  }

  bool all_agree = true;
  for (const auto& r : reports) all_agree = all_agree && r->agree();
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& r : reports) rows.push_back(theorem2_json(*r));
    out << Json{{"rows", rows}, {"all_agree", all_agree}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << scan_csv_header() << "\n";
    for (const auto& r : reports) out << scan_csv_row(*r) << "\n";
  } else {
    out << "   p  p%12  h  k_S  k_N        S_loops        N_loops  exists  predicate  agree\n";
    for (const auto& r : reports) {
      out << std::setw(4) << r->p << std::setw(6) << r->p % 12 << std::setw(3) << r->spec.h() << std::setw(5)
          << r->s_bound.k << std::setw(5) << r->n_bound.k << std::setw(15) << r->s_loops << std::setw(15) << r->n_loops
          << std::setw(8) << (r->exists ? "yes" : "no") << std::setw(11) << (r->predicate ? "yes" : "no")
          << std::setw(7) << (r->agree() ? "yes" : "NO") << "\n";
    }
    out << (all_agree ? "all rows agree" : "DISAGREEMENT") << "\n";
  }
  if (!all_agree) throw DisagreementError("augmentation search disagrees with the mod-12 predicate");
  return Ok;
}

int selftest(const Options& o, std::ostream& out) {
  const auto results = run_invariant_suite();
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& r : results) rows.push_back(Json{{"property", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << Json{{"results", rows}, {"all_pass", all}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "property,pass\n";
    for (const auto& r : results) out << "\"" << r.name << "\"," << (r.pass ? "true" : "false") << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
  }
  if (!all) throw DisagreementError("self-test failed");
  return Ok;
}

void add_knot(CLI::App* cmd, Options& o) {
  cmd->add_option("p", o.p, "order of the lens space")->required();
  cmd->add_option("q", o.q, "lens space parameter")->required();
  cmd->add_option("separation", o.h, "basepoint separation h, normalized before use")->required();
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chekanov-type DGA of grid number one Legendrian knots in lens spaces", "lensdga"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "labeled Lagrangian diagram of K(p,q,h)");
  add_knot(analyze_cmd, o);
  add_format(analyze_cmd, o);

  auto* loops_cmd = app.add_subcommand("loops", "N- and S-loop counts on the lifted diagram");
  add_knot(loops_cmd, o);
  add_format(loops_cmd, o);
  loops_cmd->add_flag("--oracle", o.oracle, "cross-check against explicit search and the recursions");
  loops_cmd->add_flag("--list", o.list, "list the loops through the fixed chord");

  auto* augment_cmd = app.add_subcommand("augment", "augmentation search");
  add_knot(augment_cmd, o);
  add_format(augment_cmd, o);
  augment_cmd->add_flag("--force", o.force, "allow specs outside q = p-1, h in {1,2}");
  augment_cmd->add_flag("--unrestricted", o.unrestricted, "do not impose eps(b_N) = eps(b_S)");

  auto* scan_cmd = app.add_subcommand("scan", "augmentation existence for K(p,p-1,2) over odd p");
  scan_cmd->add_option("p_min", o.p_min)->required();
  scan_cmd->add_option("p_max", o.p_max)->required();
  add_format(scan_cmd, o);
  scan_cmd->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the invariant suite");
  add_format(selftest_cmd, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(o, out);
    if (loops_cmd->parsed()) return loops(o, out);
    if (augment_cmd->parsed()) return augment(o, out);
    if (scan_cmd->parsed()) return scan(o, out);
    return selftest(o, out);
  } catch (const DisagreementError& e) {
    err << "disagreement: " << e.what() << "\n";
    return Disagreement;
  } catch (const ScopeError& e) {
    err << "error: " << e.what() << "\n";
    return Scope;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
}

}  // namespace lensdga::cli
