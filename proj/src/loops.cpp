#include "lensdga/loops.hpp"

#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace lensdga {

namespace {

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("loop count exceeds 64 bits");
  return r;
}

Offset loop_target(LoopKind kind, std::int64_t p) {
  return kind == LoopKind::N ? Offset{-p, 0} : Offset{0, -p};
}

bool pruned(LoopKind kind, const Offset& d, std::int64_t p) {
  return kind == LoopKind::N ? d.rows < -p : d.cols < -p;
}

void require_side(LoopKind kind) {
  if (kind != LoopKind::N && kind != LoopKind::S) throw std::invalid_argument("loop side must be N or S");
}

}  // namespace

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("loop count exceeds 64 bits");
  return r;
}

LiftedDiagram::LiftedDiagram(const GridOneSpec& spec) : spec_(spec) {
  const int p = spec.p();
  int per = 1;
  while (static_cast<std::int64_t>(per) * spec.v() % p != 0 || static_cast<std::int64_t>(per) * spec.h() % p != 0) ++per;
  components_ = p / per;
  if (components_ != 1) {
    throw ScopeError("K(" + std::to_string(p) + "," + std::to_string(spec.q()) + "," + std::to_string(spec.h()) +
                     ") is not primitive: its lift has " + std::to_string(components_) + " components");
  }
  for (std::int64_t c = 0; c < p; ++c) box0_.emplace(position(c * period()), c * period());
  if (spec.k() == 1) {
    steps_.assign(static_cast<std::size_t>(period()), 0);
    for (int j = 1; j < period(); ++j) steps_[static_cast<std::size_t>(j)] = chord_steps(spec, j);
  }
}

Offset LiftedDiagram::unwrapped(std::int64_t t) const {
  const std::int64_t m = period();
  const std::int64_t per = (t - mod64(t, m)) / m;
  const std::int64_t i = mod64(t, m);
  const std::int64_t h = spec_.h();
  const std::int64_t v = spec_.v();
  if (i <= h) return {-per * v, per * h + i};
  return {-per * v - (i - h), per * h + h};
}

Cell LiftedDiagram::position(std::int64_t t) const {
  const auto u = unwrapped(t);
  return {static_cast<int>(mod64(u.rows, spec_.p())), static_cast<int>(mod64(u.cols, spec_.p()))};
}

int LiftedDiagram::crossing_at(std::int64_t t) const { return static_cast<int>(mod64(t, period())); }

std::int64_t LiftedDiagram::box0_index(Cell cell) const {
  auto it = box0_.find(cell);
  if (it == box0_.end()) throw std::out_of_range("no box-0 strand point in that cell");
  return it->second;
}

Cell LiftedDiagram::deck_shift(Cell c) const {
  const int p = spec_.p();
  return {static_cast<int>(mod64(c.row + 1, p)), static_cast<int>(mod64(c.col + spec_.q(), p))};
}

bool LiftedDiagram::deck_invariant() const {
  std::set<Cell> points;
  for (std::int64_t t = 0; t < strand_count(); ++t) points.insert(position(t));
  for (const auto& c : points) {
    if (!points.contains(deck_shift(c))) return false;
  }
  return true;
}

ChordDrop LiftedDiagram::drop(std::int64_t upper) const {
  if (spec_.k() != 1) throw ScopeError("lifted chords are implemented for k = 1 only");
  const int j = crossing_at(upper);
  if (j == 0) throw std::invalid_argument("strand point is not the upper end of a b-chord");
  const std::int64_t d = spec_.p() - steps_[static_cast<std::size_t>(j)];
  const auto u = unwrapped(upper);
  const int p = spec_.p();
  Cell lower{static_cast<int>(mod64(u.rows - d, p)), static_cast<int>(mod64(u.cols - d, p))};
  return {box0_index(lower), {-d, -d}};
}

ExactFraction LiftedDiagram::lifted_chord_length(int j, ChordKind kind) const {
  if (spec_.k() != 1) throw ScopeError("lifted chords are implemented for k = 1 only");
  if (j < 1 || j >= period()) throw std::out_of_range("crossing index out of range");
  const std::int64_t x = steps_[static_cast<std::size_t>(j)];
  return kind == ChordKind::A ? ExactFraction(x, spec_.p()) : ExactFraction(spec_.p() - x, spec_.p());
}

std::int64_t LiftedDiagram::base_lift(int j) const {
  if (j < 1 || j >= period()) throw std::out_of_range("crossing index out of range");
  for (std::int64_t c = 0; c < spec_.p(); ++c) {
    const std::int64_t t = c * period() + j;
    if (drop(t).lower == 0) return t;
  }
  throw std::logic_error("no lift of b" + std::to_string(j) + " ends at strand point 0");
}

std::string to_string(LoopKind kind) {
  switch (kind) {
    case LoopKind::N: return "N";
    case LoopKind::S: return "S";
    case LoopKind::Ni: return "N_i";
    case LoopKind::Si: return "S_i";
  }
  return "?";
}

std::vector<GeneratorRef> LoopPath::boundary_word() const {
  std::vector<GeneratorRef> word;
  for (std::size_t i = 1; i < chords.size(); ++i) word.push_back(b_gen(chords[i].crossing));
  return word;
}

namespace {

class LoopSearch {
 public:
  LoopSearch(const LiftedDiagram& lifted, LoopKind kind, int base, std::size_t limit)
      : lifted_(lifted), kind_(kind), base_(base), limit_(limit),
        p_(lifted.spec().p()), period_(lifted.strand_count()),
        step_(kind == LoopKind::N ? 1 : -1), t0_(lifted.base_lift(base)) {}

  std::vector<LoopPath> run() {
    const auto first = lifted_.drop(t0_);
    chords_.push_back({base_, t0_, first.lower});
    visited_.insert(first.lower);
    walk(first.lower, first.shift);
    return std::move(found_);
  }

 private:
  void walk(std::int64_t start, Offset d) {
    std::vector<std::int64_t> added;
    std::int64_t cur = start;
    while (true) {
      const auto a = lifted_.unwrapped(cur);
      cur += step_;
      const auto b = lifted_.unwrapped(cur);
      d.rows += b.rows - a.rows;
      d.cols += b.cols - a.cols;
      if (pruned(kind_, d, p_)) break;
      const std::int64_t cm = mod64(cur, period_);
      if (cm == t0_) {
        if (d == loop_target(kind_, p_)) record(start, cur);
        break;
      }
      if (visited_.contains(cm)) break;
      visited_.insert(cm);
      added.push_back(cm);
      if (lifted_.crossing_at(cur) == 0) continue;
      const auto next = lifted_.drop(cur);
      if (visited_.contains(next.lower)) continue;
      Offset nd{d.rows + next.shift.rows, d.cols + next.shift.cols};
      if (pruned(kind_, nd, p_) || !can_close(next.lower, nd)) continue;
      chords_.push_back({lifted_.crossing_at(cur), cm, next.lower});
      segments_.push_back({start, cur});
      visited_.insert(next.lower);
      walk(next.lower, nd);
      visited_.erase(next.lower);
      segments_.pop_back();
      chords_.pop_back();
    }
    for (auto x : added) visited_.erase(x);
  }

  // Whether some continuation from (u, d) closes up, ignoring revisits.
  bool can_close(std::int64_t u, Offset d) {
    const auto key = std::make_tuple(mod64(u, period_), d.rows, d.cols);
    if (auto it = closable_.find(key); it != closable_.end()) return it->second;
    bool found = false;
    std::int64_t cur = u;
    while (!found) {
      const auto a = lifted_.unwrapped(cur);
      cur += step_;
      const auto b = lifted_.unwrapped(cur);
      d.rows += b.rows - a.rows;
      d.cols += b.cols - a.cols;
      if (pruned(kind_, d, p_)) break;
      if (mod64(cur, period_) == t0_) {
        found = d == loop_target(kind_, p_);
        break;
      }
      if (lifted_.crossing_at(cur) == 0) continue;
      const auto next = lifted_.drop(cur);
      Offset nd{d.rows + next.shift.rows, d.cols + next.shift.cols};
      if (!pruned(kind_, nd, p_)) found = can_close(next.lower, nd);
    }
    closable_[key] = found;
    return found;
  }

  void record(std::int64_t start, std::int64_t end) {
    if (found_.size() >= limit_) throw std::length_error("loop enumeration limit exceeded");
    LoopPath path;
    path.kind = kind_;
    path.generator = base_;
    path.chords = chords_;
    path.segments = segments_;
    path.segments.push_back({start, end});
    found_.push_back(std::move(path));
  }

  const LiftedDiagram& lifted_;
  LoopKind kind_;
  int base_;
  std::size_t limit_;
  std::int64_t p_;
  std::int64_t period_;
  std::int64_t step_;
  std::int64_t t0_;
  std::set<std::int64_t> visited_;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, bool> closable_;
  std::vector<ChordVisit> chords_;
  std::vector<Segment> segments_;
  std::vector<LoopPath> found_;
};

class WordCounter {
 public:
  WordCounter(const LiftedDiagram& lifted, LoopKind kind, int base, const std::vector<int>& allowed)
      : lifted_(lifted), kind_(kind), p_(lifted.spec().p()), period_(lifted.strand_count()),
        step_(kind == LoopKind::N ? 1 : -1), t0_(lifted.base_lift(base)),
        allowed_(static_cast<std::size_t>(lifted.period()), allowed.empty()) {
    for (int j : allowed) {
      if (j < 1 || j >= lifted.period()) throw std::out_of_range("allowed crossing out of range");
      allowed_[static_cast<std::size_t>(j)] = true;
    }
  }

  WordCounts run() {
    const auto first = lifted_.drop(t0_);
    return go(first.lower, first.shift);
  }

 private:
  const WordCounts& go(std::int64_t u, Offset d) {
    const auto key = std::make_tuple(mod64(u, period_), d.rows, d.cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    WordCounts out;
    std::int64_t cur = u;
    while (true) {
      const auto a = lifted_.unwrapped(cur);
      cur += step_;
      const auto b = lifted_.unwrapped(cur);
      d.rows += b.rows - a.rows;
      d.cols += b.cols - a.cols;
      if (pruned(kind_, d, p_)) break;
      if (mod64(cur, period_) == t0_) {
        if (d == loop_target(kind_, p_)) out[{}] = checked_add(out[{}], 1);
        break;
      }
      const int j = lifted_.crossing_at(cur);
      if (j == 0 || !allowed_[static_cast<std::size_t>(j)]) continue;
      const auto next = lifted_.drop(cur);
      const auto& tail = go(next.lower, {d.rows + next.shift.rows, d.cols + next.shift.cols});
      for (const auto& [word, count] : tail) {
        std::vector<int> w;
        w.reserve(word.size() + 1);
        w.push_back(j);
        w.insert(w.end(), word.begin(), word.end());
        out[w] = checked_add(out[w], count);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  const LiftedDiagram& lifted_;
  LoopKind kind_;
  std::int64_t p_;
  std::int64_t period_;
  std::int64_t step_;
  std::int64_t t0_;
  std::vector<bool> allowed_;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, WordCounts> memo_;
};

}  // namespace

std::vector<LoopPath> enumerate_loops(const LiftedDiagram& lifted, LoopKind kind, int base_crossing,
                                      std::size_t limit) {
  require_side(kind);
  return LoopSearch(lifted, kind, base_crossing, limit).run();
}

std::vector<LoopPath> loops_for_generator(const LiftedDiagram& lifted, int i, std::size_t limit) {
  std::vector<LoopPath> out;
  for (auto [side, tagged] : {std::pair{LoopKind::N, LoopKind::Ni}, std::pair{LoopKind::S, LoopKind::Si}}) {
    for (auto& loop : enumerate_loops(lifted, side, i, limit)) {
      loop.kind = tagged;
      out.push_back(std::move(loop));
    }
  }
  return out;
}

WordCounts loop_word_counts(const LiftedDiagram& lifted, LoopKind kind, int base_crossing,
                            const std::vector<int>& allowed) {
  require_side(kind);
  return WordCounter(lifted, kind, base_crossing, allowed).run();
}

std::uint64_t total(const WordCounts& counts) {
  std::uint64_t sum = 0;
  for (const auto& [word, c] : counts) sum = checked_add(sum, c);
  return sum;
}

SwitchBound max_switch_chords(int p, LoopKind kind) {
  require_side(kind);
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("max_switch_chords needs an odd p >= 3");
  const int half = (p - 1) / 2;
  if (kind == LoopKind::S) {
    const int c = half % 2 == 1 ? half : half - 1;
    return {c, (c - 1) / 2};
  }
  const int c = half % 2 == 0 ? half : half - 1;
  return {c, c / 2};
}

namespace {

LoopCount from_recursion(int k, std::uint64_t base, bool grow_constant) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  std::vector<std::uint64_t> f(static_cast<std::size_t>(k) + 1);
  f[0] = 1;
  for (int n = 1; n <= k; ++n) {
    std::uint64_t value = grow_constant ? static_cast<std::uint64_t>(n) + base : base;
    for (int i = 1; i <= n; ++i) {
      value = checked_add(value, checked_mul(static_cast<std::uint64_t>(i), f[static_cast<std::size_t>(n - i)]));
    }
    f[static_cast<std::size_t>(n)] = value;
  }
  const auto c = f[static_cast<std::size_t>(k)];
  return {k, c, static_cast<int>(c % 2)};
}

}  // namespace

LoopCount count_S(int k) { return from_recursion(k, 1, true); }

LoopCount count_N(int k) { return from_recursion(k, 1, false); }

std::uint64_t count_subseq_bruteforce(int k, LengthParity parity) {
  if (k < 0 || k > 15) throw std::invalid_argument("brute-force oracle supports 0 <= k <= 15");
  const int len = 2 * k + 1;
  const std::uint64_t limit = std::uint64_t{1} << len;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    int chosen = 0;
    bool alternating = true;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const int pos = __builtin_ctzll(rest);
      if (pos % 2 != chosen % 2) {
        alternating = false;
        break;
      }
      ++chosen;
    }
    if (!alternating) continue;
    if ((chosen % 2 == 1) == (parity == LengthParity::Odd)) ++count;
  }
  return count;
}

}  // namespace lensdga
