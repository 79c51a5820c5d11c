#include "lensdga/lagrangian.hpp"

#include <numeric>
#include <stdexcept>

namespace lensdga {

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::North: return "N";
    case Quadrant::East: return "E";
    case Quadrant::South: return "S";
    case Quadrant::West: return "W";
  }
  return "?";
}

std::string to_string(Pole p) {
  switch (p) {
    case Pole::None: return "none";
    case Pole::North: return "north";
    case Pole::South: return "south";
  }
  return "?";
}

std::string GeneratorRef::symbol() const {
  return (kind == ChordKind::A ? "a" : "b") + std::to_string(crossing);
}

GeneratorRef a_gen(int crossing) { return {crossing, ChordKind::A}; }
GeneratorRef b_gen(int crossing) { return {crossing, ChordKind::B}; }

int Corner::sign() const {
  return (quadrant == Quadrant::North || quadrant == Quadrant::South) ? 1 : -1;
}

GeneratorRef Corner::positive_label() const {
  return sign() > 0 ? a_gen(crossing) : b_gen(crossing);
}

GeneratorRef Corner::negative_label() const {
  return sign() > 0 ? b_gen(crossing) : a_gen(crossing);
}

const Crossing& LabeledDiagram::crossing(int j) const {
  if (j < 1 || j > static_cast<int>(crossings_.size())) throw std::out_of_range("crossing index out of range");
  return crossings_[static_cast<std::size_t>(j - 1)];
}

const Region& LabeledDiagram::region(int id) const {
  if (!fully_labeled_) throw ScopeError("regions are only built for fully labeled diagrams (k = 1)");
  if (id < 0 || id >= static_cast<int>(regions_.size())) throw std::out_of_range("region id out of range");
  return regions_[static_cast<std::size_t>(id)];
}

std::vector<int> crossing_set(const GridOneSpec& spec) {
  const int total = spec.crossing_count();
  std::vector<int> boxes;
  boxes.reserve(static_cast<std::size_t>(total));
  for (int j = 1; j <= total; ++j) boxes.push_back(box_label(spec, j, total));
  return boxes;
}

namespace {

std::vector<Region> spiral_regions(const LabeledDiagram& d) {
  const int n = static_cast<int>(d.crossings().size());
  const int p = d.spec().p();
  std::vector<Region> regions;
  regions.reserve(static_cast<std::size_t>(n + 2));

  Region north;
  north.id = 0;
  north.pole = Pole::North;
  north.corners = {{1, Quadrant::North}};
  regions.push_back(north);

  for (int r = 1; r <= n; ++r) {
    Region band;
    band.id = r;
    if (r + 1 <= n) band.corners.push_back({r + 1, Quadrant::North});
    band.corners.push_back({r, Quadrant::West});
    if (r - 1 >= 1) band.corners.push_back({r - 1, Quadrant::South});
    band.corners.push_back({r, Quadrant::East});
    if (r == d.spec().h()) band.area = ExactFraction(1, p);
    regions.push_back(band);
  }

  Region south;
  south.id = n + 1;
  south.pole = Pole::South;
  south.corners = {{n, Quadrant::South}};
  regions.push_back(south);
  return regions;
}

}  // namespace

LabeledDiagram build_diagram(const GridOneSpec& spec, Labeling mode) {
  if (mode == Labeling::Full) {
    if (spec.k() != 1) throw ScopeError("full labeling is implemented for k = 1 only (k = " + std::to_string(spec.k()) + ")");
    if (!spec.primitive()) throw ScopeError("full labeling needs a primitive knot (gcd(h,p) = 1)");
  }
  LabeledDiagram d(spec);
  const auto boxes = crossing_set(spec);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const int j = static_cast<int>(i) + 1;
    Crossing c;
    c.index = j;
    c.box = boxes[i];
    c.a = {a_gen(j), chord_length(spec, j, ChordKind::A), std::nullopt};
    c.b = {b_gen(j), chord_length(spec, j, ChordKind::B), std::nullopt};
    d.crossings_.push_back(c);
  }
  if (mode == Labeling::CrossingsOnly) return d;

  d.regions_ = spiral_regions(d);
  d.fully_labeled_ = true;
  for (auto& region : d.regions_) region.defect = region_defect(d, region);
  for (auto& c : d.crossings_) {
    c.a.grading = grading(d, c.a.ref);
    c.b.grading = grading(d, c.b.ref);
  }
  return d;
}

ExactFraction region_defect(const LabeledDiagram& diagram, const Region& region) {
  ExactFraction n = -region.area;
  for (const auto& corner : region.corners) {
    n += ExactFraction(corner.sign()) * diagram.crossing(corner.crossing).a.length;
  }
  return n;
}

ExactFraction x_defect(const LabeledDiagram& diagram, std::span<const RegionWeight> disc,
                       const GeneratorRef& positive, std::span<const GeneratorRef> negatives) {
  ExactFraction n = 0;
  for (const auto& w : disc) n += ExactFraction(w.multiplicity) * diagram.region(w.region).defect;
  for (const auto& y : negatives) {
    if (!y.preferred()) n -= 1;
  }
  if (!positive.preferred()) n += 1;
  return n;
}

namespace {

void require_labeled(const LabeledDiagram& d) {
  if (!d.fully_labeled()) throw ScopeError("operation needs a fully labeled diagram (k = 1)");
}

std::int64_t residue_for(const LabeledDiagram& d, int j, Pole side) {
  const int m = d.line_count();
  if (side == Pole::North) return j % m;
  if (side == Pole::South) return (m - j) % m;
  throw std::invalid_argument("capping path side must be North or South");
}

}  // namespace

CappingPath capping_path(const LabeledDiagram& diagram, int j, Pole side, std::int64_t rotations) {
  require_labeled(diagram);
  diagram.crossing(j);
  const std::int64_t m = diagram.line_count();
  const std::int64_t p = diagram.spec().p();
  if (rotations < 1 || rotations % m != residue_for(diagram, j, side)) {
    throw std::invalid_argument("capping path of a" + std::to_string(j) + " cannot make " +
                                std::to_string(rotations) + " turns");
  }

  // Line traversal counts: the north path runs lines 1, 2, ..., wrapping,
  // the south path starts on line j+1.
  const std::int64_t start = side == Pole::North ? 0 : j;
  std::vector<std::int64_t> per_line(static_cast<std::size_t>(m + 1), 0);
  for (std::int64_t line = 1; line <= m; ++line) {
    std::int64_t offset = ((line - 1 - start) % m + m) % m;
    per_line[static_cast<std::size_t>(line)] = offset < rotations ? (rotations - 1 - offset) / m + 1 : 0;
  }

  CappingPath path;
  path.crossing = j;
  path.side = side;
  path.rotations = rotations;
  path.rotation_number = ExactFraction(rotations) - ExactFraction(1, 4);
  path.pole_winding = rotations;
  path.admissible = rotations % p == 0;
  path.region_multiplicity.assign(static_cast<std::size_t>(diagram.region_count()), 0);

  const int n = static_cast<int>(diagram.crossings().size());
  auto& mult = path.region_multiplicity;
  if (side == Pole::North) {
    mult[static_cast<std::size_t>(diagram.north_cap_id())] = rotations;
    std::int64_t above = 0;
    for (int r = n; r >= 1; --r) {
      above += per_line[static_cast<std::size_t>(r + 1)];
      mult[static_cast<std::size_t>(diagram.band_id(r))] = above;
    }
  } else {
    mult[static_cast<std::size_t>(diagram.south_cap_id())] = rotations;
    std::int64_t below = 0;
    for (int r = 1; r <= n; ++r) {
      below += per_line[static_cast<std::size_t>(r)];
      mult[static_cast<std::size_t>(diagram.band_id(r))] = below;
    }
  }

  ExactFraction defect = 0;
  for (int id = 0; id < diagram.region_count(); ++id) {
    defect += ExactFraction(mult[static_cast<std::size_t>(id)]) * diagram.region(id).defect;
  }
  path.disc_defect = defect;
  path.contributes_constant = path.admissible && rotations == p && defect == 0;
  return path;
}

std::int64_t minimal_admissible_rotations(const LabeledDiagram& diagram, int j, Pole side) {
  require_labeled(diagram);
  const std::int64_t m = diagram.line_count();
  const std::int64_t p = diagram.spec().p();
  const std::int64_t want = residue_for(diagram, j, side);
  for (std::int64_t laps = 1; laps <= m; ++laps) {
    if ((laps * p) % m == want) return laps * p;
  }
  throw ScopeError("a" + std::to_string(j) + " has no admissible " + to_string(side) + " capping path");
}

std::vector<CappingPath> capping_paths(const LabeledDiagram& diagram) {
  std::vector<CappingPath> out;
  for (const auto& c : diagram.crossings()) {
    for (Pole side : {Pole::North, Pole::South}) {
      out.push_back(capping_path(diagram, c.index, side, minimal_admissible_rotations(diagram, c.index, side)));
    }
  }
  return out;
}

ExactFraction raw_a_grading(const LabeledDiagram& diagram, int j) {
  const auto path = capping_path(diagram, j, Pole::North, minimal_admissible_rotations(diagram, j, Pole::North));
  const std::int64_t p = diagram.spec().p();
  const std::int64_t ceil_r = path.rotations;
  return ExactFraction(2 * ceil_r) - ExactFraction(2 * (p - 1) * path.pole_winding, p) - 1 +
         ExactFraction(4) * path.disc_defect;
}

ExactFraction grading(const LabeledDiagram& diagram, const GeneratorRef& gen) {
  require_labeled(diagram);
  ExactFraction g = raw_a_grading(diagram, gen.crossing);
  if (gen.kind == ChordKind::B) g = ExactFraction(3) - g;
  const int modulus = diagram.grading_modulus();
  return modulus > 0 ? reduce_mod(g, modulus) : g;
}

KnotDisc knot_disc(const LabeledDiagram& diagram) {
  require_labeled(diagram);
  const int m = diagram.line_count();
  const int n = static_cast<int>(diagram.crossings().size());
  KnotDisc disc;
  disc.rotation = m;
  disc.region_multiplicity.assign(static_cast<std::size_t>(diagram.region_count()), 0);
  disc.region_multiplicity[static_cast<std::size_t>(diagram.north_cap_id())] = m;
  for (int r = 1; r <= n; ++r) disc.region_multiplicity[static_cast<std::size_t>(diagram.band_id(r))] = m - r;
  for (int id = 0; id < diagram.region_count(); ++id) {
    const auto w = ExactFraction(disc.region_multiplicity[static_cast<std::size_t>(id)]);
    disc.area += w * diagram.region(id).area;
    disc.defect += w * diagram.region(id).defect;
  }
  return disc;
}

}  // namespace lensdga
