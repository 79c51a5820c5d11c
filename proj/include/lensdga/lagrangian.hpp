#pragma once

// Labeled Lagrangian projection of the special front of K(p,q,h).
//
// For k = gcd(q-1,p) = 1 the projection is a descending spiral of m = h+v
// horizontal lines (line 1 nearest the north pole) joined by descending
// curves D_1..D_{m-1}, plus one ascending curve near phi = 0 that meets
// every D_j once. Crossing c_j = D_j ∩ ascending curve. The complement has
// a north cap, a south cap, and bands R_1..R_{m-1}; R_r lies between lines
// r and r+1 and is closed off at both ends by the ascending curve. Band R_h
// passes from pole to pole and carries all of the area 1/p; every other
// region has zero area in the centered-basepoint limit.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lensdga/lens_arith.hpp"

namespace lensdga {

enum class Quadrant { North, East, South, West };
enum class Pole { None, North, South };

std::string to_string(Quadrant q);
std::string to_string(Pole p);

struct GeneratorRef {
  int crossing = 0;
  ChordKind kind = ChordKind::A;

  /// a-type generators are the preferred chords.
  bool preferred() const { return kind == ChordKind::A; }
  std::string symbol() const;

  friend auto operator<=>(const GeneratorRef&, const GeneratorRef&) = default;
};

GeneratorRef a_gen(int crossing);
GeneratorRef b_gen(int crossing);

struct Generator {
  GeneratorRef ref;
  ExactFraction length;
  /// Reduced modulo the grading modulus when that is nonzero. Empty when
  /// the diagram is not fully labeled.
  std::optional<ExactFraction> grading;
};

struct Crossing {
  int index = 0;  // 1-based, top-down
  int box = 0;    // B(index)
  Generator a;
  Generator b;
};

/// A corner of a region: the region fills `quadrant` at `crossing`.
/// North/South quadrants carry a+ and b- labels, East/West carry a- and b+.
struct Corner {
  int crossing = 0;
  Quadrant quadrant = Quadrant::North;

  /// +1 when the quadrant is an a+ quadrant, -1 otherwise.
  int sign() const;
  GeneratorRef positive_label() const;
  GeneratorRef negative_label() const;

  friend bool operator==(const Corner&, const Corner&) = default;
};

struct Region {
  int id = 0;
  /// Counterclockwise boundary order.
  std::vector<Corner> corners;
  ExactFraction area;
  ExactFraction defect;
  Pole pole = Pole::None;
};

struct RegionWeight {
  int region = 0;
  std::int64_t multiplicity = 0;
};

enum class Labeling { Full, CrossingsOnly };

class LabeledDiagram {
 public:
  const GridOneSpec& spec() const { return spec_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  /// Empty unless fully labeled.
  const std::vector<Region>& regions() const { return regions_; }
  /// Always #crossings + 2, also in crossings-only mode.
  int region_count() const { return static_cast<int>(crossings_.size()) + 2; }
  bool fully_labeled() const { return fully_labeled_; }
  /// 2|h - v|; 0 means gradings are not reduced.
  int grading_modulus() const { return 2 * std::abs(spec_.h() - spec_.v()); }
  /// Number of horizontal lines of the spiral, h + v.
  int line_count() const { return spec_.h() + spec_.v(); }

  const Crossing& crossing(int j) const;
  const Region& region(int id) const;
  int north_cap_id() const { return 0; }
  int south_cap_id() const { return static_cast<int>(crossings_.size()) + 1; }
  /// Band between horizontal lines r and r+1.
  int band_id(int r) const { return r; }
  int large_region_id() const { return band_id(spec_.h()); }

 private:
  friend LabeledDiagram build_diagram(const GridOneSpec&, Labeling);
  explicit LabeledDiagram(GridOneSpec spec) : spec_(spec) {}

  GridOneSpec spec_;
  std::vector<Crossing> crossings_;
  std::vector<Region> regions_;
  bool fully_labeled_ = false;
};

/// Boxes of the crossings in top-down order: the x-set {x < h : k | x}
/// followed by the y-set {y <= v : k | y}, listed as B(1), ..., B(s).
std::vector<int> crossing_set(const GridOneSpec& spec);

/// Full labeling needs a primitive spec with k = 1; otherwise throws
/// ScopeError. CrossingsOnly works for every valid spec.
LabeledDiagram build_diagram(const GridOneSpec& spec, Labeling mode = Labeling::Full);

/// n(R) = -area(R) + sum of eps(i) l(a_i) over corners of R.
ExactFraction region_defect(const LabeledDiagram& diagram, const Region& region);

/// Defect of a disc (regions with multiplicity) read from the corner
/// `positive`: subtract one per non-preferred negative corner, add one when
/// the positive corner is non-preferred.
ExactFraction x_defect(const LabeledDiagram& diagram, std::span<const RegionWeight> disc,
                       const GeneratorRef& positive, std::span<const GeneratorRef> negatives);

struct CappingPath {
  int crossing = 0;
  /// Pole enclosed by the disc the path bounds.
  Pole side = Pole::North;
  /// Horizontal lines traversed; each is one turn about the enclosed pole.
  std::int64_t rotations = 0;
  /// Tangent rotation number, rotations - 1/4.
  ExactFraction rotation_number;
  std::int64_t pole_winding = 0;
  /// Multiplicity of every region (indexed by region id) in the disc.
  std::vector<std::int64_t> region_multiplicity;
  ExactFraction disc_defect;
  /// pole_winding ≡ 0 (mod p).
  bool admissible = false;
  /// Exactly p turns: the disc has a single z^p branch point at the pole
  /// and is counted by the differential when its defect vanishes.
  bool contributes_constant = false;
};

/// Capping path of a_j around `side` with the given number of turns.
/// The turn count must be ≡ j (north) or ≡ h+v-j (south) modulo h+v.
CappingPath capping_path(const LabeledDiagram& diagram, int j, Pole side, std::int64_t rotations);

/// Least admissible turn count for a_j on `side`.
std::int64_t minimal_admissible_rotations(const LabeledDiagram& diagram, int j, Pole side);

/// The north and south admissible capping paths (least turn count) of
/// every a-type generator, ordered by crossing then side.
std::vector<CappingPath> capping_paths(const LabeledDiagram& diagram);

/// Unreduced grading of a_j from its least admissible north capping path.
ExactFraction raw_a_grading(const LabeledDiagram& diagram, int j);

/// Grading of a generator, reduced modulo grading_modulus() when nonzero.
ExactFraction grading(const LabeledDiagram& diagram, const GeneratorRef& gen);

/// The immersed disc bounded by K0, oriented away from the south pole.
struct KnotDisc {
  std::int64_t rotation = 0;
  ExactFraction area;
  ExactFraction defect;
  std::vector<std::int64_t> region_multiplicity;
};

KnotDisc knot_disc(const LabeledDiagram& diagram);

}  // namespace lensdga
