#pragma once

// Modular arithmetic for grid number one diagrams K(p,q,h) in the lens
// space L(p,q). Every numeric parameter used downstream (vertical length,
// cover order, box labels, chord lengths) is derived here.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under the
// C++20 reversed-operand rules; these exact overloads win resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace lensdga {

/// Exact rational in lowest terms with positive denominator.
using ExactFraction = boost::rational<std::int64_t>;

/// Input lies outside the mathematically supported scope (q = 1, k > 1
/// labeling, non-primitive lifts, ...). Distinct from malformed input,
/// which raises std::invalid_argument.
class ScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::int64_t floor_of(const ExactFraction& x);
/// x - floor(x), always in [0, 1).
ExactFraction fractional_part(const ExactFraction& x);
/// Representative of x modulo m in [0, m); m must be positive.
ExactFraction reduce_mod(const ExactFraction& x, std::int64_t m);
/// "n" for integers, "n/d" otherwise.
std::string to_string(const ExactFraction& x);

struct LensParams {
  int p = 0;
  int q = 0;

  /// Validates 0 < q < p and gcd(p,q) = 1; q = 1 raises ScopeError.
  static LensParams make(int p, int q);
};

/// Unique v in (0,p) with s + v*q ≡ 0 (mod p).
int vertical_length(int p, int q, int s);

/// Orientation-normalized horizontal separation: s when s + v(s) < p,
/// p - s when s + v(s) > p, min(s, p - s) on the tie.
int normalize_h(int p, int q, int s);

/// gcd(q - 1, p).
int cover_order(int p, int q);

class GridOneSpec {
 public:
  /// Builds K(p,q,h) from the raw basepoint separation s, normalizing h.
  static GridOneSpec from_separation(int p, int q, int s);

  const LensParams& lens() const { return lens_; }
  int p() const { return lens_.p; }
  int q() const { return lens_.q; }
  int h() const { return h_; }
  int v() const { return v_; }
  int k() const { return k_; }
  /// The separation the caller asked for, before normalization.
  int requested_separation() const { return requested_; }

  bool primitive() const;
  /// |{x < h : k | x}| + |{y <= v : k | y}|.
  int crossing_count() const;

  friend bool operator==(const GridOneSpec&, const GridOneSpec&) = default;

 private:
  GridOneSpec(LensParams lens, int h, int v, int k, int requested)
      : lens_(lens), h_(h), v_(v), k_(k), requested_(requested) {}

  LensParams lens_;
  int h_;
  int v_;
  int k_;
  int requested_;
};

bool is_primitive(const GridOneSpec& spec);

/// Box label B(j) of the j-th crossing (1-based, counted top-down) given
/// the total crossing count. Result in [0, p).
int box_label(const GridOneSpec& spec, int j, int crossing_total);

/// Least positive x with B(j) + (1 - q) x ≡ 0 (mod p): the number of
/// diagonal box steps from box B(j) to box 0.
int chord_steps(const GridOneSpec& spec, int j);

enum class ChordKind { A, B };

/// Length of a_j (k x_j / p) or of its complement b_j, as a fraction of
/// the Reeb orbit period.
ExactFraction chord_length(const GridOneSpec& spec, int j, ChordKind kind);

/// Azimuth of the Reeb orbit through (theta1, theta2) in the Lagrangian
/// projection. Angles are measured in full turns, so the result is
/// (p/k)(theta1 - theta2) reduced into [0, 1).
ExactFraction phi_of_theta(const LensParams& lens, const ExactFraction& theta1,
                           const ExactFraction& theta2);

}  // namespace lensdga
