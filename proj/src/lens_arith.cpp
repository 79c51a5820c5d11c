#include "lensdga/lens_arith.hpp"

#include <numeric>

namespace lensdga {

namespace {

int mod(std::int64_t a, int m) {
  auto r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t floor_of(const ExactFraction& x) {
  auto n = x.numerator();
  auto d = x.denominator();
  auto f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

ExactFraction fractional_part(const ExactFraction& x) {
  return x - ExactFraction(floor_of(x));
}

ExactFraction reduce_mod(const ExactFraction& x, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("reduce_mod: modulus must be positive");
  ExactFraction scaled = x / ExactFraction(m);
  return x - ExactFraction(floor_of(scaled) * m);
}

std::string to_string(const ExactFraction& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

LensParams LensParams::make(int p, int q) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (q <= 0 || q >= p) throw std::invalid_argument("q must satisfy 0 < q < p");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("gcd(p,q) must be 1");
  if (q == 1) throw ScopeError("q=1 unsupported (the DGA is defined for q != 1)");
  return LensParams{p, q};
}

int vertical_length(int p, int q, int s) {
  if (p < 2 || std::gcd(p, q) != 1) throw std::invalid_argument("vertical_length: need gcd(p,q) = 1");
  if (mod(s, p) == 0) throw std::invalid_argument("degenerate diagram: both basepoints in one box");
  for (int v = 1; v < p; ++v) {
    if (mod(static_cast<std::int64_t>(s) + static_cast<std::int64_t>(v) * q, p) == 0) return v;
  }
  throw std::logic_error("vertical_length: no solution although gcd(p,q) = 1");
}

int normalize_h(int p, int q, int s) {
  if (s <= 0 || s >= p) throw std::invalid_argument("normalize_h: need 0 < s < p");
  int v = vertical_length(p, q, s);
  if (s + v < p) return s;
  if (s + v > p) return p - s;
  return std::min(s, p - s);
}

int cover_order(int p, int q) { return std::gcd(q - 1, p); }

GridOneSpec GridOneSpec::from_separation(int p, int q, int s) {
  LensParams lens = LensParams::make(p, q);
  if (mod(s, p) == 0) throw std::invalid_argument("degenerate diagram: h ≡ 0 mod p");
  if (s < 0 || s >= p) throw std::invalid_argument("separation must satisfy 0 < s < p");
  int h = normalize_h(p, q, s);
  int v = vertical_length(p, q, h);
  return GridOneSpec(lens, h, v, cover_order(p, q), s);
}

bool GridOneSpec::primitive() const { return std::gcd(h_, lens_.p) == 1; }

int GridOneSpec::crossing_count() const { return (h_ - 1) / k_ + v_ / k_; }

bool is_primitive(const GridOneSpec& spec) { return spec.primitive(); }

int box_label(const GridOneSpec& spec, int j, int crossing_total) {
  if (j < 1 || j > crossing_total) throw std::out_of_range("box_label: crossing index out of range");
  const int k = spec.k();
  if (static_cast<std::int64_t>(j) * k <= spec.h()) return mod(static_cast<std::int64_t>(k) * j, spec.p());
  std::int64_t factor = -static_cast<std::int64_t>(spec.q()) * k;
  return mod(factor * (crossing_total + 1 - j), spec.p());
}

int chord_steps(const GridOneSpec& spec, int j) {
  const int p = spec.p();
  const int b = box_label(spec, j, spec.crossing_count());
  const int step = mod(1 - spec.q(), p);
  for (int x = 1; x <= p; ++x) {
    if (mod(b + static_cast<std::int64_t>(step) * x, p) == 0) return x;
  }
  throw std::logic_error("chord_steps: box label not reachable by diagonal steps");
}

ExactFraction chord_length(const GridOneSpec& spec, int j, ChordKind kind) {
  ExactFraction a(static_cast<std::int64_t>(spec.k()) * chord_steps(spec, j), spec.p());
  return kind == ChordKind::A ? a : ExactFraction(1) - a;
}

ExactFraction phi_of_theta(const LensParams& lens, const ExactFraction& theta1,
                           const ExactFraction& theta2) {
  const int k = cover_order(lens.p, lens.q);
  ExactFraction phi = ExactFraction(lens.p / k) * (theta1 - theta2);
  return fractional_part(phi);
}

}  // namespace lensdga
