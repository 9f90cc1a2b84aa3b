#ifndef SEMU_GEOMETRY_HPP_
#define SEMU_GEOMETRY_HPP_

#include <cstdint>
#include <string>

#include "semu/errors.hpp"

namespace semu {

using i128 = __int128;

struct Pt {
  int64_t x = 0, y = 0;
  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Pt& o) const { return !(*this == o); }
  bool operator<(const Pt& o) const { return x != o.x ? x < o.x : y < o.y; }
};

inline Pt operator-(Pt a, Pt b) { return Pt{a.x - b.x, a.y - b.y}; }

/* All predicates are exact: coordinates are 64-bit integers and every
 * product is taken in 128 bits. */
inline i128 cross(Pt a, Pt b) { return (i128)a.x * b.y - (i128)a.y * b.x; }
inline i128 dot(Pt a, Pt b) { return (i128)a.x * b.x + (i128)a.y * b.y; }

inline int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// +1:CCW  -1:CW  0:collinear
inline int orient(Pt o, Pt a, Pt b) { return sgn(cross(a - o, b - o)); }

/* p strictly inside the segment (a,b); requires collinearity. */
inline bool strictly_between(Pt a, Pt b, Pt p) {
  if (orient(a, b, p) != 0) return false;
  return dot(p - a, b - a) > 0 && dot(p - b, a - b) > 0;
}

inline bool on_closed_segment(Pt a, Pt b, Pt p) {
  if (orient(a, b, p) != 0) return false;
  return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
}

/* Exact rational, normalized to den > 0 and reduced. Magnitudes stay small
 * because scene coordinates are capped at |x| <= 1e6 before any crossing is
 * computed, so every product here fits into 128 bits with room to spare. */
struct Frac {
  i128 num = 0, den = 1;
  static Frac make(i128 n, i128 d);
  static Frac whole(int64_t v) { return Frac{v, 1}; }
  bool is_integer() const { return den == 1; }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
};

struct FPoint {
  Frac x, y;
  bool operator==(const FPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const FPoint& o) const { return x == o.x ? y < o.y : x < o.x; }
};

/* Nearest integer to f*scale, ties toward positive infinity. */
int64_t scaled_round(const Frac& f, int64_t scale);

std::string frac_str(const Frac& f);

enum class SegContact {
  None,               /* disjoint */
  ProperCross,        /* interiors cross in one point */
  VertexTouch,        /* an endpoint of one equals an endpoint of the other */
  EndpointOnInterior, /* an endpoint lies strictly inside the other segment */
  Overlap             /* collinear with a shared sub-segment */
};

struct SegHit {
  SegContact kind = SegContact::None;
  FPoint at;          /* filled for ProperCross and VertexTouch */
};

/* Classifies the contact between closed segments (p1,p2) and (q1,q2).
 * Both segments must be non-degenerate. Two straight segments meet in at
 * most one point unless collinear, so a single classification suffices. */
SegHit seg_contact(Pt p1, Pt p2, Pt q1, Pt q2);

/* Counterclockwise angular order of direction vectors, starting at east.
 * Equal directions compare by squared length, shorter first. */
bool ccw_dir_less(Pt d1, Pt d2);

}  // namespace semu

#endif  // SEMU_GEOMETRY_HPP_
