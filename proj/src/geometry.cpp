#include "semu/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace semu {

const char* err_name(Err k) {
  switch (k) {
    case Err::Parse: return "parse";
    case Err::CrossingDrawing: return "crossing-drawing";
    case Err::DuplicateCoordinate: return "duplicate-coordinate";
    case Err::DanglingEdge: return "dangling-edge";
    case Err::DisconnectedInduced: return "disconnected-induced";
    case Err::NotOuterBounded: return "not-outer-bounded";
    case Err::DisconnectedPart: return "disconnected-part";
    case Err::EmptyRegion: return "empty-region";
    case Err::DisconnectedRegion: return "disconnected-region";
    case Err::GeneralPosition: return "general-position";
    case Err::ResampleLimit: return "resample-limit";
    case Err::PartialClustering: return "partial-clustering";
    case Err::UnknownRegion: return "unknown-region";
    case Err::MissingTrace: return "missing-trace";
    case Err::TooLarge: return "too-large";
    case Err::EmptyRegionSet: return "empty-region-set";
    case Err::SupportMismatch: return "support-mismatch";
    case Err::Precondition: return "precondition";
    case Err::Internal: return "internal";
  }
  return "unknown";
}

int exit_code_for(Err k) {
  switch (k) {
    case Err::Precondition:
    case Err::Internal:
      return 3;
    default:
      return 2;
  }
}

static i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Frac Frac::make(i128 n, i128 d) {
  if (d == 0) fail(Err::Internal, "rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  i128 g = gcd128(n, d);
  if (g > 1) { n /= g; d /= g; }
  return Frac{n, d};
}

int64_t scaled_round(const Frac& f, int64_t scale) {
  i128 num = f.num * scale;
  i128 den = f.den;        // den > 0
  /* floor((2*num + den) / (2*den)) rounds half up. */
  i128 t = 2 * num + den;
  i128 q = t / (2 * den);
  if (t < 0 && t % (2 * den) != 0) q -= 1;
  return (int64_t)q;
}

std::string frac_str(const Frac& f) {
  auto i128_str = [](i128 v) {
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    do { s.push_back(char('0' + (int)(v % 10))); v /= 10; } while (v);
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
  };
  std::string s = i128_str(f.num);
  if (f.den != 1) s += "/" + i128_str(f.den);
  return s;
}

SegHit seg_contact(Pt p1, Pt p2, Pt q1, Pt q2) {
  if (p1 == p2 || q1 == q2) fail(Err::Precondition, "degenerate segment");
  Pt dp = p2 - p1, dq = q2 - q1;
  int d1 = orient(q1, q2, p1);
  int d2 = orient(q1, q2, p2);
  int d3 = orient(p1, p2, q1);
  int d4 = orient(p1, p2, q2);

  if (d1 == 0 && d2 == 0) {
    /* Collinear. Order the four points along the common line and look at
     * the 1-d overlap of the two intervals. */
    auto key = [&](Pt r) { return dot(r - p1, dp); };
    i128 a0 = 0, a1 = key(p2);
    i128 b0 = key(q1), b1 = key(q2);
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    i128 lo = std::max(a0, b0), hi = std::min(a1, b1);
    if (lo > hi) return SegHit{SegContact::None, {}};
    if (lo < hi) return SegHit{SegContact::Overlap, {}};
    /* Single shared point; it is an endpoint of both segments. */
    Pt t = (p1 == q1 || p1 == q2) ? p1 : p2;
    return SegHit{SegContact::VertexTouch, FPoint{Frac::whole(t.x), Frac::whole(t.y)}};
  }

  if (p1 == q1 || p1 == q2)
    return SegHit{SegContact::VertexTouch, FPoint{Frac::whole(p1.x), Frac::whole(p1.y)}};
  if (p2 == q1 || p2 == q2)
    return SegHit{SegContact::VertexTouch, FPoint{Frac::whole(p2.x), Frac::whole(p2.y)}};

  if (d1 == 0 && strictly_between(q1, q2, p1))
    return SegHit{SegContact::EndpointOnInterior, FPoint{Frac::whole(p1.x), Frac::whole(p1.y)}};
  if (d2 == 0 && strictly_between(q1, q2, p2))
    return SegHit{SegContact::EndpointOnInterior, FPoint{Frac::whole(p2.x), Frac::whole(p2.y)}};
  if (d3 == 0 && strictly_between(p1, p2, q1))
    return SegHit{SegContact::EndpointOnInterior, FPoint{Frac::whole(q1.x), Frac::whole(q1.y)}};
  if (d4 == 0 && strictly_between(p1, p2, q2))
    return SegHit{SegContact::EndpointOnInterior, FPoint{Frac::whole(q2.x), Frac::whole(q2.y)}};

  if (d1 * d2 < 0 && d3 * d4 < 0) {
    /* p1 + t*dp with t = cross(q1-p1, dq) / cross(dp, dq). */
    i128 den = cross(dp, dq);
    i128 num = cross(q1 - p1, dq);
    Frac x = Frac::make((i128)p1.x * den + num * dp.x, den);
    Frac y = Frac::make((i128)p1.y * den + num * dp.y, den);
    return SegHit{SegContact::ProperCross, FPoint{x, y}};
  }
  return SegHit{SegContact::None, {}};
}

/* Half 0 covers angles in [0, pi), half 1 covers [pi, 2*pi). */
static int dir_half(Pt d) {
  if (d.y > 0 || (d.y == 0 && d.x > 0)) return 0;
  return 1;
}

bool ccw_dir_less(Pt d1, Pt d2) {
  if (d1.x == 0 && d1.y == 0) fail(Err::Precondition, "zero direction");
  if (d2.x == 0 && d2.y == 0) fail(Err::Precondition, "zero direction");
  int h1 = dir_half(d1), h2 = dir_half(d2);
  if (h1 != h2) return h1 < h2;
  i128 c = cross(d1, d2);
  if (c != 0) return c > 0;
  if (dot(d1, d2) < 0) fail(Err::Internal, "opposite directions in one half");
  return dot(d1, d1) < dot(d2, d2);
}

}  // namespace semu
