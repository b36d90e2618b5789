#ifndef LONELY_POLYHEDRON_HPP
#define LONELY_POLYHEDRON_HPP

// The lonely runner polyhedron
//
//   P(n) = { x in R^k : (n_i - k n_j)/(k+1) <= n_j x_i - n_i x_j <= (k n_i - n_j)/(k+1), i < j }
//
// and its low-dimensional pieces. P(n) is invariant along the direction n, so
// the one- and two-dimensional sets used here are the slices obtained by
// pinning the trailing coordinates to zero:
//
//   P_1(n): x_1 with (x_1, 0, ..., 0) in P(n), an interval when n_2 <= k n_k;
//   Q:      (x_1, x_2) with (x_1, x_2, 0, ..., 0) in P(n), a hexagon given by
//           six half-planes when n_3 <= k n_k.
//
// Any integer point of a slice zero-pads to an integer point of P(n).
// Q is handled in half-plane form; vertices are recovered by intersecting
// boundary lines pairwise and keeping the feasible ones.

#include <lonely/exact_arith.hpp>
#include <lonely/model.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

namespace lonely {

struct ClosedRange {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const ClosedRange&, const ClosedRange&) = default;
};

struct Point2 {
  Rational x1;
  Rational x2;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

/// a1 x1 + a2 x2 <= b
struct HalfPlane {
  Rational a1;
  Rational a2;
  Rational b;

  Rational lhs(const Point2& p) const { return a1 * p.x1 + a2 * p.x2; }
  bool holds(const Point2& p) const { return lhs(p) <= b; }
  bool tight(const Point2& p) const { return lhs(p) == b; }
  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

struct QLandmarks {
  Rational alpha; ///< L_1: x_2 one unit above the bottom edge of Q
  Rational beta;  ///< L_2
  Rational gamma; ///< L_3
  Rational delta; ///< L_4: (k-1)/(k+1) above the bottom edge
  Rational zeta;  ///< L_5: (k-1)/(k+1) below the top edge
  Rational kappa; ///< L_6: x_1 one unit right of the left edge
};

struct QGeometry {
  std::array<HalfPlane, 6> halfplanes;
  std::vector<Point2> vertices; ///< counterclockwise, empty when Q is empty
  QLandmarks landmarks;
};

struct LatticePoint2 {
  i64 x1 = 0;
  i64 x2 = 0;
  friend bool operator==(const LatticePoint2&, const LatticePoint2&) = default;
};

namespace detail {

inline i64 runners(const SpeedVector& n) { return static_cast<i64>(n.k()); }

inline void require_k(const SpeedVector& n, std::size_t min_k, const char* what) {
  if (n.k() < min_k)
    throw InvalidInput(std::string(what) + " needs at least " + std::to_string(min_k) + " runners, got " +
                       std::to_string(n.k()));
}

inline Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x1 - o.x1) * (b.x2 - o.x2) - (a.x2 - o.x2) * (b.x1 - o.x1);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Full-dimensional membership

inline bool contains(const SpeedVector& n, std::span<const Rational> x) {
  if (x.size() != n.k())
    throw InvalidInput("point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(n.k()));
  const i64 k = detail::runners(n);
  const Rational kp1(k + 1);
  for (std::size_t i = 0; i < n.k(); ++i) {
    for (std::size_t j = i + 1; j < n.k(); ++j) {
      const Rational mid = Rational(n[j]) * x[i] - Rational(n[i]) * x[j];
      const Rational lo = Rational(n[i] - k * n[j]) / kp1;
      const Rational hi = Rational(k * n[i] - n[j]) / kp1;
      if (mid < lo || mid > hi) return false;
    }
  }
  return true;
}

/// Integer-point membership, scaled by (k+1) so no division is needed.
inline bool contains(const SpeedVector& n, std::span<const i64> x) {
  if (x.size() != n.k())
    throw InvalidInput("point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(n.k()));
  const i128 k = n.k();
  for (std::size_t i = 0; i < n.k(); ++i) {
    for (std::size_t j = i + 1; j < n.k(); ++j) {
      const i128 mid = (k + 1) * (i128(n[j]) * x[i] - i128(n[i]) * x[j]);
      if (mid < n[i] - k * n[j] || mid > k * n[i] - n[j]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// One- and two-dimensional slices

/// [n_1/((k+1)n_k) - k/(k+1), k n_1/((k+1)n_2) - 1/(k+1)]
inline ClosedRange p1_interval(const SpeedVector& n) {
  detail::require_k(n, 2, "p1_interval");
  const i64 k = detail::runners(n);
  const i64 kp1 = k + 1;
  return {Rational(n.fastest(), kp1 * n.slowest()) - Rational(k, kp1),
          Rational(k * n[0], kp1 * n[1]) - Rational(1, kp1)};
}

/// The six generating inequalities of Q in order: x_1 lower/upper,
/// x_2 lower/upper, then the slab n_2 x_1 - n_1 x_2 lower/upper.
inline std::array<HalfPlane, 6> q_halfplanes(const SpeedVector& n) {
  detail::require_k(n, 3, "q_halfplanes");
  const i64 k = detail::runners(n);
  const i64 kp1 = k + 1;
  const i64 n1 = n[0], n2 = n[1], n3 = n[2], nk = n.slowest();
  const Rational x1_lo = Rational(n1, kp1 * nk) - Rational(k, kp1);
  const Rational x1_hi = Rational(k * n1, kp1 * n3) - Rational(1, kp1);
  const Rational x2_lo = Rational(n2, kp1 * nk) - Rational(k, kp1);
  const Rational x2_hi = Rational(k * n2, kp1 * n3) - Rational(1, kp1);
  const Rational slab_lo(n1 - k * n2, kp1);
  const Rational slab_hi(k * n1 - n2, kp1);
  return {{
      {Rational(-1), Rational(0), -x1_lo},
      {Rational(1), Rational(0), x1_hi},
      {Rational(0), Rational(-1), -x2_lo},
      {Rational(0), Rational(1), x2_hi},
      {Rational(-n2), Rational(n1), -slab_lo},
      {Rational(n2), Rational(-n1), slab_hi},
  }};
}

inline QLandmarks q_landmarks(const SpeedVector& n) {
  detail::require_k(n, 3, "q_landmarks");
  const i64 k = detail::runners(n);
  const i64 kp1 = k + 1;
  const i64 n1 = n[0], n2 = n[1], n3 = n[2], nk = n.slowest();
  QLandmarks l;
  l.alpha = Rational(n2, kp1 * nk) + Rational(1, kp1);
  l.beta = Rational(n2, kp1 * nk) + Rational(2 * n2, kp1 * n1) - Rational(k, kp1);
  l.gamma = Rational(k * n2, kp1 * n3) - Rational(2 * n2, kp1 * n1) - Rational(1, kp1);
  l.delta = Rational(1, kp1) * (Rational(n2, nk) - 1);
  l.zeta = Rational(k, kp1) * (Rational(n2, n3) - 1);
  l.kappa = Rational(n1, kp1 * nk) + Rational(1, kp1);
  return l;
}

/// Vertices of the polygon cut out by the half-planes, counterclockwise.
/// Empty when the region is empty or has no vertex (contains a line).
inline std::vector<Point2> polygon_vertices(std::span<const HalfPlane> hs) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const Rational det = hs[i].a1 * hs[j].a2 - hs[i].a2 * hs[j].a1;
      if (det.is_zero()) continue;
      Point2 p{(hs[i].b * hs[j].a2 - hs[i].a2 * hs[j].b) / det, (hs[i].a1 * hs[j].b - hs[i].b * hs[j].a1) / det};
      if (std::all_of(hs.begin(), hs.end(), [&](const HalfPlane& h) { return h.holds(p); })) pts.push_back(p);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  Rational cx, cy;
  for (const auto& p : pts) {
    cx += p.x1;
    cy += p.x2;
  }
  const Point2 c{cx / Rational(static_cast<i64>(pts.size())), cy / Rational(static_cast<i64>(pts.size()))};
  auto upper = [&](const Point2& p) {
    return p.x2 > c.x2 || (p.x2 == c.x2 && p.x1 > c.x1);
  };
  std::sort(pts.begin(), pts.end(), [&](const Point2& a, const Point2& b) {
    const bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    return detail::cross(c, a, b) > Rational(0);
  });
  return pts;
}

inline QGeometry q_geometry(const SpeedVector& n) {
  QGeometry g;
  g.halfplanes = q_halfplanes(n);
  g.vertices = polygon_vertices(g.halfplanes);
  g.landmarks = q_landmarks(n);
  return g;
}

namespace detail {

/// Emptiness test for a half-plane system that may have no vertices.
inline bool region_nonempty(std::span<const HalfPlane> hs, const std::vector<Point2>& vertices) {
  if (!vertices.empty() || hs.empty()) return true;
  // A nonempty region without vertices contains a line, so all normals are
  // parallel; reduce to a one-dimensional feasibility check along that normal.
  const HalfPlane& u = hs.front();
  std::optional<Rational> lower, upper;
  for (const auto& h : hs) {
    if (!(h.a1 * u.a2 - h.a2 * u.a1).is_zero()) return false;
    const Rational lambda = u.a1.is_zero() ? h.a2 / u.a2 : h.a1 / u.a1;
    const Rational bound = h.b / lambda;
    if (lambda > Rational(0)) {
      if (!upper || bound < *upper) upper = bound;
    } else {
      if (!lower || bound > *lower) lower = bound;
    }
  }
  return !lower || !upper || *lower <= *upper;
}

/// True when some recession direction r (every a.r <= 0) has d.r != 0.
inline bool unbounded_along(std::span<const HalfPlane> hs, const Point2& d) {
  if (d.x1.is_zero() && d.x2.is_zero()) return false;
  if (hs.empty()) return true;
  std::vector<Point2> rays;
  for (const auto& h : hs) {
    rays.push_back({-h.a2, h.a1});
    rays.push_back({h.a2, -h.a1});
    rays.push_back({-h.a1, -h.a2});
  }
  for (const auto& r : rays) {
    const bool recedes = std::all_of(hs.begin(), hs.end(), [&](const HalfPlane& h) {
      return h.a1 * r.x1 + h.a2 * r.x2 <= Rational(0);
    });
    if (recedes && !(d.x1 * r.x1 + d.x2 * r.x2).is_zero()) return true;
  }
  return false;
}

} // namespace detail

/// max <d, x> - min <d, x> over the region. Throws on an empty region or when
/// the region is unbounded along d.
inline Rational width(std::span<const HalfPlane> region, const Point2& direction) {
  const auto vs = polygon_vertices(region);
  if (!detail::region_nonempty(region, vs)) throw InvalidInput("width of an empty region");
  if (detail::unbounded_along(region, direction)) throw InvalidInput("region is unbounded in the given direction");
  if (vs.empty()) {
    if (direction.x1.is_zero() && direction.x2.is_zero()) return Rational(0);
    // A strip between parallel lines u.x = lower and u.x = upper, with d = mu u.
    const HalfPlane& u = region.front();
    const Rational mu = u.a1.is_zero() ? direction.x2 / u.a2 : direction.x1 / u.a1;
    std::optional<Rational> lower, upper;
    for (const auto& h : region) {
      const Rational lambda = u.a1.is_zero() ? h.a2 / u.a2 : h.a1 / u.a1;
      const Rational bound = h.b / lambda;
      if (lambda > Rational(0)) {
        if (!upper || bound < *upper) upper = bound;
      } else if (!lower || bound > *lower) {
        lower = bound;
      }
    }
    return abs(mu) * (*upper - *lower);
  }
  Rational lo = direction.x1 * vs[0].x1 + direction.x2 * vs[0].x2;
  Rational hi = lo;
  for (const auto& v : vs) {
    const Rational s = direction.x1 * v.x1 + direction.x2 * v.x2;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo;
}

inline const Point2 e1{Rational(1), Rational(0)};
inline const Point2 e2{Rational(0), Rational(1)};

enum class QRegion { Q, Q1, Q2, Q5 };

/// Q and its horizontal cuts: Q_1 = Q with x_2 <= alpha, Q_2 = Q with
/// x_2 >= alpha, Q_5 = Q with beta <= x_2 <= gamma.
inline std::vector<HalfPlane> q_region(const SpeedVector& n, QRegion which) {
  const auto base = q_halfplanes(n);
  std::vector<HalfPlane> hs(base.begin(), base.end());
  const auto l = q_landmarks(n);
  switch (which) {
  case QRegion::Q:
    break;
  case QRegion::Q1:
    hs.push_back({Rational(0), Rational(1), l.alpha});
    break;
  case QRegion::Q2:
    hs.push_back({Rational(0), Rational(-1), -l.alpha});
    break;
  case QRegion::Q5:
    hs.push_back({Rational(0), Rational(-1), -l.beta});
    hs.push_back({Rational(0), Rational(1), l.gamma});
    break;
  }
  return hs;
}

struct LemmaWidths {
  std::optional<Rational> wQ_e1;
  std::optional<Rational> wQ_e2;
  std::optional<Rational> wQ2_e2; ///< equals w_{Q_3}(e_2), Q_3 being Q_2 shifted down by e_2
  std::optional<Rational> wQ5_e2;
};

/**
 * Closed-form widths of Q, Q_2 and Q_5. Q spans its whole bounding box in the
 * x_2 direction, so each width is a difference of two horizontal levels:
 *
 *   w_Q(e_1)   = n_1/(k+1) (k/n_3 - 1/n_k) + (k-1)/(k+1)
 *   w_Q(e_2)   = n_2/(k+1) (k/n_3 - 1/n_k) + (k-1)/(k+1)
 *   w_Q2(e_2)  = (zeta + (k-1)/(k+1)) - alpha
 *   w_Q5(e_2)  = gamma - beta
 *
 * A width is absent when its region is empty.
 */
inline LemmaWidths lemma_widths(const SpeedVector& n) {
  detail::require_k(n, 3, "lemma_widths");
  LemmaWidths w;
  if (polygon_vertices(q_halfplanes(n)).empty()) return w;

  const i64 k = detail::runners(n);
  const Rational kp1(k + 1);
  const Rational spread = Rational(k, n[2]) - Rational(1, n.slowest());
  const Rational tail = Rational(k - 1) / kp1;
  w.wQ_e1 = Rational(n[0]) / kp1 * spread + tail;
  w.wQ_e2 = Rational(n[1]) / kp1 * spread + tail;

  const auto l = q_landmarks(n);
  const Rational top = l.zeta + tail;
  if (top >= l.alpha) w.wQ2_e2 = top - l.alpha;
  if (l.gamma >= l.beta) w.wQ5_e2 = l.gamma - l.beta;
  return w;
}

/// Smallest integer point of Q in (x_2, x_1) order, scanning one horizontal
/// lattice line at a time.
inline std::optional<LatticePoint2> integer_point_in_Q(const SpeedVector& n) {
  detail::require_k(n, 3, "integer_point_in_Q");
  const i64 k = detail::runners(n);
  const i64 kp1 = k + 1;
  const i64 n1 = n[0], n2 = n[1];
  const auto hs = q_halfplanes(n);
  const Rational x1_lo = -hs[0].b, x1_hi = hs[1].b;
  const Rational x2_lo = -hs[2].b, x2_hi = hs[3].b;
  const Rational slab_lo(n1 - k * n2, kp1), slab_hi(k * n1 - n2, kp1);
  for (i64 y = x2_lo.ceil(); Rational(y) <= x2_hi; ++y) {
    const Rational lo = std::max(x1_lo, (slab_lo + Rational(n1) * Rational(y)) / Rational(n2));
    const Rational hi = std::min(x1_hi, (slab_hi + Rational(n1) * Rational(y)) / Rational(n2));
    if (lo.ceil() <= hi.floor()) return LatticePoint2{lo.ceil(), y};
  }
  return std::nullopt;
}

/// Zero-pads an integer point of the m-coordinate slice (m = p.size()) to an
/// integer point of P(n). Valid when n_{m+1} <= k n_k.
inline std::vector<i64> lift_to_P(const SpeedVector& n, std::span<const i64> p) {
  const std::size_t m = p.size();
  if (m == 0 || m > n.k()) throw InvalidInput("lift_to_P needs 1 <= m <= k coordinates");
  const i64 k = detail::runners(n);
  if (m < n.k() && n[m] > k * n.slowest())
    throw InvalidInput("lift_to_P requires n_{m+1} <= k n_k, violated by " + n.str());
  if (m == 1 && n.k() >= 2 && !p1_interval(n).contains(Rational(p[0])))
    throw InvalidInput("point is not in P_1(n)");
  if (m == 2 && n.k() >= 3) {
    const Point2 q{Rational(p[0]), Rational(p[1])};
    for (const auto& h : q_halfplanes(n))
      if (!h.holds(q)) throw InvalidInput("point is not in Q");
  }
  std::vector<i64> out(p.begin(), p.end());
  out.resize(n.k(), 0);
  if (!contains(n, std::span<const i64>(out))) throw InvalidInput("point does not lift into P(n)");
  return out;
}

inline std::vector<i64> lift_to_P(const SpeedVector& n, const LatticePoint2& p) {
  const std::array<i64, 2> xy{p.x1, p.x2};
  return lift_to_P(n, std::span<const i64>(xy));
}

/// Membership in the translate P(n) + v, evaluated on its own inequality
/// system: every right-hand side shifted by the matching row applied to v.
inline bool translate_contains(const SpeedVector& n, std::span<const i64> v, std::span<const i64> y) {
  const i128 k = n.k();
  for (std::size_t i = 0; i < n.k(); ++i) {
    for (std::size_t j = i + 1; j < n.k(); ++j) {
      const i128 row_y = i128(n[j]) * y[i] - i128(n[i]) * y[j];
      const i128 row_v = i128(n[j]) * v[i] - i128(n[i]) * v[j];
      const i128 lo = n[i] - k * n[j] + (k + 1) * row_v;
      const i128 hi = k * n[i] - n[j] + (k + 1) * row_v;
      if ((k + 1) * row_y < lo || (k + 1) * row_y > hi) return false;
    }
  }
  return true;
}

/**
 * Counts integer points of P(n) in the cube [-box, box]^k and integer points
 * of P(n) + v in the cube shifted by v, and reports whether the counts agree.
 */
inline bool translate_invariance_check(const SpeedVector& n, std::span<const i64> v, i64 box) {
  if (n.k() > 4) throw InvalidInput("translate_invariance_check supports k <= 4");
  if (v.size() != n.k()) throw InvalidInput("translation has the wrong dimension");
  if (box < 0 || box > 8) throw InvalidInput("box bound must lie in [0, 8]");
  const std::size_t k = n.k();
  const i64 side = 2 * box + 1;
  i64 cells = 1;
  for (std::size_t i = 0; i < k; ++i) cells *= side;

  std::vector<i64> x(k), y(k);
  i64 original = 0, translated = 0;
  for (i64 c = 0; c < cells; ++c) {
    i64 rest = c;
    for (std::size_t i = 0; i < k; ++i) {
      x[i] = rest % side - box;
      y[i] = x[i] + v[i];
      rest /= side;
    }
    if (contains(n, std::span<const i64>(x))) ++original;
    if (translate_contains(n, v, y)) ++translated;
  }
  return original == translated;
}

} // namespace lonely

#endif // LONELY_POLYHEDRON_HPP
