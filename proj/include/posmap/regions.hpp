#pragma once
// Exact rational geometry of the parameter regions: complete positivity,
// positivity, k-positivity (with its conjectural split pieces), boundary
// intervals, and convex-weight recovery.

#include "posmap/maps.hpp"
#include "posmap/rational.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace posmap {

struct RationalPoint {
  Rational x, y;
};
[[nodiscard]] inline bool operator==(const RationalPoint& a, const RationalPoint& b) {
  return a.x == b.x && a.y == b.y;
}

// p*x + q*y <= r with primitive integer coefficients; the inequality points
// into the region.
struct HalfPlane {
  Rational p, q, r;
};

enum class RegionKind { CP, Positive, KPos, KPosPlus, KPosMinus };

struct ParamRegion {
  std::string label;
  Family family = Family::Phi;
  int d = 2;
  int k = 1;
  // True when equality of this polygon with the true k-positivity region is
  // not fully proven (first family, 2 <= k <= d-1, k does not divide d and
  // k != d-1; the beta <= 0 piece is always proven).
  bool conjectural = false;
  std::vector<RationalPoint> vertices;  // CCW, starting at the family's origin-side vertex
  std::vector<HalfPlane> halfplanes;    // one per edge, same order as the edges
};

enum class ContainMode { Closed, Strict };

[[nodiscard]] ParamRegion region(Family f, RegionKind kind, int d, int k = 1);

[[nodiscard]] bool contains(const ParamRegion& r, const RationalPoint& pt, ContainMode mode = ContainMode::Closed);

// Closed containment with Euclidean distance >= eps from every boundary
// line, decided exactly via (r - p*x - q*y)^2 >= eps^2 * (p^2 + q^2).
[[nodiscard]] bool contains_with_margin(const ParamRegion& r, const RationalPoint& pt, const Rational& eps);

[[nodiscard]] bool on_boundary(const ParamRegion& r, const RationalPoint& pt);

// The y = 0 slice of KPos(k) as a closed x interval.
[[nodiscard]] std::pair<Rational, Rational> tomiyama_interval(Family f, int d, int k);

// p*x + q*y = r.
struct Line {
  Rational p, q, r;
};

// d=3 reference lines: through {Psi1, Psi2} and through {Psi1, Tk(k=2)}.
[[nodiscard]] std::array<Line, 2> cho_lines_d3();

// Exact convex weights of pt over 2..4 vertices (quadrilaterals split along
// the diagonal from vertex 0).  Throws std::domain_error when pt is outside
// the hull, std::invalid_argument on degenerate vertex lists.
[[nodiscard]] std::vector<Rational> convex_combination(const RationalPoint& pt,
                                                       const std::vector<RationalPoint>& vertices);

}  // namespace posmap
