#include "posmap/regions.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace posmap {

namespace {

Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Exact convex hull (monotone chain), CCW, extreme vertices only.
std::vector<RationalPoint> convex_hull(std::vector<RationalPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RationalPoint& a, const RationalPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  std::vector<RationalPoint> hull(2 * n);
  int h = 0;
  for (int i = 0; i < n; ++i) {  // lower chain
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  for (int i = n - 2, lower = h + 1; i >= 0; --i) {  // upper chain
    while (h >= lower && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);
  return hull;
}

// Primitive-integer halfplane with the interior on the left of edge v -> w.
HalfPlane edge_halfplane(const RationalPoint& v, const RationalPoint& w) {
  Rational p = w.y - v.y, q = v.x - w.x;
  Rational r = p * v.x + q * v.y;
  mpz_class lcm = 1;
  mpz_lcm(lcm.get_mpz_t(), p.get_den().get_mpz_t(), q.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den().get_mpz_t());
  mpz_class ip = p.get_num() * (lcm / p.get_den());
  mpz_class iq = q.get_num() * (lcm / q.get_den());
  mpz_class ir = r.get_num() * (lcm / r.get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ip.get_mpz_t(), iq.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ir.get_mpz_t());
  if (g == 0) throw std::invalid_argument("edge_halfplane: degenerate edge");
  return HalfPlane{Rational(ip / g), Rational(iq / g), Rational(ir / g)};
}

const char* kind_name(RegionKind k) {
  switch (k) {
    case RegionKind::CP:
      return "cp";
    case RegionKind::Positive:
      return "positive";
    case RegionKind::KPos:
      return "kpos";
    case RegionKind::KPosPlus:
      return "kpos_plus";
    case RegionKind::KPosMinus:
      return "kpos_minus";
  }
  return "?";
}

std::optional<std::array<Rational, 3>> try_barycentric(const RationalPoint& pt, const RationalPoint& v0,
                                                       const RationalPoint& v1, const RationalPoint& v2) {
  const Rational det = cross(v0, v1, v2);
  if (det == 0) throw std::invalid_argument("convex_combination: degenerate triangle");
  Rational w1 = cross(v0, pt, v2) / det;
  Rational w2 = cross(v0, v1, pt) / det;
  Rational w0 = 1 - w1 - w2;
  if (w0 < 0 || w1 < 0 || w2 < 0) return std::nullopt;
  return std::array<Rational, 3>{w0, w1, w2};
}

}  // namespace

ParamRegion region(Family f, RegionKind kind, int d, int k) {
  if (d < 2) throw std::invalid_argument("region: dimension must be >= 2");
  const bool kpos_kind = kind == RegionKind::KPos || kind == RegionKind::KPosPlus || kind == RegionKind::KPosMinus;
  if (kpos_kind && (k < 1 || k > d)) throw std::invalid_argument("region: k must satisfy 1 <= k <= d");

  auto pt = [&](NamedMap n, int kk = 1) {
    auto [x, y] = named_point(n, d, kk);
    return RationalPoint{x, y};
  };

  std::vector<RationalPoint> cand;
  bool conjectural = false;
  int stored_k = kpos_kind ? k : (kind == RegionKind::CP ? d : 1);
  if (f == Family::Phi) {
    switch (kind) {
      case RegionKind::CP:
        cand = {pt(NamedMap::Psi0), pt(NamedMap::Psi1), pt(NamedMap::Psi2)};
        break;
      case RegionKind::Positive:
        cand = {pt(NamedMap::Psi0), pt(NamedMap::P), pt(NamedMap::T1), pt(NamedMap::Psi1)};
        break;
      case RegionKind::KPos:
        if (k == 1)
          cand = {pt(NamedMap::Psi0), pt(NamedMap::P), pt(NamedMap::T1), pt(NamedMap::Psi1)};
        else
          cand = {pt(NamedMap::Psi0), pt(NamedMap::Psi1), pt(NamedMap::Psi2), pt(NamedMap::Tk, k)};
        break;
      case RegionKind::KPosPlus:
        cand = {pt(NamedMap::Psi0), pt(NamedMap::Psi1), pt(NamedMap::Tk, k)};
        break;
      case RegionKind::KPosMinus:
        cand = {pt(NamedMap::Psi0), pt(NamedMap::Psi2), pt(NamedMap::Tk, k)};
        break;
    }
    const bool unproven_k = k >= 2 && k <= d - 1 && d % k != 0 && k != d - 1;
    if ((kind == RegionKind::KPos || kind == RegionKind::KPosPlus) && unproven_k) conjectural = true;
  } else {
    switch (kind) {
      case RegionKind::CP:
        cand = {pt(NamedMap::TildePsi0), pt(NamedMap::TildePsi1), pt(NamedMap::TildePsi2)};
        break;
      case RegionKind::Positive:
        cand = {pt(NamedMap::TildeT1), pt(NamedMap::TildePsi1), pt(NamedMap::TildePsi0), pt(NamedMap::TildeP)};
        break;
      case RegionKind::KPos:
        if (k == 1)
          cand = {pt(NamedMap::TildeT1), pt(NamedMap::TildePsi1), pt(NamedMap::TildePsi0), pt(NamedMap::TildeP)};
        else
          cand = {pt(NamedMap::TildePsi0), pt(NamedMap::TildePsi1), pt(NamedMap::TildePsi2)};
        break;
      case RegionKind::KPosPlus:
      case RegionKind::KPosMinus:
        throw std::invalid_argument("region: the conjecture split pieces exist only for the first family");
    }
  }

  ParamRegion out;
  out.family = f;
  out.d = d;
  out.k = stored_k;
  out.conjectural = conjectural;
  out.vertices = convex_hull(cand);
  if (out.vertices.size() < 3) throw std::logic_error("region: degenerate polygon");
  // Canonical start: the first candidate always survives the hull.
  auto it = std::find(out.vertices.begin(), out.vertices.end(), cand.front());
  if (it == out.vertices.end()) throw std::logic_error("region: start vertex eliminated");
  std::rotate(out.vertices.begin(), it, out.vertices.end());
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    out.halfplanes.push_back(edge_halfplane(out.vertices[i], out.vertices[(i + 1) % out.vertices.size()]));
  out.label = std::string(f == Family::Phi ? "phi" : "lambda") + "/" + kind_name(kind) + "/d=" + std::to_string(d) +
              (kpos_kind ? "/k=" + std::to_string(k) : "");
  return out;
}

bool contains(const ParamRegion& r, const RationalPoint& pt, ContainMode mode) {
  for (const auto& h : r.halfplanes) {
    const Rational lhs = h.p * pt.x + h.q * pt.y;
    if (mode == ContainMode::Closed ? lhs > h.r : lhs >= h.r) return false;
  }
  return true;
}

bool contains_with_margin(const ParamRegion& r, const RationalPoint& pt, const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("contains_with_margin: eps must be nonnegative");
  for (const auto& h : r.halfplanes) {
    const Rational gap = h.r - h.p * pt.x - h.q * pt.y;
    if (gap < 0) return false;
    if (gap * gap < eps * eps * (h.p * h.p + h.q * h.q)) return false;
  }
  return true;
}

bool on_boundary(const ParamRegion& r, const RationalPoint& pt) {
  if (!contains(r, pt, ContainMode::Closed)) return false;
  for (const auto& h : r.halfplanes)
    if (h.p * pt.x + h.q * pt.y == h.r) return true;
  return false;
}

std::pair<Rational, Rational> tomiyama_interval(Family f, int d, int k) {
  if (d < 2) throw std::invalid_argument("tomiyama_interval: dimension must be >= 2");
  if (k < 1 || k > d) throw std::invalid_argument("tomiyama_interval: k must satisfy 1 <= k <= d");
  if (f == Family::Phi) return {0, rat(k * d, k * d - 1)};
  if (k == 1) return {0, rat(d, d - 1)};
  return {rat(d, d + 1), rat(d, d - 1)};
}

std::array<Line, 2> cho_lines_d3() { return {Line{8, 6, 9}, Line{5, 4, 6}}; }

std::vector<Rational> convex_combination(const RationalPoint& pt, const std::vector<RationalPoint>& vertices) {
  switch (vertices.size()) {
    case 2: {
      const auto &v0 = vertices[0], &v1 = vertices[1];
      Rational t;
      if (v0.x != v1.x)
        t = (pt.x - v0.x) / (v1.x - v0.x);
      else if (v0.y != v1.y)
        t = (pt.y - v0.y) / (v1.y - v0.y);
      else
        throw std::invalid_argument("convex_combination: coincident segment endpoints");
      if (t < 0 || t > 1) throw std::domain_error("convex_combination: point outside segment");
      if (pt.x != (1 - t) * v0.x + t * v1.x || pt.y != (1 - t) * v0.y + t * v1.y)
        throw std::domain_error("convex_combination: point off the segment line");
      return {1 - t, t};
    }
    case 3: {
      auto w = try_barycentric(pt, vertices[0], vertices[1], vertices[2]);
      if (!w) throw std::domain_error("convex_combination: point outside triangle");
      return {(*w)[0], (*w)[1], (*w)[2]};
    }
    case 4: {
      if (auto w = try_barycentric(pt, vertices[0], vertices[1], vertices[2]))
        return {(*w)[0], (*w)[1], (*w)[2], 0};
      if (auto w = try_barycentric(pt, vertices[0], vertices[2], vertices[3]))
        return {(*w)[0], 0, (*w)[1], (*w)[2]};
      throw std::domain_error("convex_combination: point outside quadrilateral");
    }
    default:
      throw std::invalid_argument("convex_combination: need 2 to 4 vertices");
  }
}

}  // namespace posmap
