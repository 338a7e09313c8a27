#include "rmcut/unfold.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>
#include <unordered_map>

namespace rmcut {

namespace {

std::set<std::pair<VertexId, VertexId>> cut_set(const CutTree& t) {
  std::set<std::pair<VertexId, VertexId>> cut;
  for (auto [a, b] : t.edges()) cut.insert(std::minmax(a, b));
  return cut;
}

int slot(const Triangle& t, VertexId v) { return t[0] == v ? 0 : t[1] == v ? 1 : 2; }

/// Third vertex c of a ccw triangle (b, a, c) given the images of b and a.
Point2 place_apex(const Polyhedron& p, VertexId b, VertexId a, VertexId c, Point2 pb, Point2 pa) {
  const Point3 B = p.vertices()[b], A = p.vertices()[a], C = p.vertices()[c];
  const Point3 ba = A - B;
  const double len = norm(ba);
  const double along = dot(C - B, ba) / len;
  const double height = norm(cross(C - B, ba)) / len;
  const Point2 u = normalized(pa - pb);
  return pb + u * along + perp(u) * height;
}

}  // namespace

Unfolding unfold(const Polyhedron& p, const CutTree& t) {
  const auto cut = cut_set(t);
  Unfolding u;
  u.placed.assign(p.face_count(), {});
  u.dual_parent.assign(p.face_count(), std::nullopt);

  FaceId base = t.base_face ? *t.base_face : bottommost_triangle(p);
  u.root_face = base;
  if (t.base) {
    const VertexId a = (*t.base)[0], c = (*t.base)[2];
    if (!cut.count(std::minmax(a, c))) {
      const auto across = p.edges().at(std::minmax(a, c));
      u.root_face = across.left == base ? across.right : across.left;
    }
  }

  // Root in its own plane frame: first vertex at the origin, first edge on +x.
  {
    const Triangle& f = p.faces()[u.root_face];
    const Point3 o = p.vertices()[f[0]];
    const Point3 e1 = normalized(p.vertices()[f[1]] - o);
    const Point3 e2 = cross(p.normal(u.root_face), e1);
    for (int i = 0; i < 3; ++i) {
      const Point3 d = p.vertices()[f[i]] - o;
      u.placed[u.root_face][i] = {dot(d, e1), dot(d, e2)};
    }
  }

  std::vector<char> seen(p.face_count(), 0);
  seen[u.root_face] = 1;
  std::deque<FaceId> queue{u.root_face};
  std::size_t reached = 1;
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop_front();
    const Triangle& tf = p.faces()[f];
    for (int i = 0; i < 3; ++i) {
      const VertexId a = tf[i], b = tf[(i + 1) % 3];
      if (cut.count(std::minmax(a, b))) continue;
      const FaceId g = *p.face_with_edge(b, a);
      if (seen[g]) continue;
      seen[g] = 1;
      ++reached;
      const Triangle& tg = p.faces()[g];
      const int jb = slot(tg, b), ja = slot(tg, a), jc = 3 - jb - ja;
      const Point2 pa = u.placed[f][i], pb = u.placed[f][(i + 1) % 3];
      u.placed[g][ja] = pa;
      u.placed[g][jb] = pb;
      u.placed[g][jc] = place_apex(p, b, a, tg[jc], pb, pa);
      u.dual_parent[g] = f;
      queue.push_back(g);
    }
  }
  if (reached != p.face_count()) throw DisconnectedDual("unfold: cut edges disconnect the faces");
  return u;
}

bool triangles_overlap(const std::array<Point2, 3>& a, const std::array<Point2, 3>& b,
                       const Tolerance& tol) {
  auto separated_along = [&](Point2 axis) {
    const double len = norm(axis);
    if (len == 0.0) return false;
    axis = axis / len;
    double amin = dot(a[0], axis), amax = amin, bmin = dot(b[0], axis), bmax = bmin;
    for (int i = 1; i < 3; ++i) {
      amin = std::min(amin, dot(a[i], axis));
      amax = std::max(amax, dot(a[i], axis));
      bmin = std::min(bmin, dot(b[i], axis));
      bmax = std::max(bmax, dot(b[i], axis));
    }
    return amax <= bmin + tol.eps_len || bmax <= amin + tol.eps_len;
  };
  for (const auto* t : {&a, &b})
    for (int i = 0; i < 3; ++i)
      if (separated_along(perp((*t)[(i + 1) % 3] - (*t)[i]))) return false;
  return true;
}

namespace {

struct Box {
  Point2 lo, hi;
};

Box bounds(const std::array<Point2, 3>& t) {
  Box b{t[0], t[0]};
  for (const Point2& q : t) {
    b.lo = {std::min(b.lo.x, q.x), std::min(b.lo.y, q.y)};
    b.hi = {std::max(b.hi.x, q.x), std::max(b.hi.y, q.y)};
  }
  return b;
}

}  // namespace

std::vector<FacePair> detect_overlap_all_pairs(const Unfolding& u, const Tolerance& tol) {
  std::vector<FacePair> out;
  for (FaceId i = 0; i < u.placed.size(); ++i)
    for (FaceId j = i + 1; j < u.placed.size(); ++j)
      if (triangles_overlap(u.placed[i], u.placed[j], tol)) out.emplace_back(i, j);
  return out;
}

std::vector<FacePair> detect_overlap(const Unfolding& u, const Tolerance& tol) {
  const std::size_t n = u.placed.size();
  if (n < 2) return {};
  std::vector<Box> boxes;
  boxes.reserve(n);
  Box all = bounds(u.placed[0]);
  double size = 0.0;
  for (const auto& t : u.placed) {
    boxes.push_back(bounds(t));
    const Box& b = boxes.back();
    all.lo = {std::min(all.lo.x, b.lo.x), std::min(all.lo.y, b.lo.y)};
    all.hi = {std::max(all.hi.x, b.hi.x), std::max(all.hi.y, b.hi.y)};
    size += std::max(b.hi.x - b.lo.x, b.hi.y - b.lo.y);
  }
  const double cell = std::max(size / static_cast<double>(n), 1e-9);
  auto cell_of = [&](double v, double lo) { return static_cast<long>(std::floor((v - lo) / cell)); };

  std::unordered_map<long long, std::vector<FaceId>> grid;
  const long long stride = 1 << 20;
  for (FaceId f = 0; f < n; ++f) {
    const Box& b = boxes[f];
    for (long x = cell_of(b.lo.x, all.lo.x); x <= cell_of(b.hi.x, all.lo.x); ++x)
      for (long y = cell_of(b.lo.y, all.lo.y); y <= cell_of(b.hi.y, all.lo.y); ++y)
        grid[x * stride + y].push_back(f);
  }
  std::vector<FacePair> candidates;
  for (const auto& [key, faces] : grid)
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (std::size_t j = i + 1; j < faces.size(); ++j)
        candidates.emplace_back(std::min(faces[i], faces[j]), std::max(faces[i], faces[j]));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<FacePair> out;
  for (auto [i, j] : candidates)
    if (triangles_overlap(u.placed[i], u.placed[j], tol)) out.emplace_back(i, j);
  return out;
}

UnfoldResiduals unfold_residuals(const Polyhedron& p, const CutTree& t, const Unfolding& u) {
  UnfoldResiduals r;
  for (FaceId f = 0; f < p.face_count(); ++f) {
    const Triangle& tf = p.faces()[f];
    for (int i = 0; i < 3; ++i) {
      const double l3 = dist(p.vertices()[tf[i]], p.vertices()[tf[(i + 1) % 3]]);
      const double l2 = dist(u.placed[f][i], u.placed[f][(i + 1) % 3]);
      r.max_length_error = std::max(r.max_length_error, std::abs(l2 - l3) / l3);
    }
  }
  const auto cut = cut_set(t);
  for (const auto& [e, faces] : p.edges()) {
    if (cut.count(e)) continue;
    const Triangle& tl = p.faces()[faces.left];
    const Triangle& tr = p.faces()[faces.right];
    for (VertexId v : {e.first, e.second})
      r.max_seam_error = std::max(
          r.max_seam_error, dist(u.placed[faces.left][slot(tl, v)], u.placed[faces.right][slot(tr, v)]));
  }
  return r;
}

std::vector<double> placed_angle_sums(const Polyhedron& p, const Unfolding& u) {
  std::vector<double> sum(p.vertex_count(), 0.0);
  for (FaceId f = 0; f < p.face_count(); ++f)
    for (int i = 0; i < 3; ++i) {
      const Point2 v = u.placed[f][i];
      sum[p.faces()[f][i]] += angle_between(u.placed[f][(i + 1) % 3] - v, u.placed[f][(i + 2) % 3] - v);
    }
  return sum;
}

std::string render_svg(const Polyhedron& p, const Unfolding& u, const CutTree& t,
                       const std::vector<FacePair>& overlaps, const SvgStyle& style) {
  Box all = bounds(u.placed.at(0));
  for (const auto& tri : u.placed) {
    const Box b = bounds(tri);
    all.lo = {std::min(all.lo.x, b.lo.x), std::min(all.lo.y, b.lo.y)};
    all.hi = {std::max(all.hi.x, b.hi.x), std::max(all.hi.y, b.hi.y)};
  }
  const double span = std::max({all.hi.x - all.lo.x, all.hi.y - all.lo.y, 1e-12});
  const double scale = (style.width - 2 * style.margin) / span;
  const double height = (all.hi.y - all.lo.y) * scale + 2 * style.margin;
  // SVG y grows downward.
  auto X = [&](Point2 q) { return style.margin + (q.x - all.lo.x) * scale; };
  auto Y = [&](Point2 q) { return style.margin + (all.hi.y - q.y) * scale; };

  std::vector<char> flagged(p.face_count(), 0);
  for (auto [a, b] : overlaps) flagged[a] = flagged[b] = 1;
  const auto cut = cut_set(t);

  std::string svg;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.2f\" height=\"%.2f\" "
                "viewBox=\"0 0 %.2f %.2f\">\n",
                style.width, height, style.width, height);
  svg += buf;
  svg += "<style>.face{fill:" + style.face_fill + ";stroke:none}.overlap{fill:" + style.overlap_fill +
         ";fill-opacity:0.7}.cut{stroke:" + style.cut_stroke + ";stroke-width:1.5}.seam{stroke:" +
         style.seam_stroke + ";stroke-width:0.5}</style>\n";
  for (FaceId f = 0; f < p.face_count(); ++f) {
    const auto& tri = u.placed[f];
    std::snprintf(buf, sizeof buf,
                  "<polygon class=\"face%s\" data-face=\"%u\" points=\"%.4f,%.4f %.4f,%.4f %.4f,%.4f\"/>\n",
                  flagged[f] ? " overlap" : "", f, X(tri[0]), Y(tri[0]), X(tri[1]), Y(tri[1]), X(tri[2]),
                  Y(tri[2]));
    svg += buf;
  }
  for (FaceId f = 0; f < p.face_count(); ++f) {
    const Triangle& tf = p.faces()[f];
    for (int i = 0; i < 3; ++i) {
      const VertexId a = tf[i], b = tf[(i + 1) % 3];
      const bool is_cut = cut.count(std::minmax(a, b)) > 0;
      // Seams are shared by two faces at the same place; draw from one side.
      if (!is_cut && a > b) continue;
      const Point2 pa = u.placed[f][i], pb = u.placed[f][(i + 1) % 3];
      std::snprintf(buf, sizeof buf, "<line class=\"%s\" x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\"/>\n",
                    is_cut ? "cut" : "seam", X(pa), Y(pa), X(pb), Y(pb));
      svg += buf;
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace rmcut
