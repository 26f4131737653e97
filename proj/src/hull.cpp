#include "logmink/hull.hpp"

#include "logmink/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <utility>

namespace logmink {
namespace {

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double planar_dist(const Vec& a, const Vec& b) {
  return std::hypot(a.x() - b.x(), a.y() - b.y());
}

class GiftWrap {
 public:
  GiftWrap(std::span<const Vec> points, double rel_tol) : pts_(points) {
    Vec c = Vec::Zero();
    for (const Vec& p : pts_) c += p;
    c /= static_cast<double>(pts_.size());
    double scale = 0.0;
    for (const Vec& p : pts_) scale = std::max(scale, (p - c).norm());
    if (!(scale > 0.0)) {
      throw GeometryError(ErrorCode::kDegenerateShape, "hull of coincident points");
    }
    tol_ = rel_tol * scale;
    const double merge = 1e-12 * scale;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      const bool dup = std::any_of(uniq_.begin(), uniq_.end(), [&](std::size_t j) {
        return (pts_[i] - pts_[j]).norm() <= merge;
      });
      if (!dup) uniq_.push_back(i);
    }
    if (uniq_.size() < 4) {
      throw GeometryError(ErrorCode::kDegenerateShape, "fewer than 4 distinct points");
    }
  }

  Hull3 run() {
    add_facet(initial_facet());
    while (!queue_.empty()) {
      const std::size_t id = queue_.front();
      queue_.pop_front();
      const std::vector<std::size_t> ring = facets_[id].vertices;
      for (std::size_t k = 0; k < ring.size(); ++k) {
        const std::size_t u = ring[k];
        const std::size_t v = ring[(k + 1) % ring.size()];
        if (edge_owner_.count({v, u})) continue;
        const std::size_t nb = add_facet(pivot(v, u));
        // A tolerance mismatch can leave the reverse edge unclaimed; pin it
        // so the edge is not wrapped again.
        edge_owner_.emplace(std::make_pair(v, u), nb);
      }
      if (facets_.size() > 4 * uniq_.size() + 16) {
        throw GeometryError(ErrorCode::kDegenerateShape, "hull failed to close");
      }
    }
    Hull3 out;
    out.facets = std::move(facets_);
    for (const HullFacet& f : out.facets) {
      out.vertices.insert(out.vertices.end(), f.vertices.begin(), f.vertices.end());
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                       out.vertices.end());
    return out;
  }

 private:
  // Supporting facet through the first edge of the xy-projected hull.
  HullFacet initial_facet() {
    std::vector<Vec> flat;
    flat.reserve(uniq_.size());
    for (std::size_t i : uniq_) flat.push_back(Vec(pts_[i].x(), pts_[i].y(), 0.0));
    const std::vector<std::size_t> ring = hull_2d(flat, tol_);
    if (ring.size() < 3) {
      throw GeometryError(ErrorCode::kDegenerateShape, "points lie in a vertical plane");
    }
    const Vec& a = flat[ring[0]];
    const Vec& b = flat[ring[1]];
    const Vec normal = Vec(b.y() - a.y(), a.x() - b.x(), 0.0).normalized();
    const double offset = normal.dot(pts_[uniq_[ring[0]]]);
    if (auto f = facet_on_plane(normal, offset)) return *f;
    // The vertical supporting plane touches an edge only; pivot about it.
    std::vector<std::size_t> on = on_plane(normal, offset);
    const Vec dir = (pts_[on.back()] - pts_[on.front()]).normalized();
    auto [lo, hi] = std::minmax_element(on.begin(), on.end(), [&](std::size_t i, std::size_t j) {
      return pts_[i].dot(dir) < pts_[j].dot(dir);
    });
    return pivot(*lo, *hi);
  }

  std::vector<std::size_t> on_plane(const Vec& normal, double offset) const {
    std::vector<std::size_t> on;
    for (std::size_t i : uniq_) {
      if (std::abs(normal.dot(pts_[i]) - offset) <= tol_) on.push_back(i);
    }
    return on;
  }

  // Facet polygon of a supporting plane, or nullopt if the contact set is
  // lower dimensional.
  std::optional<HullFacet> facet_on_plane(const Vec& normal, double offset) const {
    const std::vector<std::size_t> on = on_plane(normal, offset);
    if (on.size() < 3) return std::nullopt;
    Vec e1 = pts_[on[1]] - pts_[on[0]];
    for (std::size_t i : on) {
      const Vec d = pts_[i] - pts_[on[0]];
      if (d.norm() > e1.norm()) e1 = d;
    }
    e1 = (e1 - e1.dot(normal) * normal).normalized();
    const Vec e2 = normal.cross(e1);
    std::vector<Vec> local;
    local.reserve(on.size());
    for (std::size_t i : on) local.push_back(Vec(pts_[i].dot(e1), pts_[i].dot(e2), 0.0));
    const std::vector<std::size_t> ring = hull_2d(local, tol_);
    if (ring.size() < 3) return std::nullopt;
    HullFacet f;
    f.normal = normal;
    f.offset = offset;
    f.vertices.reserve(ring.size());
    for (std::size_t k : ring) f.vertices.push_back(on[k]);
    return f;
  }

  // Facet containing the directed edge a -> b with every point on its inner
  // side. The plane normal is (b - a) x (c - a) for the wrapping point c.
  HullFacet pivot(std::size_t a, std::size_t b) const {
    const Vec& pa = pts_[a];
    const Vec e = pts_[b] - pa;
    const double elen = e.norm();
    std::optional<std::size_t> cand;
    for (std::size_t i : uniq_) {
      const Vec d = pts_[i] - pa;
      if (e.cross(d).norm() <= tol_ * elen) continue;
      if (!cand || e.cross(pts_[*cand] - pa).dot(d) > 0.0) cand = i;
    }
    if (!cand) {
      throw GeometryError(ErrorCode::kDegenerateShape, "all points collinear");
    }
    // Rotate about the edge towards the worst violator until the plane
    // supports every point.
    for (std::size_t step = 0; step <= uniq_.size(); ++step) {
      const Vec n = e.cross(pts_[*cand] - pa).normalized();
      double worst = tol_;
      std::optional<std::size_t> next;
      for (std::size_t i : uniq_) {
        const double d = n.dot(pts_[i] - pa);
        if (d > worst) {
          worst = d;
          next = i;
        }
      }
      if (!next) break;
      cand = next;
    }
    Vec normal = e.cross(pts_[*cand] - pa).normalized();
    // Re-derive the plane from the coplanar point farthest from the edge.
    double far = 0.0;
    std::size_t far_i = *cand;
    for (std::size_t i : on_plane(normal, normal.dot(pa))) {
      const double d = e.cross(pts_[i] - pa).norm();
      if (d > far) {
        far = d;
        far_i = i;
      }
    }
    normal = e.cross(pts_[far_i] - pa).normalized();
    double offset = normal.dot(pa);
    for (std::size_t i : uniq_) offset = std::max(offset, normal.dot(pts_[i]));
    if (auto f = facet_on_plane(normal, offset)) return *f;
    throw GeometryError(ErrorCode::kDegenerateShape, "point set is flat");
  }

  std::size_t add_facet(HullFacet f) {
    for (std::size_t id = 0; id < facets_.size(); ++id) {
      const HullFacet& g = facets_[id];
      if ((g.normal - f.normal).lpNorm<Eigen::Infinity>() <= 1e-8 &&
          std::abs(g.offset - f.offset) <= tol_) {
        return id;
      }
    }
    const std::size_t id = facets_.size();
    for (std::size_t k = 0; k < f.vertices.size(); ++k) {
      edge_owner_.emplace(std::make_pair(f.vertices[k], f.vertices[(k + 1) % f.vertices.size()]), id);
    }
    facets_.push_back(std::move(f));
    queue_.push_back(id);
    return id;
  }

  std::span<const Vec> pts_;
  double tol_ = 0.0;
  std::vector<std::size_t> uniq_;
  std::vector<HullFacet> facets_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_owner_;
  std::deque<std::size_t> queue_;
};

}  // namespace

std::vector<std::size_t> hull_2d(std::span<const Vec> points, double tol) {
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    const Vec& a = points[i];
    const Vec& b = points[j];
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return i < j;
  });
  if (idx.size() < 2) return idx;

  // Exact orientation signs first; tolerance-based pruning on the closed ring
  // afterwards, where it cannot discard a corner.
  std::vector<std::size_t> chain(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && cross2(points[chain[k - 2]], points[chain[k - 1]], points[i]) <= 0.0) --k;
    chain[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (std::size_t r = idx.size() - 1; r-- > 0;) {
    const std::size_t i = idx[r];
    while (k >= lower && cross2(points[chain[k - 2]], points[chain[k - 1]], points[i]) <= 0.0) --k;
    chain[k++] = i;
  }
  chain.resize(k - 1);

  auto flat_vertex = [&]() -> std::optional<std::size_t> {
    const std::size_t m = chain.size();
    for (std::size_t j = 0; j < m; ++j) {
      const Vec& p = points[chain[(j + m - 1) % m]];
      const Vec& q = points[chain[(j + 1) % m]];
      if (cross2(p, points[chain[j]], q) <= tol * planar_dist(p, q)) return j;
    }
    return std::nullopt;
  };
  while (chain.size() > 2) {
    const auto j = flat_vertex();
    if (!j) break;
    chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(*j));
  }
  // Collapse a degenerate (single point) chain.
  if (chain.size() == 2 && planar_dist(points[chain[0]], points[chain[1]]) <= tol) {
    chain.resize(1);
  }
  return chain;
}

Hull3 hull_3d(std::span<const Vec> points, double rel_tol) {
  if (points.size() < 4) {
    throw GeometryError(ErrorCode::kDegenerateShape, "fewer than 4 points");
  }
  return GiftWrap(points, rel_tol).run();
}

}  // namespace logmink
