/*
 * Copyright 2026 The polybeam authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polybeam::geometry {

namespace {

bool is_finite(Complex p) {
  return std::isfinite(p.real()) && std::isfinite(p.imag());
}

void require_finite(std::span<const Complex> points) {
  for (Complex p : points) {
    if (!is_finite(p)) throw Error(ErrorKind::invalid_argument, "non-finite input");
  }
}

// Cross product of (a - o) and (b - o): positive for a strict left turn.
double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

// Lexicographic (im, re) order; the canonical start is the minimum.
bool start_less(Complex a, Complex b) {
  if (a.imag() != b.imag()) return a.imag() < b.imag();
  return a.real() < b.real();
}

void rotate_to_canonical_start(ConvexPolygon& poly) {
  std::size_t start = 0;
  for (std::size_t i = 1; i < poly.vertices.size(); ++i) {
    if (start_less(poly.vertices[i], poly.vertices[start])) start = i;
  }
  std::rotate(poly.vertices.begin(), poly.vertices.begin() + start, poly.vertices.end());
  if (poly.provenance.size() == poly.vertices.size()) {
    std::rotate(poly.provenance.begin(), poly.provenance.begin() + start,
                poly.provenance.end());
  }
}

struct IndexedPoint {
  Complex p;
  std::int32_t index;
};

}  // namespace

double angle_of(Complex v) {
  double a = std::atan2(v.imag(), v.real());
  if (a < 0.0) a += kTwoPi;
  // atan2 output just below zero can land exactly on 2*pi after the shift;
  // keep the result inside [0, 2*pi) without reordering it before ~0 edges.
  if (a >= kTwoPi) a = std::nextafter(kTwoPi, 0.0);
  return a;
}

ConvexPolygon convex_hull(std::span<const Complex> points) {
  if (points.empty()) throw Error(ErrorKind::invalid_argument, "empty point set");
  require_finite(points);

  std::vector<IndexedPoint> pts;
  pts.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    pts.push_back({points[i], static_cast<std::int32_t>(i)});
  }
  std::sort(pts.begin(), pts.end(), [](const IndexedPoint& a, const IndexedPoint& b) {
    if (a.p.real() != b.p.real()) return a.p.real() < b.p.real();
    if (a.p.imag() != b.p.imag()) return a.p.imag() < b.p.imag();
    return a.index < b.index;
  });
  // Exact duplicates collapse onto the smallest input index.
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const IndexedPoint& a, const IndexedPoint& b) {
                          return a.p == b.p;
                        }),
            pts.end());

  ConvexPolygon out;
  if (pts.size() == 1) {
    out.vertices = {pts[0].p};
    out.provenance = {pts[0].index};
    return out;
  }

  // Monotone chain with strict turns only, so collinear and interior points
  // are dropped and the result is strictly convex.
  const std::size_t n = pts.size();
  std::vector<IndexedPoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2].p, hull[k - 1].p, pts[i].p) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2].p, hull[k - 1].p, pts[i].p) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first

  out.vertices.reserve(hull.size());
  out.provenance.reserve(hull.size());
  for (const IndexedPoint& ip : hull) {
    out.vertices.push_back(ip.p);
    out.provenance.push_back(ip.index);
  }
  rotate_to_canonical_start(out);
  return out;
}

ConvexPolygon canonicalize(std::span<const Complex> vertices) {
  // The input already traces a convex polygon, so its hull is the same
  // point set minus duplicates and collinear vertices.
  return convex_hull(vertices);
}

ConvexPolygon scale(const ConvexPolygon& polygon, Complex factor) {
  if (!is_finite(factor)) throw Error(ErrorKind::invalid_argument, "non-finite input");
  if (factor == Complex{0.0, 0.0}) {
    return ConvexPolygon{{Complex{0.0, 0.0}}, {0}};
  }
  ConvexPolygon out;
  out.vertices.reserve(polygon.vertices.size());
  for (Complex v : polygon.vertices) out.vertices.push_back(v * factor);
  out.provenance = polygon.provenance;
  // Complex multiplication preserves orientation and strict convexity; only
  // the start vertex has to be recomputed.
  rotate_to_canonical_start(out);
  return out;
}

std::vector<EdgeRecord> edge_angles(const ConvexPolygon& polygon, std::int32_t source) {
  std::vector<EdgeRecord> edges;
  const std::size_t m = polygon.vertices.size();
  if (m < 2) return edges;  // a point has no edges
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Complex v = polygon.vertices[(i + 1) % m] - polygon.vertices[i];
    edges.push_back({angle_of(v), source, static_cast<std::int32_t>(i), v});
  }
  return edges;
}

SumWalk minkowski_walk(std::span<const ConvexPolygon> polygons) {
  if (polygons.empty()) throw Error(ErrorKind::invalid_argument, "empty polygon list");

  SumWalk walk;
  walk.summand_count = polygons.size();

  Complex start{0.0, 0.0};
  std::size_t edge_count = 0;
  for (const ConvexPolygon& poly : polygons) {
    if (poly.vertices.empty()) {
      throw Error(ErrorKind::invalid_argument, "empty polygon");
    }
    start += poly.vertices[0];
    if (poly.vertices.size() >= 2) edge_count += poly.vertices.size();
  }

  walk.steps.reserve(edge_count);
  for (std::size_t n = 0; n < polygons.size(); ++n) {
    for (EdgeRecord e : edge_angles(polygons[n], static_cast<std::int32_t>(n))) {
      walk.steps.push_back(e);
    }
  }
  std::sort(walk.steps.begin(), walk.steps.end(),
            [](const EdgeRecord& a, const EdgeRecord& b) {
              if (a.angle != b.angle) return a.angle < b.angle;
              if (a.source != b.source) return a.source < b.source;
              return a.edge_index < b.edge_index;
            });

  // Start vertex: summing the per-polygon canonical starts minimizes
  // (im, re) lexicographically over the whole sum.
  walk.vertices.push_back(start);
  walk.group_offset.push_back(0);
  if (walk.steps.empty()) return walk;  // every summand is a point

  Complex cursor = start;
  std::size_t i = 0;
  while (i < walk.steps.size()) {
    const double base = walk.steps[i].angle;
    Complex delta{0.0, 0.0};
    std::size_t j = i;
    while (j < walk.steps.size() && walk.steps[j].angle - base <= kAngleTolerance) {
      delta += walk.steps[j].vector;
      ++j;
    }
    walk.group_offset.push_back(j);
    if (j < walk.steps.size()) {  // the last group closes the ring
      cursor += delta;
      walk.vertices.push_back(cursor);
    }
    i = j;
  }
  return walk;
}

std::vector<std::int32_t> walk_tuple(const SumWalk& walk,
                                     std::span<const ConvexPolygon> polygons,
                                     std::size_t k) {
  std::vector<std::int32_t> tuple(polygons.size(), 0);
  // Vertex k sits after the steps of groups 0..k-1. Each edge (n, m) moves
  // polygon n from vertex m to vertex m+1 (cyclically), so applying a step
  // sets the tuple entry directly; out-of-order ties stay consistent.
  const std::size_t end = walk.group_offset[k];
  for (std::size_t s = 0; s < end; ++s) {
    const EdgeRecord& e = walk.steps[s];
    const auto m = static_cast<std::size_t>(e.edge_index) + 1;
    tuple[static_cast<std::size_t>(e.source)] =
        m == polygons[e.source].vertices.size() ? 0 : static_cast<std::int32_t>(m);
  }
  return tuple;
}

MinkowskiSum minkowski_sum(std::span<const ConvexPolygon> polygons) {
  SumWalk walk = minkowski_walk(polygons);
  const std::size_t k_out = walk.vertices.size();
  const std::size_t n = polygons.size();
  if (k_out * n > 100'000'000) {
    throw Error(ErrorKind::cap_exceeded, "sum too large to materialize index tuples");
  }

  MinkowskiSum out;
  out.polygon.vertices = walk.vertices;
  out.polygon.provenance.resize(k_out);
  for (std::size_t k = 0; k < k_out; ++k) {
    out.polygon.provenance[k] = static_cast<std::int32_t>(k);
  }

  out.tuples.assign(k_out, std::vector<std::int32_t>(n, 0));
  std::vector<std::int32_t> current(n, 0);
  for (std::size_t k = 0; k < k_out; ++k) {
    if (k > 0) {
      for (std::size_t s = walk.group_offset[k - 1]; s < walk.group_offset[k]; ++s) {
        const EdgeRecord& e = walk.steps[s];
        const auto m = static_cast<std::size_t>(e.edge_index) + 1;
        current[static_cast<std::size_t>(e.source)] =
            m == polygons[e.source].vertices.size() ? 0 : static_cast<std::int32_t>(m);
      }
    }
    out.tuples[k] = current;
  }
  return out;
}

bool is_canonical(const ConvexPolygon& polygon) {
  const auto& v = polygon.vertices;
  if (v.empty()) return false;
  for (Complex p : v) {
    if (!is_finite(p)) return false;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (start_less(v[i], v[0])) return false;
  }
  if (v.size() <= 2) return true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex a = v[i];
    const Complex b = v[(i + 1) % v.size()];
    const Complex c = v[(i + 2) % v.size()];
    if (cross(a, b, c) <= 0.0) return false;
  }
  return true;
}

}  // namespace polybeam::geometry
