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

#ifndef POLYBEAM_GEOMETRY_HPP
#define POLYBEAM_GEOMETRY_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "error.hpp"

namespace polybeam::geometry {

/// Points live in the complex plane; re/im double the whole way through.
using Complex = std::complex<double>;

/// Edge directions closer than this (radians) are treated as parallel and
/// merged into a single edge of the sum polygon.
inline constexpr double kAngleTolerance = 1e-12;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Strictly convex polygon in canonical form:
///  - vertices in counterclockwise order, every turn a strict left turn,
///  - list starts at the vertex with smallest imaginary part (ties broken
///    by smallest real part),
///  - no duplicate and no collinear vertices.
/// Degenerate cardinalities are allowed: one vertex (a point) and two
/// vertices (a segment, walked out and back).
///
/// `provenance[k]` is the index of the element of the originating finite
/// set that vertex k came from. Operations that build polygons from
/// scratch fill it; callers that do not care may ignore it.
struct ConvexPolygon {
  std::vector<Complex> vertices;
  std::vector<std::int32_t> provenance;

  std::size_t size() const { return vertices.size(); }
  bool is_point() const { return vertices.size() == 1; }
  bool is_segment() const { return vertices.size() == 2; }
};

/// One directed boundary edge: vertex m -> vertex m+1 (cyclic).
struct EdgeRecord {
  double angle;                // arg(vector), normalized to [0, 2*pi)
  std::int32_t source;         // index of the polygon this edge belongs to
  std::int32_t edge_index;     // m, the index of the edge's source vertex
  Complex vector;              // p[m+1] - p[m], nonzero
};

/// Minkowski sum of N polygons with full vertex provenance: tuples[k][n]
/// is the vertex index of summand n whose vertices add up to sum vertex k.
struct MinkowskiSum {
  ConvexPolygon polygon;                            // canonical sum polygon
  std::vector<std::vector<std::int32_t>> tuples;    // K x N index tuples
};

/// Compact form of the sum-polygon boundary walk. Stores the merged,
/// orientation-sorted edge events instead of K full index tuples, so a
/// single tuple can be rebuilt in O(K + N) without O(K*N) memory.
/// Group j covers sorted edges [group_offset[j], group_offset[j+1]) and
/// produces the step from vertex j to vertex j+1 (the last group closes
/// the boundary back to vertex 0).
struct SumWalk {
  std::vector<Complex> vertices;        // canonical vertex ring
  std::vector<EdgeRecord> steps;        // all K edges, sorted by (angle, source)
  std::vector<std::size_t> group_offset;  // size = group count + 1
  std::size_t summand_count = 0;

  std::size_t vertex_count() const { return vertices.size(); }
};

/// arg(v) normalized to [0, 2*pi). Exact floating-point spill onto 2*pi is
/// clamped back inside the interval.
double angle_of(Complex v);

/// Convex hull of a finite point set, canonical form, O(M log M) monotone
/// chain. Provenance maps each hull vertex to the smallest input index
/// attaining it. Interior and collinear boundary points are dropped.
/// Throws Error("empty point set") / Error("non-finite input").
ConvexPolygon convex_hull(std::span<const Complex> points);

/// Rebuilds the canonical form of a vertex list that already traces a
/// convex polygon in some rotation or direction: deduplicates, drops
/// collinear vertices, orients counterclockwise, rotates to the canonical
/// start. Provenance maps output vertices to input positions.
ConvexPolygon canonicalize(std::span<const Complex> vertices);

/// Complex-scales a canonical polygon (rotation + dilation), keeping it
/// canonical. A zero factor collapses the polygon to the single point 0
/// with provenance {0}.
ConvexPolygon scale(const ConvexPolygon& polygon, Complex factor);

/// The directed boundary edges of one polygon, tagged with `source`.
/// Canonical ordering guarantees the angles come out already sorted
/// strictly increasing. A point polygon has no edges.
std::vector<EdgeRecord> edge_angles(const ConvexPolygon& polygon,
                                    std::int32_t source = 0);

/// Boundary walk of the Minkowski sum of canonical polygons: all edges
/// sorted by orientation, parallel edges (within kAngleTolerance) merged
/// into one group. Throws on an empty polygon list.
SumWalk minkowski_walk(std::span<const ConvexPolygon> polygons);

/// Index tuple of walk vertex k: the per-summand vertex indices whose
/// vertices sum to vertices[k]. O(K + N).
std::vector<std::int32_t> walk_tuple(const SumWalk& walk,
                                     std::span<const ConvexPolygon> polygons,
                                     std::size_t k);

/// Minkowski sum with all K index tuples materialized. Intended for
/// moderate instances; refuses to allocate more than ~10^8 tuple entries.
MinkowskiSum minkowski_sum(std::span<const ConvexPolygon> polygons);

/// True iff the polygon satisfies every canonical-form invariant.
bool is_canonical(const ConvexPolygon& polygon);

}  // namespace polybeam::geometry

#endif  // POLYBEAM_GEOMETRY_HPP
