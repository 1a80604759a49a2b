/*
  polytope.hpp — combinatorial simple polytopes and their subcomplexes.

  A simple n-polytope is stored purely combinatorially as the list of its
  vertices, each identified with the set of n facets through it.  Facet
  sets are bitmasks, so at most 64 facets are supported (far beyond the
  desk scale this tool targets).  Faces are identified with their full
  facet set: for a simple polytope the nonempty intersection of k facets
  has codimension exactly k, and E ⊆ F iff facets(F) ⊆ facets(E).

  Realizability of the incidence data as an actual convex polytope is NOT
  verified; validation is combinatorial (cardinalities, distinctness,
  n-regular connected vertex-edge graph, ridge property).
*/

#ifndef TORB_POLYTOPE_HPP
#define TORB_POLYTOPE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "torb/numeric.hpp"

namespace torb {

using FacetMask = std::uint64_t;

inline int popcount(FacetMask m) { return __builtin_popcountll(m); }

/// Facet indices (0-based) set in the mask, ascending.
std::vector<int> mask_to_indices(FacetMask m);
FacetMask indices_to_mask(const std::vector<int>& idx);

class SimplePolytope {
 public:
  /// Validates and builds from vertex facet-sets (0-based facet indices).
  static SimplePolytope build(int dim, int nfacets,
                              const std::vector<std::vector<int>>& vertex_facets);

  /// The n-simplex: facets 0..n, vertex i omits facet i.
  static SimplePolytope simplex(int n);

  /// Product polytope; facets of `other` are shifted past ours.
  SimplePolytope product(const SimplePolytope& other) const;

  int dim() const { return dim_; }
  int nfacets() const { return nfacets_; }
  int nvertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<FacetMask>& vertices() const { return vertices_; }
  FacetMask vertex(int i) const { return vertices_[i]; }

  /// Index of the vertex with this facet set, or -1.
  int vertex_index(FacetMask m) const;

  /// Vertices v with s ⊆ facets(v).
  std::vector<FacetMask> face_vertices(FacetMask s) const;
  bool face_exists(FacetMask s) const;

  /// Intersection of the facet sets of all vertices on the face; equals s
  /// itself for faces of a genuine simple polytope.
  FacetMask canonical_face(FacetMask s) const;

  int face_dim(FacetMask s) const { return dim_ - popcount(s); }

  /// All faces (canonical masks), including the polytope itself (empty mask)
  /// and the vertices.  No empty face.
  std::vector<FacetMask> all_faces() const;

  /// Human-readable vertex name like "v{1,2,3}" (1-based facets).
  std::string vertex_name(FacetMask v) const;

 private:
  SimplePolytope() = default;
  int dim_ = 0;
  int nfacets_ = 0;
  std::vector<FacetMask> vertices_;
};

using PolytopePtr = std::shared_ptr<const SimplePolytope>;

/// f-vector (f_0, ..., f_d): counts of i-dimensional faces.
using FVector = std::vector<long long>;

FVector f_vector(const SimplePolytope& p);

/// A polytopal subcomplex of a simple polytope, stored by its maximal faces.
/// Faces of the complex are all faces of the maximal ones; closure under
/// intersection is inherited from the parent polytope.
class Subcomplex {
 public:
  /// The full polytope as a complex (single maximal face: the polytope).
  static Subcomplex full(PolytopePtr p);
  static Subcomplex from_maximal(PolytopePtr p, std::vector<FacetMask> maximal);

  const SimplePolytope& parent() const { return *parent_; }
  PolytopePtr parent_ptr() const { return parent_; }
  const std::vector<FacetMask>& maximal_faces() const { return maximal_; }
  int dim() const { return dim_; }
  bool empty() const { return maximal_.empty(); }

  std::vector<FacetMask> vertex_set() const;
  bool contains_vertex(FacetMask v) const;
  bool is_single_vertex() const;

  /// All faces of the subcomplex not containing vertex v, as a subcomplex.
  /// Throws ValidationError if v is not a vertex of the complex.
  Subcomplex delete_vertex(FacetMask v) const;

  /// Maximal faces containing vertex v.
  std::vector<FacetMask> maximal_faces_containing(FacetMask v) const;

  /// All faces of the complex (canonical masks, deduplicated).
  std::vector<FacetMask> all_faces() const;

  FVector f_vector() const;

  /// Canonical key for memoization: the sorted maximal-face list.
  const std::vector<FacetMask>& key() const { return maximal_; }

  bool operator==(const Subcomplex& o) const { return maximal_ == o.maximal_; }

 private:
  Subcomplex(PolytopePtr p, std::vector<FacetMask> maximal);
  PolytopePtr parent_;
  std::vector<FacetMask> maximal_;  // sorted, absorbed (no face contains another)
  int dim_ = -1;
};

}  // namespace torb

#endif
