#ifndef ARTK_CUBE_HPP
#define ARTK_CUBE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artk/parabolic.hpp"

namespace artk {

/// The vertex u W_Δ of the clique-cube complex; u is the shortest element of
/// its coset.
struct CubeVertex {
  CoxeterElement rep;
  VertexSet clique;
};

/// The cube spanned by the cosets between u W_Δ1 (the bottom vertex) and
/// u W_Δ2.
struct Cube {
  std::size_t bottom;
  VertexSet top;
  std::size_t dimension;
};

/// A piece of the clique-cube complex over the Coxeter shadow. Vertices
/// are admitted when their representative has length <= radius; every cube
/// whose bottom vertex is admitted is present, with all of its faces.
class CubeComplexBall {
public:
  const CoxeterGroup &group() const { return *_group; }
  std::size_t radius() const { return _radius; }
  bool shadow() const { return _shadow; }
  /// The whole (finite) complex is present.
  bool exhausted() const { return _exhausted; }

  const std::vector<CubeVertex> &vertices() const { return _vertices; }
  const std::vector<Cube> &cubes() const { return _cubes; }

  std::optional<std::size_t> find(const CoxeterElement &rep, VertexSet clique) const;

  /// Vertex indices of a cube, one per clique between bottom and top.
  std::vector<std::size_t> cube_vertices(const Cube &cube) const;

  /// Codimension-one faces: two per direction of the cube.
  std::vector<Cube> faces(const Cube &cube) const;

  /// f[0] = vertices, f[n] = n-cubes.
  std::vector<std::size_t> f_vector() const;

  /// `A_{a,b}` in the fundamental domain, `v w W_{a}` in shadow balls.
  std::string label(std::size_t vertex) const;

  std::string to_json() const;
  /// 1-skeleton; vertices in `highlight` filled.
  std::string to_dot(const std::vector<std::size_t> &highlight = {}) const;

private:
  friend CubeComplexBall fundamental_domain(const CoxeterGroup &group);
  friend CubeComplexBall shadow_ball(const CoxeterGroup &group, std::size_t radius,
                                     std::size_t cap);
  void add_vertex(CoxeterElement rep, VertexSet clique);
  void add_cubes(const std::vector<VertexSet> &cliques);

  const CoxeterGroup *_group = nullptr;
  std::size_t _radius = 0;
  bool _shadow = false;
  bool _exhausted = false;
  std::vector<CubeVertex> _vertices;
  std::vector<Cube> _cubes;
  std::map<std::pair<Word, std::uint64_t>, std::size_t> _index;
};

/// K: the cubes whose vertices all have representative 1.
CubeComplexBall fundamental_domain(const CoxeterGroup &group);

/// Throws CapExceeded when more than `cap` group elements or vertices would
/// be admitted.
CubeComplexBall shadow_ball(const CoxeterGroup &group, std::size_t radius, std::size_t cap);

/// u W_Δ u^-1 for the vertex (u, Δ).
ParabolicHandle stabilizer(const CubeComplexBall &ball, std::size_t vertex);

struct CubeFixedSet {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> cubes;
};

/// Vertices with w u W_Δ = u W_Δ; a cube is fixed when all of its vertices
/// are.
CubeFixedSet fixed_set(const CubeComplexBall &ball, const CoxeterElement &w);

/// Fixed-vertex counts in shadow balls of the given radii.
std::vector<std::size_t> fixed_set_growth(const CoxeterGroup &group, const CoxeterElement &w,
                                          const std::vector<std::size_t> &radii, std::size_t cap);

struct FlagLinkReport {
  std::size_t vertices_checked = 0;
  std::size_t vertices_skipped = 0;   // link not entirely inside the ball
  std::vector<std::string> violations;

  Verdict verdict() const { return violations.empty() ? Verdict::Pass : Verdict::Fail; }
};

/// Gromov's condition at every vertex whose whole link is in the ball: the
/// link is a simplicial complex and every set of pairwise adjacent link
/// vertices spans a simplex. In the fundamental domain every vertex is
/// checked against its link inside K.
FlagLinkReport flag_link_check(const CubeComplexBall &ball, std::size_t cap);

struct EllipticProbe {
  std::vector<std::size_t> fixed_counts;
  std::optional<std::size_t> common_vertex;
};

EllipticProbe locally_elliptic_probe(const CubeComplexBall &ball,
                                     const std::vector<CoxeterElement> &elements);

struct ClosureFixReport {
  ParabolicHandle closure;
  std::vector<std::size_t> fixed_by_set;
  std::vector<std::size_t> fixed_by_closure;

  bool holds() const { return fixed_by_set == fixed_by_closure; }
};

/// Fix(B) against Fix(PC(B)) vertexwise inside the ball.
ClosureFixReport closure_fix_identity_check(const CubeComplexBall &ball,
                                            const std::vector<CoxeterElement> &elements,
                                            std::size_t cap);

} // namespace artk

#endif // ARTK_CUBE_HPP
