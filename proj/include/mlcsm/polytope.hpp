#pragma once

#include "mlcsm/rational.hpp"

#include <span>
#include <vector>

namespace mlcsm {

using Point = std::vector<Integer>;

/// Lattice polytope given by its irredundant vertex set in a fixed ambient
/// dimension. May be empty, a point, or lower-dimensional. Vertices are kept
/// lexicographically sorted so equal polytopes compare equal.
class LatticePolytope {
public:
    /// Hull of an arbitrary finite point set; ambient dimension inferred from
    /// the first point. Throws on mixed lengths or an empty set.
    static LatticePolytope convex_hull(std::vector<Point> points);
    static LatticePolytope convex_hull(std::vector<Point> points, int ambient_dim);
    static LatticePolytope empty(int ambient_dim);
    static LatticePolytope single_point(Point p);
    /// conv{0, e_1, ..., e_n} in R^n.
    static LatticePolytope standard_simplex(int n);

    int ambient_dim() const { return ambient_; }
    bool is_empty() const { return vertices_.empty(); }
    const std::vector<Point>& vertices() const { return vertices_; }

    /// Affine dimension; -1 for the empty polytope.
    int dim() const;

    LatticePolytope dilate(const Integer& factor) const;
    LatticePolytope translate(const Point& offset) const;

    bool operator==(const LatticePolytope& o) const = default;

private:
    friend class HomogeneousPolytope;
    friend LatticePolytope homog_project(const HomogeneousPolytope& p);
    static LatticePolytope trusted(std::vector<Point> vertices, int ambient_dim);

    int ambient_ = 0;
    std::vector<Point> vertices_;
};

/// Hull of all pairwise vertex sums. Both summands must be nonempty and of
/// equal ambient dimension.
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// Full-dimensional Euclidean volume; 0 when lower-dimensional or empty.
Rational euclidean_volume(const LatticePolytope& p);

/// d! times the Euclidean volume; an integer for lattice polytopes.
Integer normalized_volume(const LatticePolytope& p);

/// [MV_n(p^(n-i), q^i)] for i = 0..n, by interpolating t -> vol(p + t q).
/// Requires ambient dimension n, p full-dimensional, q nonempty. Normalized
/// so that MV_n(simplex, ..., simplex) = 1.
std::vector<Integer> mixed_volume_pair_sequence(const LatticePolytope& p,
                                                const LatticePolytope& q, int n);

/// Inclusion-exclusion oracle: sum over nonempty S of
/// (-1)^(n-|S|) vol(sum of ps[i], i in S). Agrees with the interpolation
/// route on two-polytope multisets.
Rational mixed_volume_inclusion_exclusion(const std::vector<LatticePolytope>& ps);

/// Independent volume oracle: counts lattice points of t*p for t = 0..d,
/// interpolates the Ehrhart polynomial, returns d! times its leading
/// coefficient. Requires full-dimensional p of small dimension.
Integer ehrhart_normalized_volume(const LatticePolytope& p);

/// Exact LP feasibility: is x a convex combination of the given points?
bool in_convex_hull(const std::vector<Rational>& x, std::span<const Point> points);

/// Lattice polytope lying in the hyperplane sum(coords) = level with
/// nonnegative coordinates; the Newton polytope shape of a homogeneous
/// polynomial. May be empty.
class HomogeneousPolytope {
public:
    /// Hulls the given exponent points and validates the level constraint.
    static HomogeneousPolytope from_points(std::vector<Point> points, int ambient_dim);
    static HomogeneousPolytope empty(int ambient_dim, Integer level);

    int ambient_dim() const { return ambient_; }
    const Integer& level() const { return level_; }
    bool is_empty() const { return vertices_.empty(); }
    const std::vector<Point>& vertices() const { return vertices_; }

    bool operator==(const HomogeneousPolytope& o) const = default;

private:
    int ambient_ = 0;
    Integer level_ = 0;
    std::vector<Point> vertices_;
};

/// Deletes coordinate 0 of every vertex: a lattice-preserving affine
/// isomorphism on the level hyperplane. Throws on the empty polytope.
LatticePolytope homog_project(const HomogeneousPolytope& p);

/// Face of vertices supported inside J, re-indexed into R^J. Empty results
/// are valid.
HomogeneousPolytope coordinate_section(const HomogeneousPolytope& p,
                                       const std::vector<int>& J);

/// [m_0..m_k] for a homogeneous polytope in R^(k+1): mixed volumes of the
/// projection against the standard simplex; all zeros when empty.
std::vector<Integer> m_sequence(const HomogeneousPolytope& p);

}  // namespace mlcsm
