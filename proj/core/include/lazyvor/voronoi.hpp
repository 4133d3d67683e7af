#ifndef LAZYVOR_VORONOI_HPP
#define LAZYVOR_VORONOI_HPP

#include "lazyvor/cone.hpp"
#include "lazyvor/point_source.hpp"
#include "lazyvor/polyhedron.hpp"
#include "lazyvor/witness.hpp"

#include <optional>

namespace lazyvor {

enum class CellKind { Polytope, Polyhedron, NonPolyhedral, Truncated, Undetermined };

const char* cell_kind_name(CellKind kind);

/// Sampled evidence attached to a NonPolyhedral outcome: scan cones at
/// growing radii keep acquiring new directions and never absorb the hinted
/// limit direction. Evidence, not proof.
struct NonPolyhedralCertificate {
    Vec limit_direction;
    int witness_part = -1;
    std::vector<Rational> sample_radii_sq;
    std::vector<bool> strictly_grew;  // between consecutive radii
    std::vector<bool> contains_limit; // per radius
};

/// Candidate-search bookkeeping for computed cells.
struct SearchDiagnostics {
    Rational bound_sq;            // rho^2 (inner) or s^2 (boundary), 0 if unused
    Rational candidate_radius_sq; // the enumerated ball, 4 * bound_sq
    long candidate_count = 0;
};

struct CellResult {
    CellKind kind = CellKind::Undetermined;
    int dim = 0;
    Point site;
    std::optional<HRep> hrep; // minimal; every row of a cell is a bisector
                              // of a relevant site (plus box rows when truncated)
    std::optional<VRep> vrep;
    std::vector<Point> relevant_points;
    std::optional<FgCone> recession; // generator form; empty generators = {0}
    std::optional<NonPolyhedralCertificate> certificate;
    std::optional<std::pair<Point, Point>> truncation_box; // lo, hi
    std::optional<Rational> radius_sq_exhausted;           // Undetermined
    std::optional<SearchDiagnostics> search;
};

struct Classification {
    enum class Kind { Inner, Boundary, Undetermined };

    Kind kind = Kind::Undetermined;
    std::vector<Point> witness_points;           // Inner: <= 2n points with p
                                                 // interior to their hull
    std::optional<Vec> support;                  // Boundary: u != 0 with
                                                 // <q - p, u> <= 0 for all verified q
    std::optional<Rational> radius_sq_exhausted; // Undetermined
};

/// Half-space of points at least as close to p as to q; its bounding
/// hyperplane passes through the midpoint and is orthogonal to q - p.
HalfSpace bisector_halfspace(const Point& p, const Point& q);

/// Inner/boundary classification by doubling-radius witness search, falling
/// back to declared hints, to exhaustive knowledge for finite sources, and
/// otherwise to an honest Undetermined.
Classification classify_point(const PointSource& src, const Point& p,
                              const Rational& max_radius_sq);

/// cone{ q - p : q in the ball, q != p }.
FgCone direction_cone_scan(const PointSource& src, const Point& p, const Rational& radius_sq);

/// Scan cones at both radii are equal. Evidence of finite generation, never
/// proof.
bool cone_stabilized(const PointSource& src, const Point& p, const Rational& r1,
                     const Rational& r2);

/// Cell of an inner point: bounded by the scaled polar of the witness hull,
/// candidates enumerated within the squared bound 4*rho^2.
CellResult voronoi_cell_inner(const PointSource& src, const Point& p,
                              const std::vector<Point>& witness_points);

/// Cell of a boundary point whose direction cone is generated by
/// witness_points - p: candidates within 4*s^2 per the compactness bound,
/// recession verified against the polar of the direction cone.
CellResult voronoi_cell_boundary(const PointSource& src, const Point& p,
                                 const std::vector<Point>& witness_points);

/// Exact cell intersected with an axis-aligned box around p.
CellResult voronoi_cell_truncated(const PointSource& src, const Point& p, const HRep& box);

/// Dispatcher: classify, then the matching construction; not_closed hints
/// yield NonPolyhedral with sampled evidence; singleton sources yield all of
/// E^n; anything unresolvable is Undetermined.
CellResult voronoi_cell(const PointSource& src, const Point& p, const Rational& max_radius_sq);

/// Sites of the minimal representation; rejects non-cell results.
std::vector<Point> relevant_points(const CellResult& result);

} // namespace lazyvor

#endif
