#ifndef LAZYVOR_POINT_SOURCE_HPP
#define LAZYVOR_POINT_SOURCE_HPP

#include "lazyvor/expr.hpp"
#include "lazyvor/vec.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lazyvor {

struct FinitePart {
    std::vector<Point> points;
};

/// Integer-indexed coordinate family. The growth bound guarantees
/// max_norm(point(k)) >= c*|k|_inf - d over the declared range, which is what
/// makes ball queries terminate. Up to three index variables; a
/// two-variable family expresses planar lattices.
struct FamilyPart {
    enum class Range { AllIntegers, Nonneg };

    std::vector<std::string> index_vars;
    Range range = Range::AllIntegers;
    std::vector<std::shared_ptr<const Expr>> coord_exprs;
    Rational growth_c; // > 0
    Rational growth_d; // >= 0

    Point point_at(const std::vector<BigInt>& indices) const;
};

using SourcePart = std::variant<FinitePart, FamilyPart>;

struct ConeHint {
    enum class Kind { FinitelyGenerated, NotClosed };

    Kind kind = Kind::FinitelyGenerated;
    std::vector<Point> witness_points; // finitely_generated
    Vec limit_direction;               // not_closed, nonzero
    int witness_part = -1;             // not_closed, index of a family part
};

/// A discrete point set given as a points-in-a-ball oracle: a union of
/// finite lists and integer-indexed families, with optional direction-cone
/// hints for individual member points. Immutable after construction; all
/// queries are pure.
class PointSource {
public:
    static constexpr long kDefaultMaxCandidates = 100000;

    PointSource(int dim, std::vector<SourcePart> parts,
                std::vector<std::pair<Point, ConeHint>> hints,
                long max_candidates = kDefaultMaxCandidates);

    int dim() const { return dim_; }
    const std::vector<SourcePart>& parts() const { return parts_; }
    long max_candidates() const { return max_candidates_; }
    void set_max_candidates(long budget) { max_candidates_ = budget; }

    /// Exactly the member points x with |x - center|^2 <= radius_sq,
    /// duplicate-free and sorted lexicographically. Throws BudgetExceeded if
    /// the enumeration scans more than max_candidates() candidates, and
    /// DomainError if a scanned family point violates its growth bound.
    std::vector<Point> points_in_ball(const Point& center, const Rational& radius_sq) const;

    bool contains(const Point& x) const;

    const ConeHint* hint_for(const Point& p) const;
    const std::vector<std::pair<Point, ConeHint>>& hints() const { return hints_; }

    /// True when every part is a finite list.
    bool is_finite() const;

    /// All member points of a finite source.
    std::vector<Point> all_points() const;

    /// max |q - p|^2 over a finite source; a ball of this radius sees
    /// everything.
    Rational covering_radius_sq(const Point& p) const;

private:
    int dim_;
    std::vector<SourcePart> parts_;
    std::vector<std::pair<Point, ConeHint>> hints_;
    long max_candidates_;
};

/// Parses and fully validates a JSON source spec (see the schema in the
/// README). Throws SpecError with location information on malformed input,
/// dimension mismatches, non-positive growth constants, growth bounds
/// violated in the load-time spot check, or hints at non-member points.
PointSource parse_source_spec(const std::string& text,
                              long max_candidates = PointSource::kDefaultMaxCandidates);

/// Built-in specs: "p1", "p2", "lattice-z2".
const std::vector<std::string>& preset_names();
std::string preset_spec_text(const std::string& name);
PointSource preset_source(const std::string& name,
                          long max_candidates = PointSource::kDefaultMaxCandidates);

} // namespace lazyvor

#endif
