#include "lazyvor/point_source.hpp"
#include "lazyvor/cone.hpp"
#include "lazyvor/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace lazyvor {

using nlohmann::json;

Point FamilyPart::point_at(const std::vector<BigInt>& indices) const {
    std::map<std::string, Rational> env;
    for (size_t i = 0; i < index_vars.size(); ++i) {
        env[index_vars[i]] = Rational(indices[i]);
    }
    Point p(static_cast<int>(coord_exprs.size()));
    for (size_t c = 0; c < coord_exprs.size(); ++c) {
        p[static_cast<int>(c)] = eval_expr(*coord_exprs[c], env);
    }
    return p;
}

PointSource::PointSource(int dim, std::vector<SourcePart> parts,
                         std::vector<std::pair<Point, ConeHint>> hints, long max_candidates)
    : dim_(dim), parts_(std::move(parts)), hints_(std::move(hints)),
      max_candidates_(max_candidates) {
    if (dim_ < 1) {
        throw SpecError("dimension must be at least 1");
    }
}

namespace {

Rational index_max_norm(const std::vector<BigInt>& indices) {
    BigInt m(0);
    for (const BigInt& k : indices) {
        BigInt a = k < 0 ? BigInt(-k) : k;
        if (a > m) {
            m = a;
        }
    }
    return Rational(m);
}

} // namespace

std::vector<Point> PointSource::points_in_ball(const Point& center,
                                               const Rational& radius_sq) const {
    if (center.dim() != dim_) {
        throw DomainError("ball center dimension mismatch");
    }
    if (radius_sq < 0) {
        throw DomainError("negative squared radius");
    }
    const Rational r_up = sqrt_upper_bound(radius_sq);
    long scanned = 0;
    auto charge = [&](long count) {
        scanned += count;
        if (scanned > max_candidates_) {
            throw BudgetExceeded("candidate enumeration exceeded LAZYVOR_MAX_CANDIDATES (" +
                                 std::to_string(max_candidates_) + ")");
        }
    };

    std::vector<Point> out;
    for (const SourcePart& part : parts_) {
        if (const auto* finite = std::get_if<FinitePart>(&part)) {
            charge(static_cast<long>(finite->points.size()));
            for (const Point& p : finite->points) {
                if (dist_sq(p, center) <= radius_sq) {
                    out.push_back(p);
                }
            }
            continue;
        }
        const auto& family = std::get<FamilyPart>(part);
        // A member point inside the ball has max-norm at most r + |center|_inf,
        // so the growth bound caps usable indices at (r + |center|_inf + d)/c.
        const BigInt bound =
            ceil_int((r_up + max_norm(center) + family.growth_d) / family.growth_c);
        const int arity = static_cast<int>(family.index_vars.size());
        BigInt lo = family.range == FamilyPart::Range::Nonneg ? BigInt(0) : -bound;
        const BigInt per_axis = bound - lo + 1;
        BigInt total(1);
        for (int i = 0; i < arity; ++i) {
            total *= per_axis;
        }
        if (total > max_candidates_) {
            throw BudgetExceeded("candidate enumeration exceeded LAZYVOR_MAX_CANDIDATES (" +
                                 std::to_string(max_candidates_) + ")");
        }
        charge(total.convert_to<long>());

        std::vector<BigInt> idx(static_cast<size_t>(arity), lo);
        for (;;) {
            const Point p = family.point_at(idx);
            if (max_norm(p) < family.growth_c * index_max_norm(idx) - family.growth_d) {
                throw DomainError("family point at index " + Rational(idx[0]).str() +
                                  " violates the declared growth bound");
            }
            if (dist_sq(p, center) <= radius_sq) {
                out.push_back(p);
            }
            int axis = 0;
            while (axis < arity) {
                if (idx[static_cast<size_t>(axis)] < bound) {
                    ++idx[static_cast<size_t>(axis)];
                    break;
                }
                idx[static_cast<size_t>(axis)] = lo;
                ++axis;
            }
            if (axis == arity) {
                break;
            }
        }
    }
    sort_points_lex(out);
    return out;
}

bool PointSource::contains(const Point& x) const {
    return !points_in_ball(x, Rational(0)).empty();
}

const ConeHint* PointSource::hint_for(const Point& p) const {
    for (const auto& [at, hint] : hints_) {
        if (at == p) {
            return &hint;
        }
    }
    return nullptr;
}

bool PointSource::is_finite() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const SourcePart& part) {
        return std::holds_alternative<FinitePart>(part);
    });
}

std::vector<Point> PointSource::all_points() const {
    if (!is_finite()) {
        throw DomainError("all_points requires a finite source");
    }
    std::vector<Point> out;
    for (const SourcePart& part : parts_) {
        const auto& finite = std::get<FinitePart>(part);
        out.insert(out.end(), finite.points.begin(), finite.points.end());
    }
    sort_points_lex(out);
    return out;
}

Rational PointSource::covering_radius_sq(const Point& p) const {
    Rational cov(0);
    for (const Point& q : all_points()) {
        const Rational d = dist_sq(p, q);
        if (d > cov) {
            cov = d;
        }
    }
    return cov;
}

namespace {

std::pair<int, int> line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rational scalar_at(const json& j, const std::string& where) {
    if (!j.is_string()) {
        throw SpecError(where + ": scalars must be strings like \"3\" or \"-1/2\"");
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const SpecError& e) {
        throw SpecError(where + ": " + e.what());
    }
}

Point point_at(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) {
        throw SpecError(where + ": expected an array of " + std::to_string(dim) + " scalars");
    }
    Point p(dim);
    for (int i = 0; i < dim; ++i) {
        p[i] = scalar_at(j[static_cast<size_t>(i)],
                         where + "[" + std::to_string(i) + "]");
    }
    return p;
}

// Spot-check volume shrinks with arity so load stays cheap.
BigInt spot_check_limit(int arity) {
    switch (arity) {
    case 1: return BigInt(1000);
    case 2: return BigInt(31);
    default: return BigInt(10);
    }
}

void spot_check_family(const FamilyPart& family, const std::string& where) {
    const int arity = static_cast<int>(family.index_vars.size());
    const BigInt hi = spot_check_limit(arity);
    const BigInt lo = family.range == FamilyPart::Range::Nonneg ? BigInt(0) : -hi;
    std::vector<BigInt> idx(static_cast<size_t>(arity), lo);
    for (;;) {
        Point p;
        try {
            p = family.point_at(idx);
        } catch (const DomainError& e) {
            throw SpecError(where + ": family is not total at index " + Rational(idx[0]).str() +
                            ": " + e.what());
        }
        if (max_norm(p) < family.growth_c * index_max_norm(idx) - family.growth_d) {
            throw SpecError(where + ": growth bound violated at index " + Rational(idx[0]).str());
        }
        int axis = 0;
        while (axis < arity) {
            if (idx[static_cast<size_t>(axis)] < hi) {
                ++idx[static_cast<size_t>(axis)];
                break;
            }
            idx[static_cast<size_t>(axis)] = lo;
            ++axis;
        }
        if (axis == arity) {
            break;
        }
    }
}

FamilyPart parse_family(const json& jp, int dim, const std::string& where) {
    FamilyPart family;
    if (!jp.contains("index")) {
        throw SpecError(where + ": family needs an \"index\"");
    }
    const json& idx = jp["index"];
    if (idx.is_string()) {
        family.index_vars.push_back(idx.get<std::string>());
    } else if (idx.is_array()) {
        for (const json& v : idx) {
            if (!v.is_string()) {
                throw SpecError(where + ".index: entries must be strings");
            }
            family.index_vars.push_back(v.get<std::string>());
        }
    } else {
        throw SpecError(where + ".index: expected a string or an array of strings");
    }
    if (family.index_vars.empty() || family.index_vars.size() > 3) {
        throw SpecError(where + ".index: between 1 and 3 index variables");
    }
    for (size_t i = 0; i < family.index_vars.size(); ++i) {
        for (size_t j = i + 1; j < family.index_vars.size(); ++j) {
            if (family.index_vars[i] == family.index_vars[j]) {
                throw SpecError(where + ".index: duplicate variable '" + family.index_vars[i] +
                                "'");
            }
        }
    }

    const std::string range = jp.value("range", std::string());
    if (range == "integers") {
        family.range = FamilyPart::Range::AllIntegers;
    } else if (range == "nonneg") {
        family.range = FamilyPart::Range::Nonneg;
    } else {
        throw SpecError(where + ".range: expected \"integers\" or \"nonneg\"");
    }

    if (!jp.contains("coords") || !jp["coords"].is_array() ||
        static_cast<int>(jp["coords"].size()) != dim) {
        throw SpecError(where + ".coords: expected " + std::to_string(dim) + " expressions");
    }
    for (size_t c = 0; c < jp["coords"].size(); ++c) {
        const json& expr_json = jp["coords"][c];
        const std::string coord_where = where + ".coords[" + std::to_string(c) + "]";
        if (!expr_json.is_string()) {
            throw SpecError(coord_where + ": expected an expression string");
        }
        try {
            family.coord_exprs.emplace_back(
                parse_expr(expr_json.get<std::string>(), family.index_vars));
        } catch (const SpecError& e) {
            throw SpecError(coord_where + ": " + e.what());
        }
    }

    if (!jp.contains("growth") || !jp["growth"].is_object()) {
        throw SpecError(where + ".growth: expected {\"c\": s, \"d\": s}");
    }
    family.growth_c = scalar_at(jp["growth"].value("c", json()), where + ".growth.c");
    family.growth_d = scalar_at(jp["growth"].value("d", json()), where + ".growth.d");
    if (family.growth_c <= 0) {
        throw SpecError(where + ".growth.c: must be positive");
    }
    if (family.growth_d < 0) {
        throw SpecError(where + ".growth.d: must be nonnegative");
    }
    spot_check_family(family, where);
    return family;
}

} // namespace

PointSource parse_source_spec(const std::string& text, long max_candidates) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw SpecError("JSON syntax error at line " + std::to_string(line) + ", column " +
                        std::to_string(col));
    }
    if (!doc.is_object() || !doc.contains("dimension") ||
        !doc["dimension"].is_number_integer()) {
        throw SpecError("source spec must be an object with an integer \"dimension\"");
    }
    const int dim = doc["dimension"].get<int>();
    if (dim < 1) {
        throw SpecError("dimension must be at least 1");
    }
    if (!doc.contains("parts") || !doc["parts"].is_array() || doc["parts"].empty()) {
        throw SpecError("source spec needs a nonempty \"parts\" array");
    }

    std::vector<SourcePart> parts;
    for (size_t i = 0; i < doc["parts"].size(); ++i) {
        const json& jp = doc["parts"][i];
        const std::string where = "parts[" + std::to_string(i) + "]";
        const std::string kind = jp.value("kind", std::string());
        if (kind == "finite") {
            if (!jp.contains("points") || !jp["points"].is_array() || jp["points"].empty()) {
                throw SpecError(where + ": finite part needs a nonempty \"points\" array");
            }
            FinitePart finite;
            for (size_t k = 0; k < jp["points"].size(); ++k) {
                finite.points.push_back(point_at(jp["points"][k], dim,
                                                 where + ".points[" + std::to_string(k) + "]"));
            }
            sort_points_lex(finite.points);
            parts.emplace_back(std::move(finite));
        } else if (kind == "family") {
            parts.emplace_back(parse_family(jp, dim, where));
        } else {
            throw SpecError(where + ".kind: expected \"finite\" or \"family\"");
        }
    }

    std::vector<std::pair<Point, ConeHint>> hints;
    if (doc.contains("hints")) {
        if (!doc["hints"].is_array()) {
            throw SpecError("\"hints\" must be an array");
        }
        for (size_t i = 0; i < doc["hints"].size(); ++i) {
            const json& jh = doc["hints"][i];
            const std::string where = "hints[" + std::to_string(i) + "]";
            const Point at = point_at(jh.value("at", json()), dim, where + ".at");
            ConeHint hint;
            const std::string kind = jh.value("kind", std::string());
            if (kind == "finitely_generated") {
                hint.kind = ConeHint::Kind::FinitelyGenerated;
                if (!jh.contains("witness_points") || !jh["witness_points"].is_array() ||
                    jh["witness_points"].empty()) {
                    throw SpecError(where + ": finitely_generated hint needs witness_points");
                }
                for (size_t k = 0; k < jh["witness_points"].size(); ++k) {
                    hint.witness_points.push_back(
                        point_at(jh["witness_points"][k], dim,
                                 where + ".witness_points[" + std::to_string(k) + "]"));
                }
            } else if (kind == "not_closed") {
                hint.kind = ConeHint::Kind::NotClosed;
                hint.limit_direction =
                    point_at(jh.value("limit_direction", json()), dim,
                             where + ".limit_direction");
                if (hint.limit_direction.is_zero()) {
                    throw SpecError(where + ".limit_direction: must be nonzero");
                }
                if (!jh.contains("witness_part") || !jh["witness_part"].is_number_integer()) {
                    throw SpecError(where + ".witness_part: expected a part index");
                }
                hint.witness_part = jh["witness_part"].get<int>();
                if (hint.witness_part < 0 ||
                    hint.witness_part >= static_cast<int>(parts.size()) ||
                    !std::holds_alternative<FamilyPart>(
                        parts[static_cast<size_t>(hint.witness_part)])) {
                    throw SpecError(where + ".witness_part: must reference a family part");
                }
            } else {
                throw SpecError(where + ".kind: expected \"finitely_generated\" or \"not_closed\"");
            }
            for (const auto& [prev, _] : hints) {
                if (prev == at) {
                    throw SpecError(where + ": duplicate hint at " + to_string(at));
                }
            }
            hints.emplace_back(at, std::move(hint));
        }
    }

    PointSource source(dim, std::move(parts), std::move(hints), max_candidates);

    // Hint validation needs the assembled oracle: membership of hinted points
    // and witnesses, and sampled consistency for not_closed claims.
    for (const auto& [at, hint] : source.hints()) {
        if (!source.contains(at)) {
            throw SpecError("hint at " + to_string(at) + " references a non-member point");
        }
        if (hint.kind == ConeHint::Kind::FinitelyGenerated) {
            for (const Point& w : hint.witness_points) {
                if (w == at) {
                    throw SpecError("hint witness " + to_string(w) +
                                    " equals the hinted point");
                }
                if (!source.contains(w)) {
                    throw SpecError("hint witness " + to_string(w) + " is not a member point");
                }
            }
        } else {
            for (const Rational& radius_sq : {Rational(16), Rational(256)}) {
                std::vector<Vec> gens;
                for (const Point& q : source.points_in_ball(at, radius_sq)) {
                    if (!(q == at)) {
                        gens.push_back(q - at);
                    }
                }
                if (!gens.empty() &&
                    cone_contains(FgCone(dim, gens), hint.limit_direction)) {
                    throw SpecError("not_closed hint at " + to_string(at) +
                                    " is inconsistent: the scanned direction cone already "
                                    "contains the limit direction");
                }
            }
        }
    }
    return source;
}

} // namespace lazyvor
