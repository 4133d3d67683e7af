#include "lazyvor/errors.hpp"
#include "lazyvor/point_source.hpp"

namespace lazyvor {

namespace {

// Canonical spec texts, written byte-for-byte by the `preset` command.
const char* kP1 = R"({
  "dimension": 2,
  "parts": [
    {"kind": "family", "index": "z", "range": "integers",
     "coords": ["0", "z"], "growth": {"c": "1", "d": "0"}},
    {"kind": "finite", "points": [["1", "0"]]}
  ],
  "hints": [
    {"at": ["1", "0"], "kind": "not_closed",
     "limit_direction": ["0", "1"], "witness_part": 0},
    {"at": ["0", "0"], "kind": "finitely_generated",
     "witness_points": [["0", "1"], ["0", "-1"], ["1", "0"]]}
  ]
}
)";

const char* kP2 = R"({
  "dimension": 2,
  "parts": [
    {"kind": "family", "index": "n", "range": "nonneg",
     "coords": ["n + 1", "1 - 1/(n + 1)"], "growth": {"c": "1", "d": "0"}},
    {"kind": "family", "index": "n", "range": "nonneg",
     "coords": ["-(n + 1)", "-1 + 1/(n + 1)"], "growth": {"c": "1", "d": "0"}}
  ],
  "hints": []
}
)";

const char* kLatticeZ2 = R"({
  "dimension": 2,
  "parts": [
    {"kind": "family", "index": ["i", "j"], "range": "integers",
     "coords": ["i", "j"], "growth": {"c": "1", "d": "0"}}
  ],
  "hints": []
}
)";

} // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"p1", "p2", "lattice-z2"};
    return names;
}

std::string preset_spec_text(const std::string& name) {
    if (name == "p1") {
        return kP1;
    }
    if (name == "p2") {
        return kP2;
    }
    if (name == "lattice-z2") {
        return kLatticeZ2;
    }
    throw SpecError("unknown preset '" + name + "' (available: p1, p2, lattice-z2)");
}

PointSource preset_source(const std::string& name, long max_candidates) {
    return parse_source_spec(preset_spec_text(name), max_candidates);
}

} // namespace lazyvor
