#pragma once

#include <utility>
#include <vector>

#include "dio/ecurve.hpp"

namespace dio {

/// Invariant factors (n1 | n2) plus explicit generators: the group the
/// generators span is Z/n1 x Z/n2. Cyclic groups report n1 = 1.
struct TorsionStructure {
    int n1 = 1;
    int n2 = 1;
    std::vector<CurvePoint> generators;

    int order() const { return n1 * n2; }
    std::string str() const;
};

/// The 26 groups possible over quadratic fields: Z/n (n = 1..16, 18),
/// Z/2 x Z/2m (m = 1..6), Z/3 x Z/3m (m = 1, 2), Z/4 x Z/4.
const std::vector<std::pair<int, int>>& admissible_groups();
bool is_admissible(int n1, int n2);
/// Maximal in the admissible lattice: no other admissible group contains it
/// as a subgroup, so "contains" certification implies equality.
bool is_maximal_admissible(int n1, int n2);

struct TorsionOptions {
    int max_order = 18;
    std::size_t closure_cap = 48; // larger than any admissible group; overflow = bug
};

/// Certified-by-containment torsion computation: closes {2-torsion, hints}
/// under addition and halving, computes invariant factors and generators.
/// Non-torsion hints (order beyond max_order) are ignored. A closure that
/// leaves the admissible table raises InadmissibleGroup.
TorsionStructure torsion_structure(const Curve& e, const std::vector<CurvePoint>& hints,
                                   const TorsionOptions& opts = {});

} // namespace dio
