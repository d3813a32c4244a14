#include "dio/torsion.hpp"

#include <algorithm>
#include <map>

namespace dio {

std::string TorsionStructure::str() const {
    if (n1 == 1) return "Z/" + std::to_string(n2);
    return "Z/" + std::to_string(n1) + " x Z/" + std::to_string(n2);
}

const std::vector<std::pair<int, int>>& admissible_groups() {
    static const std::vector<std::pair<int, int>> table = [] {
        std::vector<std::pair<int, int>> t;
        for (int n = 1; n <= 16; ++n) t.emplace_back(1, n);
        t.emplace_back(1, 18);
        for (int m = 1; m <= 6; ++m) t.emplace_back(2, 2 * m);
        t.emplace_back(3, 3);
        t.emplace_back(3, 6);
        t.emplace_back(4, 4);
        return t;
    }();
    return table;
}

bool is_admissible(int n1, int n2) {
    for (const auto& [a, b] : admissible_groups())
        if (a == n1 && b == n2) return true;
    return false;
}

namespace {

// Z/a1 x Z/a2 embeds into Z/b1 x Z/b2 (a_i | b_i after the invariant-factor
// normal form) iff a1 | b1 and a2 | b2.
bool embeds(std::pair<int, int> a, std::pair<int, int> b) {
    return b.first % a.first == 0 && b.second % a.second == 0;
}

} // namespace

bool is_maximal_admissible(int n1, int n2) {
    if (!is_admissible(n1, n2)) return false;
    for (const auto& g : admissible_groups()) {
        if (g == std::make_pair(n1, n2)) continue;
        if (embeds({n1, n2}, g)) return false;
    }
    return true;
}

namespace {

struct PointSet {
    std::vector<CurvePoint> pts;

    bool insert(const CurvePoint& p) {
        auto it = std::lower_bound(pts.begin(), pts.end(), p,
                                   [](const CurvePoint& a, const CurvePoint& b) {
                                       return lex_less(a, b);
                                   });
        if (it != pts.end() && *it == p) return false;
        pts.insert(it, p);
        return true;
    }
    bool contains(const CurvePoint& p) const {
        auto it = std::lower_bound(pts.begin(), pts.end(), p,
                                   [](const CurvePoint& a, const CurvePoint& b) {
                                       return lex_less(a, b);
                                   });
        return it != pts.end() && *it == p;
    }
    std::size_t size() const { return pts.size(); }
};

} // namespace

TorsionStructure torsion_structure(const Curve& e, const std::vector<CurvePoint>& hints,
                                   const TorsionOptions& opts) {
    ShortTransform st(e);
    const Curve& s = st.curve();

    PointSet set;
    set.insert(CurvePoint::infinity());
    for (const auto& p : two_torsion(s)) set.insert(p);
    for (const auto& h : hints) {
        CurvePoint p = st.to_short(h);
        if (s.order_of_point(p, opts.max_order)) set.insert(p);
    }

    // Close under addition and halving until stable. Halving needs the full
    // 2-torsion abscissas; collect them from the set itself so that hints can
    // supply roots the generic search cannot find.
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < set.size(); ++i) {
            for (std::size_t j = i; j < set.size(); ++j) {
                CurvePoint sum = s.add(set.pts[i], set.pts[j]);
                if (set.insert(sum)) grew = true;
                if (set.size() > opts.closure_cap)
                    fail(Err::InadmissibleGroup, "closure exceeded cap " +
                                                     std::to_string(opts.closure_cap));
            }
        }
        std::vector<QuadElem> roots;
        for (const auto& p : set.pts)
            if (!p.is_infinity() && p.y().is_zero()) roots.push_back(p.x());
        if (roots.size() == 3) {
            for (std::size_t i = 0; i < set.size(); ++i) {
                const CurvePoint p = set.pts[i];
                if (p.is_infinity()) continue;
                if (!is_in_double(s, p, roots)) continue;
                CurvePoint h = halve(s, p, roots);
                if (s.order_of_point(h, opts.max_order)) {
                    if (set.insert(h)) grew = true;
                }
                if (set.size() > opts.closure_cap)
                    fail(Err::InadmissibleGroup, "closure exceeded cap " +
                                                     std::to_string(opts.closure_cap));
            }
        }
    }

    int order = static_cast<int>(set.size());
    std::vector<int> orders(set.size());
    int exponent = 1;
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto o = s.order_of_point(set.pts[i], order);
        if (!o) fail(Err::InadmissibleGroup, "element order beyond group size");
        orders[i] = *o;
        exponent = std::max(exponent, *o);
    }
    if (order % exponent != 0)
        fail(Err::InadmissibleGroup, "group order " + std::to_string(order) +
                                         " not divisible by exponent " + std::to_string(exponent));
    int n2 = exponent;
    int n1 = order / exponent;
    if (n1 != 1 && n2 % n1 != 0)
        fail(Err::InadmissibleGroup, "invariant factors " + std::to_string(n1) + "," +
                                         std::to_string(n2));
    if (!is_admissible(n1, n2))
        fail(Err::InadmissibleGroup, "Z/" + std::to_string(n1) + " x Z/" + std::to_string(n2) +
                                         " is outside the 26-group table");

    TorsionStructure out;
    out.n1 = n1;
    out.n2 = n2;

    // deterministic generators: lexicographically first element of order n2,
    // then the first n1-order element generating the quotient
    const CurvePoint* g2 = nullptr;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (orders[i] == n2) {
            g2 = &set.pts[i];
            break;
        }
    if (!g2) fail(Err::InadmissibleGroup, "no element of exponent order");
    if (n1 == 1) {
        out.generators = {st.from_short(*g2)};
        return out;
    }
    PointSet cyc;
    CurvePoint acc = CurvePoint::infinity();
    for (int i = 0; i < n2; ++i) {
        cyc.insert(acc);
        acc = s.add(acc, *g2);
    }
    for (std::size_t pi = 0; pi < set.size(); ++pi) {
        const CurvePoint& p = set.pts[pi];
        if (orders[pi] != n1) continue;
        bool indep = true;
        CurvePoint q = p;
        for (int i = 1; i < n1; ++i) {
            if (cyc.contains(q)) {
                indep = false;
                break;
            }
            q = s.add(q, p);
        }
        if (!indep) continue;
        // verify span: |<p, g2>| = n1*n2
        PointSet span;
        CurvePoint a = CurvePoint::infinity();
        for (int i = 0; i < n1; ++i) {
            CurvePoint b = a;
            for (int j = 0; j < n2; ++j) {
                span.insert(b);
                b = s.add(b, *g2);
            }
            a = s.add(a, p);
        }
        if (static_cast<int>(span.size()) == order) {
            out.generators = {st.from_short(p), st.from_short(*g2)};
            return out;
        }
    }
    fail(Err::InadmissibleGroup, "no independent generator pair found");
}

} // namespace dio
