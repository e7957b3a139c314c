#pragma once

// Published hypersurfaces in P^4 with known defect. Constructions are the
// Singular input lines, with w = -x-y-z-u-v inlined for the van Straten quintic.

#include <optional>
#include <string>
#include <vector>

namespace poledefect {

struct Fixture {
    std::string name;
    std::string expression;
    unsigned d;
    long gamma;
    long defect;
    std::optional<long> singular_points;
    std::string notes;

    bool slow() const { return d >= 6; }
};

namespace detail {

inline std::string subst_difference(const std::string& g) {
    return "(" + g + ")-subst(" + g + ",x,u,y,v)";
}

inline std::string van_straten_quintic() {
    const std::string w = "(-x-y-z-u-v)";
    return "-(x^5+y^5+z^5+u^5+v^5+" + w + "^5)+10*(x*y*z*u*v+x*y*z*u*" + w + "+x*y*z*v*" + w + "+x*y*u*v*" + w +
           "+x*z*u*v*" + w + "+y*z*u*v*" + w + ")";
}

} // namespace detail

inline const std::vector<Fixture>& published_fixtures() {
    static const std::vector<Fixture> fixtures = {
        {"quintic-118-nodes-a", detail::subst_difference("(x+6*z)*(y^2-x^2)*(5*y^2-4*(x+z)^2)"), 5, 101, 19, 118,
         "analogue of the Hirzebruch quintic, ordinary double points"},
        {"quintic-118-nodes-b", detail::subst_difference("(x+z)*(3*y^2-(x-2*z)^2)*(5*x^2+5*y^2-8*z^2)"), 5, 101, 18,
         118, "same number of nodes as quintic-118-nodes-a in a different position"},
        {"van-straten-quintic", detail::van_straten_quintic(), 5, 101, 29, 130,
         "symmetric quintic with 130 nodes"},
        {"quintic-16-nodes", "x*(x^4+y^4+z^4+u^4+v^4)+y*(x^4-2*y^4+3*z^4-4*u^4+5*v^4)", 5, 101, 1, 16, "b = 4"},
        {"segre-cubic", "(x+y+z+u+v)^3-(x^3+y^3+z^3+u^3+v^3)", 3, 5, 5, 10, "Segre cubic, ten nodes"},
        {"quartic-one-point", "(y^2-2*x*z)^2+(y^2-2*x*z)*x^2+x^4+u^4+v^4", 4, 30, 7, 1,
         "one singular point, locally y^2+x^8+u^4+v^4"},
        {"sextic-285-nodes", "(x^2+y^2+z^2+u^2+v^2)^3-(x^6+y^6+z^6+u^6+v^6)", 6, 255, 40, 285,
         "b = 2, c = 3, ordinary double points"},
        {"sextic-90-cusps", "3*(x^6+y^6+z^6+u^6+v^6)-(x^3+y^3+z^3+u^3+v^3)^2", 6, 255, 30, 90,
         "b = 3, c = 2, ninety singular points x^3+y^3+u^2+v^2"},
    };
    return fixtures;
}

} // namespace poledefect
