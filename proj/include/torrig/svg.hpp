#ifndef TORRIG_SVG_HPP
#define TORRIG_SVG_HPP

#include <string>

#include "torrig/rational.hpp"
#include "torrig/torus.hpp"

namespace torrig {

/*
 * Static SVG drawings of a framework window: the unit cell as an outline,
 * joints as circles, bars as segments.  A bar whose far endpoint lies in a
 * cell outside the window is still drawn, dashed, to the translated copy
 * of its endpoint (class "ghost"); these dashed copies are cosmetic and
 * are not part of the window's derived graph.  With the flex overlay, the
 * first nontrivial flex is lifted onto every joint and drawn as an arrow
 * scaled so the longest arrow spans 10% of the cell.
 *
 * Frameworks with d >= 3 are projected onto the first two coordinates;
 * for d > 3 the caller must opt in explicitly or rendering refuses.
 */

struct SvgOptions {
    bool has_window = false;
    IVec lo, hi;                    // window box; defaults to {0}^d
    bool flex_overlay = false;      // draw the first nontrivial flex
    bool allow_projection = false;  // required when d > 3
};

std::string render_svg(const OrbitFramework& f, const SvgOptions& opt = {});

}  // namespace torrig

#endif  // TORRIG_SVG_HPP
