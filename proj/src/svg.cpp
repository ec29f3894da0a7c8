#include "torrig/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "torrig/derived.hpp"
#include "torrig/errors.hpp"
#include "torrig/rigidity.hpp"

namespace torrig {
namespace {

struct Pt {
    double x = 0, y = 0;
};

// First two physical coordinates of (v, z); the projection for d >= 3.
Pt project(const OrbitFramework& f, int v, const IVec& z) {
    const int d = f.graph.d;
    QVec shifted(d);
    for (int c = 0; c < d; ++c) shifted[c] = f.coords[v][c] + Rat(z[c]);
    QVec phys = f.torus.L.row_times(shifted);
    Pt p;
    p.x = phys[0].get_d();
    p.y = d >= 2 ? phys[1].get_d() : 0.0;
    return p;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    // avoid the "-0.00" artifact so output is stable across platforms
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

}  // namespace

std::string render_svg(const OrbitFramework& f, const SvgOptions& opt) {
    f.validate(true);
    const int d = f.graph.d;
    if (d > 3 && !opt.allow_projection)
        throw structure_error(
            "drawing a d > 3 framework projects away " + std::to_string(d - 2) +
            " coordinates; pass the projection flag to accept that");

    IVec lo = opt.has_window ? opt.lo : ivec_zero(d);
    IVec hi = opt.has_window ? opt.hi : ivec_zero(d);
    DerivedWindow w = expand_window(f, lo, hi);

    // Ghost bars: fiber edges whose tail cell is inside the window but whose
    // head cell is not; drawn to the translated copy outside.
    struct Ghost {
        Pt a, b;
    };
    std::vector<Ghost> ghosts;
    {
        IVec z = lo;
        bool more = true;
        while (more) {
            for (int ei = 0; ei < static_cast<int>(f.graph.edges.size()); ++ei) {
                const Edge& e = f.graph.edges[ei];
                IVec z2 = z + e.gain;
                bool inside = true;
                for (int c = 0; c < d; ++c)
                    if (z2[c] < lo[c] || z2[c] > hi[c]) inside = false;
                if (inside) continue;
                ghosts.push_back({project(f, e.tail, z), project(f, e.head, z2)});
            }
            int i = d - 1;
            while (i >= 0 && z[i] == hi[i]) {
                z[i] = lo[i];
                --i;
            }
            if (i < 0) more = false;
            else z[i] += 1;
        }
    }

    // Cell outline: the parallelogram spanned by the first two lattice rows
    // (a segment when d = 1).
    std::vector<Pt> cell;
    {
        double r1x = f.torus.L(0, 0).get_d();
        double r1y = d >= 2 ? f.torus.L(0, 1).get_d() : 0.0;
        if (d == 1) {
            cell = {{0, 0}, {r1x, 0}};
        } else {
            double r2x = f.torus.L(1, 0).get_d();
            double r2y = f.torus.L(1, 1).get_d();
            cell = {{0, 0}, {r1x, r1y}, {r1x + r2x, r1y + r2y}, {r2x, r2y}};
        }
    }

    std::vector<Pt> joints;
    for (const DerivedVertex& dv : w.vertices)
        joints.push_back({dv.position[0].get_d(),
                          d >= 2 ? dv.position[1].get_d() : 0.0});

    // Flex overlay: lift the first nontrivial flex to every joint.
    std::vector<Pt> arrows;  // displacement per joint, drawing units
    if (opt.flex_overlay) {
        FlexBasis fb = flex_basis(f);
        if (!fb.vectors.empty()) {
            const QVec& u = fb.vectors.front();
            double cw = 0, ch = 0;
            for (const Pt& c : cell) {
                cw = std::max(cw, std::fabs(c.x));
                ch = std::max(ch, std::fabs(c.y));
            }
            double target = 0.10 * std::max({cw, ch, 1e-9});
            double maxlen = 0;
            std::vector<Pt> raw;
            for (const DerivedVertex& dv : w.vertices) {
                Pt a;
                a.x = u[static_cast<std::size_t>(d) * dv.vertex + 0].get_d();
                a.y = d >= 2 ? u[static_cast<std::size_t>(d) * dv.vertex + 1].get_d() : 0.0;
                maxlen = std::max(maxlen, std::hypot(a.x, a.y));
                raw.push_back(a);
            }
            double s = maxlen > 0 ? target / maxlen : 0.0;
            for (Pt& a : raw) arrows.push_back({a.x * s, a.y * s});
        }
    }

    // Bounding box over everything drawn, with a 5% margin.
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    auto grow = [&](const Pt& p) {
        if (first) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            first = false;
            return;
        }
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    for (const Pt& p : cell) grow(p);
    for (const Pt& p : joints) grow(p);
    for (const Ghost& gh : ghosts) {
        grow(gh.a);
        grow(gh.b);
    }
    for (std::size_t i = 0; i < arrows.size(); ++i)
        grow({joints[i].x + arrows[i].x, joints[i].y + arrows[i].y});
    double span = std::max({xmax - xmin, ymax - ymin, 1e-6});
    double margin = 0.05 * span;

    // Physical coordinates -> drawing units: scale by 100, flip y so the
    // picture matches the mathematical orientation.
    const double k = 100.0;
    auto X = [&](double x) { return (x - xmin + margin) * k; };
    auto Y = [&](double y) { return (ymax - y + margin) * k; };
    double width = (xmax - xmin + 2 * margin) * k;
    double height = (ymax - ymin + 2 * margin) * k;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(width)
        << " " << fmt(height) << "\">\n";
    out << "<defs><marker id=\"ah\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#c0392b\"/></marker></defs>\n";

    if (d == 1) {
        out << "<line class=\"cell\" x1=\"" << fmt(X(cell[0].x)) << "\" y1=\""
            << fmt(Y(cell[0].y)) << "\" x2=\"" << fmt(X(cell[1].x)) << "\" y2=\""
            << fmt(Y(cell[1].y)) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    } else {
        out << "<polygon class=\"cell\" points=\"";
        for (std::size_t i = 0; i < cell.size(); ++i) {
            if (i) out << ' ';
            out << fmt(X(cell[i].x)) << ',' << fmt(Y(cell[i].y));
        }
        out << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }

    for (const DerivedEdge& de : w.edges) {
        const Pt a = {w.vertices[de.a].position[0].get_d(),
                      d >= 2 ? w.vertices[de.a].position[1].get_d() : 0.0};
        const Pt b = {w.vertices[de.b].position[0].get_d(),
                      d >= 2 ? w.vertices[de.b].position[1].get_d() : 0.0};
        out << "<line class=\"bar\" x1=\"" << fmt(X(a.x)) << "\" y1=\"" << fmt(Y(a.y))
            << "\" x2=\"" << fmt(X(b.x)) << "\" y2=\"" << fmt(Y(b.y))
            << "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
    }
    for (const Ghost& gh : ghosts) {
        out << "<line class=\"ghost\" x1=\"" << fmt(X(gh.a.x)) << "\" y1=\""
            << fmt(Y(gh.a.y)) << "\" x2=\"" << fmt(X(gh.b.x)) << "\" y2=\""
            << fmt(Y(gh.b.y))
            << "\" stroke=\"#888888\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
    }
    for (const Pt& p : joints) {
        out << "<circle class=\"joint\" cx=\"" << fmt(X(p.x)) << "\" cy=\""
            << fmt(Y(p.y)) << "\" r=\"4\" fill=\"#0a58a5\"/>\n";
    }
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const Pt& p = joints[i];
        out << "<line class=\"arrow\" x1=\"" << fmt(X(p.x)) << "\" y1=\"" << fmt(Y(p.y))
            << "\" x2=\"" << fmt(X(p.x + arrows[i].x)) << "\" y2=\""
            << fmt(Y(p.y + arrows[i].y))
            << "\" stroke=\"#c0392b\" stroke-width=\"2\" marker-end=\"url(#ah)\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace torrig
