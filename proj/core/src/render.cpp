#include "curvedkit/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace curvedkit {

namespace {

struct XY {
    double x, y;
};

std::string fmt(double v) {
    if (std::abs(v) < 5e-7) v = 0;  // avoid "-0.000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void check_model(Geometry g, RenderModel m) {
    const bool ok = (m == RenderModel::Klein && g == Geometry::Hyperbolic) ||
                    (m == RenderModel::Poincare && g == Geometry::Hyperbolic) ||
                    (m == RenderModel::Stereographic && g == Geometry::Sphere) ||
                    (m == RenderModel::Planar && g == Geometry::Euclidean);
    if (!ok) throw UnsupportedGeometryError("render: model incompatible with geometry");
}

XY project(RenderModel m, const Vec3& v) {
    switch (m) {
        case RenderModel::Klein: return {v.x / v.z, v.y / v.z};
        case RenderModel::Poincare: return {v.x / (1 + v.z), v.y / (1 + v.z)};
        case RenderModel::Stereographic: {
            const double d = 1 - v.z;
            if (std::abs(d) < 1e-9)
                throw DomainError("render: point at the projection pole");
            return {2 * v.x / d, 2 * v.y / d};
        }
        case RenderModel::Planar: return {v.x, v.y};
    }
    throw DomainError("render: bad model");
}

bool disk_model(RenderModel m) {
    return m == RenderModel::Klein || m == RenderModel::Poincare;
}

// circumcircle through three points; false when nearly collinear
bool circumcircle(const XY& a, const XY& b, const XY& c, XY& center, double& r) {
    const double d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    const double scale = std::abs(a.x) + std::abs(a.y) + std::abs(b.x) + std::abs(b.y) +
                         std::abs(c.x) + std::abs(c.y) + 1;
    if (std::abs(d) < 1e-9 * scale * scale) return false;
    const double a2 = a.x * a.x + a.y * a.y;
    const double b2 = b.x * b.x + b.y * b.y;
    const double c2 = c.x * c.x + c.y * c.y;
    center.x = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    center.y = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    r = std::hypot(a.x - center.x, a.y - center.y);
    return true;
}

struct Canvas {
    std::ostringstream body;
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;

    void bump(const XY& p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }

    void line(const XY& a, const XY& b, const char* cls) {
        bump(a);
        bump(b);
        body << "<line class=\"" << cls << "\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y)
             << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\"/>\n";
    }
    void circle(const XY& c, double r, const char* cls) {
        bump({c.x - r, c.y - r});
        bump({c.x + r, c.y + r});
        body << "<circle class=\"" << cls << "\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y)
             << "\" r=\"" << fmt(r) << "\"/>\n";
    }
    void dot(const XY& c, double r, const char* cls) {
        body << "<circle class=\"" << cls << "\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y)
             << "\" r=\"" << fmt(r) << "\" fill=\"currentColor\"/>\n";
    }
    void polyline(const std::vector<XY>& pts, const char* cls) {
        if (pts.size() < 2) return;
        body << "<polyline class=\"" << cls << "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body << ' ';
            body << fmt(pts[i].x) << ',' << fmt(pts[i].y);
            bump(pts[i]);
        }
        body << "\"/>\n";
    }
};

std::vector<XY> sample_cycle(const Cycle& c, RenderModel m, double t0, double t1, int n) {
    std::vector<XY> pts;
    pts.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double t = t0 + (t1 - t0) * k / n;
        try {
            pts.push_back(project(m, c.point_at(t).coords()));
        } catch (const DomainError&) {
            // stereographic pole; drop the sample
        }
    }
    return pts;
}

// full-cycle drawing, using exact SVG primitives where the model image is one
void draw_cycle(Canvas& cv, const Cycle& c, RenderModel m, const char* cls) {
    const CycleType type = c.kind().type;
    const bool compact = c.compact();

    if (m == RenderModel::Planar) {
        if (type == CycleType::Circle) {
            cv.circle({c.normal().x, c.normal().y}, c.offset(), cls);
        } else {
            const double ext = 20;
            cv.line(project(m, c.point_at(-ext).coords()),
                    project(m, c.point_at(ext).coords()), cls);
        }
        return;
    }

    if (m == RenderModel::Klein) {
        if (type == CycleType::Geodesic) {
            cv.line(project(m, c.ideal_end(-1).direction()),
                    project(m, c.ideal_end(+1).direction()), cls);
            return;
        }
        cv.polyline(sample_cycle(c, m, compact ? 0 : -8, compact ? 2 * M_PI : 8, 256), cls);
        return;
    }

    if (m == RenderModel::Poincare && (type == CycleType::Circle || type == CycleType::Paracycle)) {
        // the conformal image of a circle or paracycle is a Euclidean circle
        const double ts = compact ? 2 * M_PI / 3 : 2.0;
        const XY a = project(m, c.point_at(0).coords());
        const XY b = project(m, c.point_at(ts).coords());
        const XY d = project(m, c.point_at(2 * ts).coords());
        XY center;
        double r;
        if (circumcircle(a, b, d, center, r)) {
            cv.circle(center, r, cls);
            return;
        }
    }

    // general fallback: dense polyline (exact enough at 512 segments)
    if (compact) {
        cv.polyline(sample_cycle(c, m, 0, 2 * M_PI, 512), cls);
    } else {
        cv.polyline(sample_cycle(c, m, -20, 20, 512), cls);
    }
}

std::string finish(Canvas& cv, RenderModel m) {
    std::ostringstream out;
    double x0, y0, w, h;
    if (disk_model(m)) {
        x0 = y0 = -1.2;
        w = h = 2.4;
    } else {
        if (cv.min_x > cv.max_x) {
            cv.min_x = cv.min_y = -1;
            cv.max_x = cv.max_y = 1;
        }
        const double cx = (cv.min_x + cv.max_x) / 2, cy = (cv.min_y + cv.max_y) / 2;
        const double half =
            std::max({cv.max_x - cv.min_x, cv.max_y - cv.min_y, 0.5}) / 2 * 1.15;
        x0 = cx - half;
        y0 = cy - half;
        w = h = 2 * half;
    }
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" "
           "height=\"512\" viewBox=\""
        << fmt(x0) << ' ' << fmt(y0) << ' ' << fmt(w) << ' ' << fmt(h) << "\">\n"
        << "<style>line,circle,polyline,path{fill:none;stroke:#202020;stroke-width:"
        << fmt(w / 400)
        << "}.boundary{stroke:#9090a0}.component{stroke:#1f63b4}.arc{stroke:#c03535}."
           "vertex{stroke:none}</style>\n";
    if (disk_model(m)) out << "<circle class=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\"/>\n";
    out << cv.body.str() << "</svg>\n";
    return out.str();
}

}  // namespace

RenderModel render_model_from_string(const std::string& s) {
    if (s == "klein") return RenderModel::Klein;
    if (s == "poincare") return RenderModel::Poincare;
    if (s == "stereographic") return RenderModel::Stereographic;
    if (s == "planar") return RenderModel::Planar;
    throw InvalidSpecError("unknown render model '" + s + "'");
}

std::string render_region_svg(const ConvexRegion& region, RenderModel model) {
    check_model(region.geometry(), model);
    Canvas cv;
    for (const auto& c : region.components()) draw_cycle(cv, c, model, "component");
    if (region.geometry() == Geometry::Hyperbolic)
        for (const auto& c : region.components())
            for (const auto& w : c.ideal_points())
                cv.dot(project(model, w.direction()), 0.015, "vertex");
    return finish(cv, model);
}

std::string render_intersection_svg(const IntersectionRegion& I, RenderModel model) {
    check_model(I.geometry, model);
    Canvas cv;
    for (const auto& c : I.region_a.components()) draw_cycle(cv, c, model, "component");
    for (const auto& c : I.region_b.components()) draw_cycle(cv, c, model, "component");
    const auto draw_arc = [&](const Arc& a) {
        if (a.whole) {
            draw_cycle(cv, a.support, model, "arc");
            return;
        }
        cv.polyline(sample_cycle(a.support, model, a.t0, a.t1, 128), "arc");
    };
    for (const auto& ch : I.chains)
        for (const auto& a : ch.arcs) draw_arc(a);
    for (const auto& w : I.whole_components) draw_arc(w);
    for (const auto& p : I.finite_vertices)
        cv.dot(project(model, p.coords()), 0.015, "vertex");
    if (I.geometry == Geometry::Hyperbolic)
        for (const auto& w : I.ideal_vertices())
            cv.dot(project(model, w.direction()), 0.015, "vertex");
    return finish(cv, model);
}

}  // namespace curvedkit
