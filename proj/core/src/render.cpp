#include "padicfam/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace padicfam {

namespace {

double approx(const Rational& r) { return r.get_d(); }

struct Canvas {
    double sx = 30.0;    // px per horizontal unit (one i step)
    double sy = 110.0;   // px per ramp
    double ml = 90.0, mr = 70.0, mt = 25.0, mb = 25.0;
    double e, stop;

    double x(double i) const { return ml + i * sx; }
    double y(double s) const { return mt + (stop - s) * sy; }
    double width() const { return ml + e * sx + mr; }
    double height() const { return mt + stop * sy + mb; }
};

void marker(std::ostringstream& os, const Canvas& cv, const DiagramPoint& pt,
            const EisensteinDiagram& d) {
    double cx = cv.x(pt.i);
    double cy = cv.y(approx(pt.height));
    const double r = 5.0;
    switch (pt.kind) {
        case PointKind::DCritical:
        case PointKind::DNegligible: {
            bool solid = pt.kind == PointKind::DCritical;
            os << "<polygon class=\"d-point " << (solid ? "critical" : "negligible") << "\" points=\"";
            for (int v = 0; v < 5; ++v) {
                double ang = -1.5707963 + v * 2 * 3.14159265 / 5;
                os << cx + 1.3 * r * std::cos(ang) << "," << cy + 1.3 * r * std::sin(ang) << " ";
            }
            os << "\" fill=\"" << (solid ? "olive" : "none")
               << "\" stroke=\"olive\" stroke-width=\"1.5\"/>\n";
            break;
        }
        case PointKind::A:
            os << "<rect class=\"a-point\" x=\"" << cx - r << "\" y=\"" << cy - r
               << "\" width=\"" << 2 * r << "\" height=\"" << 2 * r << "\" fill=\"green\"/>\n";
            break;
        case PointKind::B:
            os << "<circle class=\"b-point\" cx=\"" << cx << "\" cy=\"" << cy
               << "\" r=\"" << r << "\" fill=\"blue\"/>\n";
            break;
        case PointKind::CCritical:
        case PointKind::CNegligible: {
            bool solid = pt.kind == PointKind::CCritical;
            os << "<polygon class=\"c-point " << (solid ? "critical" : "negligible")
               << "\" points=\"" << cx << "," << cy - 1.3 * r << " " << cx + 1.3 * r << "," << cy
               << " " << cx << "," << cy + 1.3 * r << " " << cx - 1.3 * r << "," << cy
               << "\" fill=\"" << (solid ? "red" : "none")
               << "\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
            break;
        }
        case PointKind::Z:
            break;
    }
    (void)d;
}

}  // namespace

std::string render_svg(const EisensteinDiagram& d) {
    long e = d.inv.e();
    Rational stop_r = d.inv.w() == 0 ? Rational(1) : d.inv.slopes().back();
    Canvas cv;
    cv.e = static_cast<double>(e);
    cv.stop = approx(stop_r);
    if (cv.stop <= 0) cv.stop = 1.0;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cv.width()
       << "\" height=\"" << cv.height() << "\">\n";
    os << "<rect class=\"strip\" x=\"" << cv.x(0) << "\" y=\"" << cv.y(cv.stop) << "\" width=\""
       << e * cv.sx << "\" height=\"" << cv.stop * cv.sy
       << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"0.5\"/>\n";

    // spiral ramps: j-th ramp goes from (0,j) to (e,j+1)
    long jmax = static_cast<long>(std::ceil(cv.stop));
    for (long j = 0; j < std::max<long>(jmax, 1); ++j) {
        os << "<line class=\"ramp\" x1=\"" << cv.x(0) << "\" y1=\"" << cv.y(j) << "\" x2=\""
           << cv.x(cv.e) << "\" y2=\"" << cv.y(j + 1)
           << "\" stroke=\"#bbb\" stroke-width=\"0.7\"/>\n";
    }

    // band rectangles; stacked translucent gray darkens overlaps
    for (const auto& b : d.bands) {
        double bot = approx(b.bottom), top = approx(b.top);
        os << "<rect class=\"band\" x=\"" << cv.x(0) << "\" y=\"" << cv.y(top) << "\" width=\""
           << e * cv.sx << "\" height=\"" << (top - bot) * cv.sy
           << "\" fill=\"#999\" fill-opacity=\"0.18\"/>\n";
    }
    // edges; dash when a top coincides with some bottom (or vice versa)
    for (const auto& b : d.bands) {
        bool top_meets_bottom = false, bottom_meets_top = false;
        for (const auto& o : d.bands) {
            if (o.bottom == b.top) top_meets_bottom = true;
            if (o.top == b.bottom) bottom_meets_top = true;
        }
        os << "<line class=\"band-bottom\" x1=\"" << cv.x(0) << "\" y1=\"" << cv.y(approx(b.bottom))
           << "\" x2=\"" << cv.x(cv.e) << "\" y2=\"" << cv.y(approx(b.bottom))
           << "\" stroke=\"green\" stroke-width=\"1.5\""
           << (bottom_meets_top ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
        os << "<line class=\"band-top\" x1=\"" << cv.x(0) << "\" y1=\"" << cv.y(approx(b.top))
           << "\" x2=\"" << cv.x(cv.e) << "\" y2=\"" << cv.y(approx(b.top))
           << "\" stroke=\"black\" stroke-width=\"1.5\""
           << (top_meets_bottom ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
        if (b.arithmetic) {
            double mid = (approx(b.bottom) + approx(b.top)) / 2;
            os << "<line class=\"arith-tick\" x1=\"" << cv.x(cv.e) << "\" y1=\""
               << cv.y(approx(b.bottom)) << "\" x2=\"" << cv.x(cv.e) << "\" y2=\""
               << cv.y(approx(b.top)) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
            (void)mid;
        }
    }

    // labels: decimal m_k/s_k at the right, scaled e m_k / e s_k in the left column,
    // r_k to the immediate right of each band top
    for (const auto& b : d.bands) {
        os << "<text class=\"mean-label\" x=\"" << cv.x(0) - 44 << "\" y=\""
           << cv.y(approx(b.bottom)) + 4 << "\" font-size=\"10\" fill=\"green\">"
           << rational_to_decimal(b.bottom) << "</text>\n";
        os << "<text class=\"slope-label\" x=\"" << cv.x(0) - 44 << "\" y=\""
           << cv.y(approx(b.top)) + 4 << "\" font-size=\"10\">"
           << rational_to_decimal(b.top) << "</text>\n";
        os << "<text class=\"scaled-mean-label\" x=\"" << cv.x(0) - 86 << "\" y=\""
           << cv.y(approx(b.bottom)) + 4 << "\" font-size=\"10\" fill=\"green\">"
           << rational_to_string(Rational(d.inv.e()) * b.bottom) << "</text>\n";
        os << "<text class=\"scaled-slope-label\" x=\"" << cv.x(0) - 86 << "\" y=\""
           << cv.y(approx(b.top)) + 4 << "\" font-size=\"10\">"
           << rational_to_string(Rational(d.inv.e()) * b.top) << "</text>\n";
        os << "<text class=\"ram-label\" x=\"" << cv.x(cv.e) + 8 << "\" y=\""
           << cv.y(approx(b.top)) + 4 << "\" font-size=\"10\" fill=\"blue\">"
           << rational_to_string(d.inv.rams()[b.k - 1]) << "</text>\n";
    }

    for (const auto& pt : d.points)
        if (is_drawn(pt.kind)) marker(os, cv, pt, d);

    os << "</svg>\n";
    return os.str();
}

void render_svg_file(const EisensteinDiagram& d, const std::string& out_path) {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("render_svg_file: cannot open " + out_path);
    f << render_svg(d);
    if (!f) throw std::runtime_error("render_svg_file: write failure on " + out_path);
}

std::string render_ascii(const EisensteinDiagram& d) {
    long e = d.inv.e();
    long sigma_max = d.points.empty() ? 0 : d.points.back().sigma;
    long jmax = sigma_max / e;  // topmost ramp that carries a point
    std::ostringstream os;
    for (long j = jmax; j >= 0; --j) {
        std::string row(static_cast<size_t>(e), ' ');
        for (long i = 0; i < e; ++i) {
            long sigma = j * e + i;
            if (sigma > sigma_max) break;
            char c = ' ';
            switch (d.points[sigma].kind) {
                case PointKind::DCritical: c = 'D'; break;
                case PointKind::DNegligible: c = 'd'; break;
                case PointKind::A: c = 'A'; break;
                case PointKind::B: c = 'B'; break;
                case PointKind::CCritical: c = 'C'; break;
                case PointKind::CNegligible: c = 'c'; break;
                case PointKind::Z: c = '.'; break;
            }
            row[static_cast<size_t>(i)] = c;
        }
        os << row << "\n";
    }
    return os.str();
}

}  // namespace padicfam
