#include "satopo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "satopo/infinity.hpp"
#include "satopo/profile.hpp"

namespace satopo {

namespace {

const int kPixels = 600;
const int kGrid = 240;

struct View {
    double half = 3;
    double px(double x) const { return (x + half) / (2 * half) * kPixels; }
    double py(double y) const { return (half - y) / (2 * half) * kPixels; }
};

double eval_d(const BPoly& p, double x, double y) {
    double acc = 0;
    for (const auto& [e, c] : p.terms()) acc += c.get_d() * std::pow(x, e.first) * std::pow(y, e.second);
    return acc;
}

// Marching squares on a kGrid x kGrid grid; saddle cells get both
// diagonals, which is good enough for a picture.
void contour(std::ostringstream& os, const View& v, const BPoly& p, double level, const char* style) {
    const double h = 2 * v.half / kGrid;
    std::vector<double> val((kGrid + 1) * (kGrid + 1));
    for (int i = 0; i <= kGrid; ++i)
        for (int j = 0; j <= kGrid; ++j) val[i * (kGrid + 1) + j] = eval_d(p, -v.half + i * h, -v.half + j * h) - level;
    os << "<path " << style << " d=\"";
    for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
            double c[4] = {val[i * (kGrid + 1) + j], val[(i + 1) * (kGrid + 1) + j], val[(i + 1) * (kGrid + 1) + j + 1],
                           val[i * (kGrid + 1) + j + 1]};
            double cx[4] = {0, 1, 1, 0}, cy[4] = {0, 0, 1, 1};
            std::vector<std::pair<double, double>> hits;
            for (int k = 0; k < 4; ++k) {
                int l = (k + 1) % 4;
                if ((c[k] < 0) != (c[l] < 0)) {
                    double t = c[k] / (c[k] - c[l]);
                    hits.push_back({-v.half + (i + cx[k] + t * (cx[l] - cx[k])) * h, -v.half + (j + cy[k] + t * (cy[l] - cy[k])) * h});
                }
            }
            for (size_t k = 0; k + 1 < hits.size(); k += 2)
                os << "M" << v.px(hits[k].first) << "," << v.py(hits[k].second) << "L" << v.px(hits[k + 1].first) << ","
                   << v.py(hits[k + 1].second);
        }
    }
    os << "\"/>\n";
}

void header(std::ostringstream& os, const View& v) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kPixels << "\" height=\"" << kPixels << "\" viewBox=\"0 0 " << kPixels
       << " " << kPixels << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"0\" y1=\"" << v.py(0) << "\" x2=\"" << kPixels << "\" y2=\"" << v.py(0) << "\" stroke=\"#ddd\"/>\n";
    os << "<line x1=\"" << v.px(0) << "\" y1=\"0\" x2=\"" << v.px(0) << "\" y2=\"" << kPixels << "\" stroke=\"#ddd\"/>\n";
}

void marker(std::ostringstream& os, const View& v, double x, double y, const char* colour, const std::string& label) {
    os << "<circle cx=\"" << v.px(x) << "\" cy=\"" << v.py(y) << "\" r=\"5\" fill=\"" << colour << "\"><title>" << label
       << "</title></circle>\n";
}

std::string escape(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string render_svg(const BPoly& f, unsigned seed) {
    std::vector<CriticalPoint> cps = find_critical_points(f);
    View v;
    for (auto& p : cps) v.half = std::max(v.half, 1.5 * std::max(std::fabs(p.point.approx_x()), std::fabs(p.point.approx_y())));
    std::ostringstream os;
    header(os, v);
    std::vector<AlgNumber> bps = fibration_breakpoints(f, seed);
    for (const Rat& s : separating_samples(bps)) contour(os, v, f, s.get_d(), "fill=\"none\" stroke=\"#7aa6d8\" stroke-width=\"1\"");
    for (const auto& b : bps) contour(os, v, f, b.approx(), "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\"");
    Point a = generic_basepoint(f, seed);
    contour(os, v, gamma_polynomial(f, a).h, 0, "fill=\"none\" stroke=\"#555\" stroke-dasharray=\"4 3\" stroke-width=\"1\"");
    if (auto R = try_certified_radius(f, a)) {
        double r = R->get_d();
        if (r < 4 * v.half)
            os << "<circle cx=\"" << v.px(a.first.get_d()) << "\" cy=\"" << v.py(a.second.get_d()) << "\" r=\"" << r / (2 * v.half) * kPixels
               << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"2 4\"/>\n";
        os << "<text x=\"8\" y=\"" << kPixels - 8 << "\" font-size=\"12\">certified radius " << escape(R->get_str()) << "</text>\n";
    }
    for (auto& p : cps) {
        const char* colour = p.local_degree > 0 ? "#27ae60" : p.local_degree < 0 ? "#8e44ad" : "#333";
        marker(os, v, p.point.approx_x(), p.point.approx_y(), colour, "deg " + std::to_string(p.local_degree) + ", value " + p.value.str());
    }
    os << "<text x=\"8\" y=\"16\" font-size=\"12\">f = " << escape(f.str()) << "</text>\n</svg>\n";
    return os.str();
}

std::string render_svg(const PlaneSet& X) {
    View v;
    std::vector<StratCriticalPoint> pts;
    try {
        pts = stratified_critical_points(X, BPoly::x());
    } catch (const Error&) {
    }
    for (auto& p : pts) v.half = std::max(v.half, 1.5 * std::max(std::fabs(p.point.approx_x()), std::fabs(p.point.approx_y())));
    std::ostringstream os;
    header(os, v);
    if (X.kind == PlaneSet::Kind::Region) {
        const double h = 2 * v.half / kGrid, s = h / (2 * v.half) * kPixels;
        os << "<g fill=\"#d6e6f5\">\n";
        for (int i = 0; i < kGrid; ++i)
            for (int j = 0; j < kGrid; ++j) {
                double x = -v.half + (i + 0.5) * h, y = -v.half + (j + 0.5) * h;
                if (eval_d(X.g, x, y) <= 0) os << "<rect x=\"" << v.px(x - h / 2) << "\" y=\"" << v.py(y + h / 2) << "\" width=\"" << s << "\" height=\"" << s << "\"/>\n";
            }
        os << "</g>\n";
    }
    contour(os, v, X.g, 0, "fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2\"");
    for (auto& p : pts)
        marker(os, v, p.point.approx_x(), p.point.approx_y(), p.index != 0 ? "#c0392b" : "#999",
               "ind(x) " + std::to_string(p.index) + ", lambda sign " + std::to_string(p.lambda_sign));
    os << "<text x=\"8\" y=\"16\" font-size=\"12\">" << (X.kind == PlaneSet::Kind::Region ? "{" : "{") << escape(X.g.str())
       << (X.kind == PlaneSet::Kind::Region ? " &lt;= 0}" : " = 0}") << ", v* = x</text>\n</svg>\n";
    return os.str();
}

}  // namespace satopo
