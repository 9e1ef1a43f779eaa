#include "hylab/plot.hpp"
#include "hylab/csv.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hylab {

namespace {
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
}

std::string svg_line_chart(const std::string& title, const std::vector<PlotSeries>& series,
                           bool logx, bool logy) {
    const double W = 600, H = 400, ml = 60, mr = 20, mt = 30, mb = 40;
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    auto tx = [&](double v) { return logx ? std::log10(v) : v; };
    auto ty = [&](double v) { return logy ? std::log10(v) : v; };
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xlo = std::min(xlo, tx(s.x[i]));
            xhi = std::max(xhi, tx(s.x[i]));
            ylo = std::min(ylo, ty(s.y[i]));
            yhi = std::max(yhi, ty(s.y[i]));
        }
    if (!(xhi > xlo)) xhi = xlo + 1;
    if (!(yhi > ylo)) yhi = ylo + 1;
    const double padx = 0.05 * (xhi - xlo), pady = 0.05 * (yhi - ylo);
    xlo -= padx;
    xhi += padx;
    ylo -= pady;
    yhi += pady;
    auto px = [&](double v) { return ml + (tx(v) - xlo) / (xhi - xlo) * (W - ml - mr); };
    auto py = [&](double v) { return H - mb - (ty(v) - ylo) / (yhi - ylo) * (H - mt - mb); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">"
        << title << "</text>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
        << H - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";
    // axis labels (data range, not tick marks)
    out << "<text x=\"" << ml << "\" y=\"" << H - mb + 16 << "\" font-size=\"10\">"
        << fmt_g17(logx ? std::pow(10.0, xlo) : xlo) << "</text>\n";
    out << "<text x=\"" << W - mr << "\" y=\"" << H - mb + 16
        << "\" text-anchor=\"end\" font-size=\"10\">"
        << fmt_g17(logx ? std::pow(10.0, xhi) : xhi) << "</text>\n";
    out << "<text x=\"" << ml - 4 << "\" y=\"" << H - mb << "\" text-anchor=\"end\" font-size=\"10\">"
        << fmt_g17(logy ? std::pow(10.0, ylo) : ylo) << "</text>\n";
    out << "<text x=\"" << ml - 4 << "\" y=\"" << mt + 8
        << "\" text-anchor=\"end\" font-size=\"10\">" << fmt_g17(logy ? std::pow(10.0, yhi) : yhi)
        << "</text>\n";

    int ci = 0;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[ci % 6]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << W - mr - 4 << "\" y=\"" << mt + 14 + 14 * ci
            << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << kColors[ci % 6] << "\">"
            << s.label << "</text>\n";
        ++ci;
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace hylab
