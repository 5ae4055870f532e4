#include "obddlab/plot.hpp"

#include "obddlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace obddlab {

namespace {

std::vector<std::string> splitLine(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

const char* columnFor(PlotKind kind) {
    switch (kind) {
    case PlotKind::SatFraction: return "satisfiable";
    case PlotKind::TwRegime: return "twUpper";
    case PlotKind::ObddSizeMedian: return "obddSize";
    case PlotKind::ThetaFraction: return "thetaPrefix";
    }
    return "";
}

const char* yLabel(PlotKind kind) {
    switch (kind) {
    case PlotKind::SatFraction: return "fraction satisfiable";
    case PlotKind::TwRegime: return "median twUpper";
    case PlotKind::ObddSizeMedian: return "median OBDD size (log10)";
    case PlotKind::ThetaFraction: return "fraction theta >= 2/3";
    }
    return "";
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

} // namespace

PlotKind parsePlotKind(const std::string& name) {
    for (auto k : {PlotKind::SatFraction, PlotKind::TwRegime, PlotKind::ObddSizeMedian, PlotKind::ThetaFraction})
        if (toString(k) == name)
            return k;
    throw Error("unknown plot kind '" + name + "' (satFraction, twRegime, obddSizeMedian, thetaFraction)");
}

std::string toString(PlotKind kind) {
    switch (kind) {
    case PlotKind::SatFraction: return "satFraction";
    case PlotKind::TwRegime: return "twRegime";
    case PlotKind::ObddSizeMedian: return "obddSizeMedian";
    case PlotKind::ThetaFraction: return "thetaFraction";
    }
    return "";
}

std::vector<PlotSeries> plotSeries(const std::string& csvText, PlotKind kind) {
    std::istringstream in(csvText);
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line))
        if (!line.empty()) {
            header = splitLine(line);
            break;
        }
    auto col = [&](const std::string& name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw SchemaError("CSV is missing column '" + name + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t cn = col("n"), cd = col("delta"), cv = col(columnFor(kind));

    // (n, delta) -> raw cells
    std::map<std::size_t, std::map<double, std::vector<std::string>>> cells;
    std::size_t lineNo = 1;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty())
            continue;
        const auto row = splitLine(line);
        if (row.size() != header.size())
            throw SchemaError("row " + std::to_string(lineNo) + " has " + std::to_string(row.size()) +
                              " cells, header has " + std::to_string(header.size()));
        try {
            cells[std::stoul(row[cn])][std::stod(row[cd])].push_back(row[cv]);
        } catch (const std::logic_error&) {
            throw SchemaError("row " + std::to_string(lineNo) + ": n and delta must be numeric");
        }
    }

    std::vector<PlotSeries> out;
    for (const auto& [n, byDelta] : cells) {
        PlotSeries s;
        s.n = n;
        for (const auto& [delta, values] : byDelta) {
            PlotPoint p;
            p.delta = delta;
            std::vector<double> xs;
            std::size_t blowups = 0, hits = 0;
            for (const auto& v : values) {
                if (v == "NA")
                    continue;
                if (v == "BLOWUP") {
                    ++blowups;
                    continue;
                }
                const double x = std::stod(v);
                xs.push_back(x);
                if (kind == PlotKind::ThetaFraction ? x >= 2.0 / 3.0 - 5e-7 : x != 0.0)
                    ++hits;
            }
            const std::size_t total = xs.size() + blowups;
            if (total == 0)
                continue;
            switch (kind) {
            case PlotKind::SatFraction:
            case PlotKind::ThetaFraction:
                p.value = static_cast<double>(hits) / static_cast<double>(xs.size());
                break;
            case PlotKind::TwRegime:
            case PlotKind::ObddSizeMedian: {
                std::sort(xs.begin(), xs.end());
                const std::size_t mid = (total - 1) / 2;
                if (2 * blowups >= total)
                    p.blowup = true;
                else
                    p.value = xs[mid];
                break;
            }
            }
            s.points.push_back(p);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string renderSvg(const std::vector<PlotSeries>& series, PlotKind kind) {
    constexpr double W = 640, H = 400, L = 70, R = 130, T = 40, B = 50;
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#17becf", "#8c564b", "#7f7f7f"};
    const bool logY = kind == PlotKind::ObddSizeMedian;

    double xMin = std::numeric_limits<double>::max(), xMax = std::numeric_limits<double>::lowest();
    double yMax = 0;
    for (const auto& s : series)
        for (const auto& p : s.points) {
            xMin = std::min(xMin, p.delta);
            xMax = std::max(xMax, p.delta);
            if (!p.blowup)
                yMax = std::max(yMax, logY ? std::log10(std::max(p.value, 1.0)) : p.value);
        }
    if (xMin > xMax) {
        xMin = 0;
        xMax = 1;
    }
    if (xMax - xMin < 1e-9) {
        xMin -= 0.5;
        xMax += 0.5;
    }
    double yTop = 1;
    if (kind == PlotKind::TwRegime)
        yTop = std::max(1.0, std::ceil(yMax));
    else if (logY)
        yTop = std::max(1.0, std::ceil(yMax + 0.5)); // headroom for the ceiling row

    auto px = [&](double x) { return L + (x - xMin) / (xMax - xMin) * (W - L - R); };
    auto py = [&](double y) { return H - B - y / yTop * (H - T - B); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
       << ' ' << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(W / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
       << toString(kind) << "</text>\n";
    // axes
    os << "<line x1=\"" << num(L) << "\" y1=\"" << num(H - B) << "\" x2=\"" << num(W - R) << "\" y2=\"" << num(H - B)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << num(L) << "\" y1=\"" << num(T) << "\" x2=\"" << num(L) << "\" y2=\"" << num(H - B)
       << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double x = xMin + (xMax - xMin) * i / 4;
        os << "<text x=\"" << num(px(x)) << "\" y=\"" << num(H - B + 16)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << num(x) << "</text>\n";
        const double y = yTop * i / 4;
        os << "<text x=\"" << num(L - 6) << "\" y=\"" << num(py(y) + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(y) << "</text>\n";
        os << "<line x1=\"" << num(L) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(W - R) << "\" y2=\""
           << num(py(y)) << "\" stroke=\"#dddddd\"/>\n";
    }
    os << "<text x=\"" << num((L + W - R) / 2) << "\" y=\"" << num(H - 12)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">delta</text>\n";
    os << "<text x=\"16\" y=\"" << num((T + H - B) / 2) << "\" transform=\"rotate(-90 16 " << num((T + H - B) / 2)
       << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << yLabel(kind) << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* color = palette[i % 8];
        auto yOf = [&](const PlotPoint& p) {
            if (p.blowup)
                return py(yTop);
            return py(logY ? std::log10(std::max(p.value, 1.0)) : p.value);
        };
        if (!s.points.empty()) {
            os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t j = 0; j < s.points.size(); ++j)
                os << (j ? " " : "") << num(px(s.points[j].delta)) << ',' << num(yOf(s.points[j]));
            os << "\"/>\n";
        }
        for (const auto& p : s.points) {
            const double x = px(p.delta), y = yOf(p);
            if (p.blowup)
                os << "<path d=\"M" << num(x - 4) << ' ' << num(y - 4) << " L" << num(x + 4) << ' ' << num(y + 4)
                   << " M" << num(x - 4) << ' ' << num(y + 4) << " L" << num(x + 4) << ' ' << num(y - 4)
                   << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
            else
                os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        const double ly = T + 16 * static_cast<double>(i);
        os << "<line x1=\"" << num(W - R + 12) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(W - R + 32) << "\" y2=\""
           << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << num(W - R + 38) << "\" y=\"" << num(ly + 4)
           << "\" font-family=\"sans-serif\" font-size=\"11\">n = " << s.n << "</text>\n";
    }
    if (logY) {
        const double ly = T + 16 * static_cast<double>(series.size());
        os << "<text x=\"" << num(W - R + 12) << "\" y=\"" << num(ly + 4)
           << "\" font-family=\"sans-serif\" font-size=\"11\">x = BLOWUP</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void plot(const std::string& csvPath, PlotKind kind, const std::string& svgPath) {
    std::ifstream in(csvPath, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + csvPath + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string svg = renderSvg(plotSeries(ss.str(), kind), kind);
    std::ofstream out(svgPath, std::ios::binary);
    if (!out || !(out << svg))
        throw IoError("cannot write '" + svgPath + "'");
}

} // namespace obddlab
