#pragma once

#include <string>
#include <vector>

namespace obddlab {

enum class PlotKind { SatFraction, TwRegime, ObddSizeMedian, ThetaFraction };

PlotKind parsePlotKind(const std::string& name);
std::string toString(PlotKind kind);

struct PlotPoint {
    double delta = 0;
    double value = 0;
    bool blowup = false; // drawn at the ceiling with a cross
};

struct PlotSeries {
    std::size_t n = 0;
    std::vector<PlotPoint> points; // ascending delta
};

// Aggregates trial rows per (n, delta). Throws SchemaError naming the first
// missing column.
std::vector<PlotSeries> plotSeries(const std::string& csvText, PlotKind kind);

// Static SVG, delta on the x axis, one series per n.
std::string renderSvg(const std::vector<PlotSeries>& series, PlotKind kind);

// Reads csvPath, writes svgPath.
void plot(const std::string& csvPath, PlotKind kind, const std::string& svgPath);

} // namespace obddlab
