#ifndef GEVREY_OUTPUT_HPP
#define GEVREY_OUTPUT_HPP

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace gevrey {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Header row plus one row per index; every column must have the same length.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

struct PlotSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f4e9c";
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  int width = 720;
  int height = 420;
};

/// A self-contained SVG with axes, tick labels and one polyline per series.
std::string render_svg(const PlotSpec& spec);

/// Writes bytes as-is (LF line endings); throws std::runtime_error on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace gevrey

#endif  // GEVREY_OUTPUT_HPP
