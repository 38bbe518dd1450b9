#include "cdsbench/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include "cdsbench/harness.hpp"

namespace cdsbench {

namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                                 "#d62728", "#9467bd", "#8c564b"};
constexpr int kTicks = 5;
constexpr double kPanelWidth = 360.0;
constexpr double kPanelHeight = 270.0;
constexpr double kMarginLeft = 55.0;
constexpr double kMarginRight = 15.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 45.0;
constexpr double kLegendRow = 22.0;

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string fixed(double value) {
  std::array<char, 32> buffer{};
  std::snprintf(buffer.data(), buffer.size(), "%.2f", value);
  return buffer.data();
}

std::string tick_label(double value) {
  std::array<char, 32> buffer{};
  std::snprintf(buffer.data(), buffer.size(), "%.4g", value);
  return buffer.data();
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw PlotError(std::string("cannot parse ") + what + " value \"" + text + "\"");
  }
}

char panel_letter(std::size_t index) { return static_cast<char>('a' + index % 26); }

}  // namespace

int CsvTable::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw PlotError("CSV input is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  table.header = split(line);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    table.rows.push_back(split(line));
  }
  return table;
}

std::vector<double> ranges_in(const CsvTable& summary) {
  std::vector<double> ranges;
  const int col = summary.column("r");
  if (col < 0) return ranges;
  for (const auto& row : summary.rows) {
    const double r = parse_double(row.at(col), "r");
    if (std::find(ranges.begin(), ranges.end(), r) == ranges.end()) ranges.push_back(r);
  }
  return ranges;
}

std::vector<Scheme> schemes_in(const CsvTable& summary) {
  std::vector<Scheme> schemes;
  const int col = summary.column("scheme");
  if (col < 0) return schemes;
  for (const auto& row : summary.rows) {
    const auto scheme = parse_scheme(row.at(col));
    if (!scheme) throw PlotError("unknown scheme \"" + row.at(col) + "\"");
    if (std::find(schemes.begin(), schemes.end(), *scheme) == schemes.end()) {
      schemes.push_back(*scheme);
    }
  }
  return schemes;
}

std::string render_plot(const CsvTable& summary, const PlotSpec& spec) {
  if (spec.metric != "cds_size" && spec.metric != "mrpl" && spec.metric != "arpl") {
    throw PlotError("metric must be one of cds_size, mrpl, arpl (got \"" + spec.metric + "\")");
  }
  const std::string value_column = spec.metric + "_mean";
  std::vector<std::string> missing;
  for (const std::string name : {"n", "r", "scheme", "status", value_column.c_str()}) {
    if (summary.column(name) < 0) missing.push_back(name);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& name : missing) list += (list.empty() ? "" : ", ") + name;
    throw PlotError("missing columns: " + list);
  }
  if (spec.panels.empty()) throw PlotError("no panels requested");
  if (spec.series.empty()) throw PlotError("no series requested");

  const int col_n = summary.column("n");
  const int col_r = summary.column("r");
  const int col_scheme = summary.column("scheme");
  const int col_status = summary.column("status");
  const int col_value = summary.column(value_column);

  // data[panel][series] = sorted (n, value) points
  using Series = std::vector<std::pair<double, double>>;
  std::vector<std::vector<Series>> data(spec.panels.size(),
                                        std::vector<Series>(spec.series.size()));
  std::size_t point_count = 0;
  for (const auto& row : summary.rows) {
    if (row.size() < summary.header.size() || row[col_status] != "ok") continue;
    const double r = parse_double(row[col_r], "r");
    const auto panel = std::find(spec.panels.begin(), spec.panels.end(), r);
    const auto scheme = parse_scheme(row[col_scheme]);
    if (panel == spec.panels.end() || !scheme) continue;
    const auto series = std::find(spec.series.begin(), spec.series.end(), *scheme);
    if (series == spec.series.end()) continue;
    data[panel - spec.panels.begin()][series - spec.series.begin()].emplace_back(
        parse_double(row[col_n], "n"), parse_double(row[col_value], value_column.c_str()));
    ++point_count;
  }
  if (point_count == 0) throw PlotError("no data points for the requested panels and series");

  double x_min = INFINITY;
  double x_max = -INFINITY;
  double y_peak = 0.0;
  for (auto& panel : data) {
    for (auto& series : panel) {
      std::sort(series.begin(), series.end());
      for (auto [x, y] : series) {
        x_min = std::min(x_min, x);
        x_max = std::max(x_max, x);
        y_peak = std::max(y_peak, y);
      }
    }
  }
  if (x_min == x_max) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  const double y_top = y_peak > 0.0 ? 1.05 * y_peak : 1.0;

  const std::size_t columns = std::min<std::size_t>(spec.panels.size(), 2);
  const std::size_t rows = (spec.panels.size() + 1) / 2;
  const double width = kPanelWidth * static_cast<double>(columns);
  const double legend_height = kLegendRow * static_cast<double>(spec.series.size()) + 10.0;
  const double height = kPanelHeight * static_cast<double>(rows) + legend_height;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fixed(width) << ' '
      << fixed(height) << "\" width=\"" << fixed(width) << "\" height=\"" << fixed(height)
      << "\">\n";
  svg << "<!-- cdsbench plot: metric=" << spec.metric
      << " (mean over instances; averages use unordered distinct node pairs).\n"
      << "     x: node count, linear, shared by all panels, " << kTicks << " ticks.\n"
      << "     y: linear from 0 to 1.05 x largest plotted mean, shared, " << kTicks << " ticks.\n"
      << "     Palette order: GREEDY DIAMETER ALPHA_MOC COLLAB_COVER GUARANTEED RESILIENT. -->\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << fixed(width) << "\" height=\"" << fixed(height)
      << "\" fill=\"white\"/>\n";

  const double plot_w = kPanelWidth - kMarginLeft - kMarginRight;
  const double plot_h = kPanelHeight - kMarginTop - kMarginBottom;
  for (std::size_t p = 0; p < spec.panels.size(); ++p) {
    const double ox = kPanelWidth * static_cast<double>(p % 2) + kMarginLeft;
    const double oy = kPanelHeight * static_cast<double>(p / 2) + kMarginTop;
    auto sx = [&](double x) { return ox + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) { return oy + plot_h - y / y_top * plot_h; };

    svg << "<g class=\"panel\" data-range=\"" << format_number(spec.panels[p]) << "\">\n";
    svg << "<text x=\"" << fixed(ox + plot_w / 2) << "\" y=\"" << fixed(oy - 10)
        << "\" text-anchor=\"middle\" font-size=\"13\">(" << panel_letter(p)
        << ") r = " << format_number(spec.panels[p]) << "</text>\n";
    svg << "<rect x=\"" << fixed(ox) << "\" y=\"" << fixed(oy) << "\" width=\"" << fixed(plot_w)
        << "\" height=\"" << fixed(plot_h) << "\" fill=\"none\" stroke=\"#444\"/>\n";
    for (int t = 0; t < kTicks; ++t) {
      const double frac = static_cast<double>(t) / (kTicks - 1);
      const double xv = x_min + frac * (x_max - x_min);
      const double yv = frac * y_top;
      svg << "<line x1=\"" << fixed(sx(xv)) << "\" y1=\"" << fixed(oy + plot_h) << "\" x2=\""
          << fixed(sx(xv)) << "\" y2=\"" << fixed(oy + plot_h + 4) << "\" stroke=\"#444\"/>\n";
      svg << "<text x=\"" << fixed(sx(xv)) << "\" y=\"" << fixed(oy + plot_h + 16)
          << "\" text-anchor=\"middle\" font-size=\"10\">" << tick_label(xv) << "</text>\n";
      svg << "<line x1=\"" << fixed(ox - 4) << "\" y1=\"" << fixed(sy(yv)) << "\" x2=\""
          << fixed(ox) << "\" y2=\"" << fixed(sy(yv)) << "\" stroke=\"#444\"/>\n";
      svg << "<text x=\"" << fixed(ox - 6) << "\" y=\"" << fixed(sy(yv) + 3)
          << "\" text-anchor=\"end\" font-size=\"10\">" << tick_label(yv) << "</text>\n";
    }
    svg << "<text x=\"" << fixed(ox + plot_w / 2) << "\" y=\"" << fixed(oy + plot_h + 32)
        << "\" text-anchor=\"middle\" font-size=\"11\">number of nodes</text>\n";
    svg << "<text x=\"" << fixed(ox - 40) << "\" y=\"" << fixed(oy + plot_h / 2)
        << "\" text-anchor=\"middle\" font-size=\"11\" transform=\"rotate(-90 " << fixed(ox - 40)
        << ' ' << fixed(oy + plot_h / 2) << ")\">" << spec.metric << "</text>\n";

    const bool empty_panel = std::all_of(data[p].begin(), data[p].end(),
                                         [](const Series& series) { return series.empty(); });
    if (empty_panel) {
      svg << "<text x=\"" << fixed(ox + plot_w / 2) << "\" y=\"" << fixed(oy + plot_h / 2)
          << "\" text-anchor=\"middle\" font-size=\"12\" fill=\"#888\">no feasible instances</text>\n";
    }
    for (std::size_t s = 0; s < spec.series.size(); ++s) {
      const auto& series = data[p][s];
      const char* color = kPalette[static_cast<int>(spec.series[s])];
      const auto name = scheme_name(spec.series[s]);
      if (series.size() >= 2) {
        svg << "<polyline class=\"series\" data-scheme=\"" << name << "\" fill=\"none\" stroke=\""
            << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series.size(); ++i) {
          svg << (i ? " " : "") << fixed(sx(series[i].first)) << ',' << fixed(sy(series[i].second));
        }
        svg << "\"/>\n";
      }
      for (auto [x, y] : series) {
        svg << "<circle class=\"marker\" data-scheme=\"" << name << "\" cx=\"" << fixed(sx(x))
            << "\" cy=\"" << fixed(sy(y)) << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
      }
    }
    svg << "</g>\n";
  }

  svg << "<g class=\"legend\">\n";
  const double legend_y = kPanelHeight * static_cast<double>(rows);
  for (std::size_t s = 0; s < spec.series.size(); ++s) {
    const double y = legend_y + kLegendRow * static_cast<double>(s) + 12.0;
    const char* color = kPalette[static_cast<int>(spec.series[s])];
    svg << "<line x1=\"" << fixed(kMarginLeft) << "\" y1=\"" << fixed(y) << "\" x2=\""
        << fixed(kMarginLeft + 24) << "\" y2=\"" << fixed(y) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fixed(kMarginLeft + 30) << "\" y=\"" << fixed(y + 4)
        << "\" font-size=\"11\">" << scheme_name(spec.series[s]) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace cdsbench
