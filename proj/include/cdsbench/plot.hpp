// Hand-emitted SVG panel plots of sweep summaries.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdsbench/backbone.hpp"

namespace cdsbench {

class PlotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated table with a mandatory header row. No quoting.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index or -1.
  int column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);

struct PlotSpec {
  std::string metric = "cds_size";  ///< cds_size, mrpl or arpl
  std::vector<double> panels;        ///< one panel per transmission range
  std::vector<Scheme> series;
};

/// Panel ranges and schemes in order of first appearance in a summary table.
std::vector<double> ranges_in(const CsvTable& summary);
std::vector<Scheme> schemes_in(const CsvTable& summary);

/// Renders the plot. Throws PlotError for unknown metrics, missing columns
/// (all listed), empty panel/series lists or a plot without data points.
std::string render_plot(const CsvTable& summary, const PlotSpec& spec);

}  // namespace cdsbench
