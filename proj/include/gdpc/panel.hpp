#ifndef GDPC_PANEL_HPP
#define GDPC_PANEL_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gdpc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// A panel is a T x m matrix of observations: rows are time points,
// columns are series. Series names travel with it through CSV I/O.
struct Panel {
    Matrix values;
    std::vector<std::string> names;

    Eigen::Index t() const { return values.rows(); }
    Eigen::Index m() const { return values.cols(); }
};

// Throws std::invalid_argument unless X is a valid panel: T >= 2, m >= 1,
// all entries finite.
void validate_panel(const Matrix& X, const char* what = "panel");

std::vector<std::string> default_series_names(Eigen::Index m);

// CSV format: UTF-8, comma separator, first row series names, one row per
// time point, '.' decimal point, no index column. Values are written with
// 17 significant digits so doubles round-trip exactly.
void write_csv(const std::string& path, const Matrix& X, const std::vector<std::string>& names);
Panel read_csv(const std::string& path);

// 17-significant-digit rendering shared by every CSV writer.
std::string format_double(double x);

}  // namespace gdpc

#endif
