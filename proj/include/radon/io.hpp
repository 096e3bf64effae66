#pragma once

// JSON documents for ridge polynomials, node sets and projection grids.
// Numbers are written with 17 significant digits (%.16e); reading accepts any
// JSON number.
//
//   polynomial: {"degree": n, "coefficients": [{"j": 0, "k": 0, "c": ...}, ...]}
//   nodes:      {"scheme": "equidistant", "parity": "even", "values": [...]}
//   grid:       {"m": m, "parity": "even", "nodes": {...}, "values": [{"j": 0, "k": 0, "value": ...}, ...]}

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "radon/nodes.hpp"
#include "radon/reconstruct.hpp"
#include "radon/ridge_basis.hpp"

namespace radon {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Document parsed but does not match the expected schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_number(double x);

void write_polynomial(std::ostream& os, const RidgeRepresentation<double>& rep);
void write_nodes(std::ostream& os, const NodeSet& nodes);
void write_grid(std::ostream& os, const ProjectionGrid<double>& grid);

RidgeRepresentation<double> read_polynomial(std::istream& is);
NodeSet read_nodes(std::istream& is);
ProjectionGrid<double> read_grid(std::istream& is);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

RidgeRepresentation<double> load_polynomial(const std::filesystem::path& path);
NodeSet load_nodes(const std::filesystem::path& path);
ProjectionGrid<double> load_grid(const std::filesystem::path& path);

void save_polynomial(const std::filesystem::path& path, const RidgeRepresentation<double>& rep);
void save_nodes(const std::filesystem::path& path, const NodeSet& nodes);
void save_grid(const std::filesystem::path& path, const ProjectionGrid<double>& grid);

}  // namespace radon
