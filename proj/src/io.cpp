#include "radon/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace radon {

using nlohmann::json;

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

void write_polynomial(std::ostream& os, const RidgeRepresentation<double>& rep) {
  os << "{\n  \"degree\": " << rep.degree() << ",\n  \"coefficients\": [";
  bool first = true;
  for (int k = 0; k <= rep.degree(); ++k)
    for (int j = 0; j <= k; ++j) {
      os << (first ? "\n" : ",\n") << "    {\"j\": " << j << ", \"k\": " << k
         << ", \"c\": " << format_number(rep.c(j, k)) << "}";
      first = false;
    }
  os << "\n  ]\n}\n";
}

namespace {

void write_nodes_object(std::ostream& os, const NodeSet& nodes, const std::string& indent) {
  os << "{\n"
     << indent << "  \"scheme\": \"" << to_string(nodes.scheme()) << "\",\n"
     << indent << "  \"parity\": \"" << to_string(nodes.parity()) << "\",\n"
     << indent << "  \"values\": [";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << (i ? ", " : "") << format_number(nodes[i]);
  os << "]\n" << indent << "}";
}

json parse(std::istream& is) {
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

const json& array_field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array())
    throw FormatError(std::string("missing array '") + key + "'");
  return doc.at(key);
}

NodeSet nodes_from_json(const json& doc) {
  const auto scheme = parse_scheme(field<std::string>(doc, "scheme"));
  const auto parity = parse_parity(field<std::string>(doc, "parity"));
  std::vector<double> values;
  for (const auto& v : array_field(doc, "values")) {
    if (!v.is_number()) throw FormatError("node values must be numbers");
    values.push_back(v.get<double>());
  }
  return NodeSet(std::move(values), parity, scheme);
}

}  // namespace

void write_nodes(std::ostream& os, const NodeSet& nodes) {
  write_nodes_object(os, nodes, "");
  os << '\n';
}

void write_grid(std::ostream& os, const ProjectionGrid<double>& grid) {
  os << "{\n  \"m\": " << grid.m() << ",\n  \"parity\": \"" << to_string(grid.parity())
     << "\",\n  \"nodes\": ";
  write_nodes_object(os, grid.nodes(), "  ");
  os << ",\n  \"values\": [";
  bool first = true;
  for (std::size_t j = 0; j < grid.angle_count(); ++j)
    for (std::size_t k = 0; k < grid.nodes_per_angle(); ++k) {
      os << (first ? "\n" : ",\n") << "    {\"j\": " << j << ", \"k\": " << k
         << ", \"value\": " << format_number(grid.value(j, k)) << "}";
      first = false;
    }
  os << "\n  ]\n}\n";
}

RidgeRepresentation<double> read_polynomial(std::istream& is) {
  const json doc = parse(is);
  const int degree = field<int>(doc, "degree");
  if (degree < 0) throw FormatError("degree must be >= 0");
  RidgeRepresentation<double> rep(degree);
  std::vector<bool> seen(rep.size(), false);
  for (const auto& e : array_field(doc, "coefficients")) {
    const int j = field<int>(e, "j");
    const int k = field<int>(e, "k");
    if (!RidgeRepresentation<double>::valid_index(j, k, degree))
      throw FormatError("coefficient (" + std::to_string(j) + "," + std::to_string(k) +
                        ") outside degree " + std::to_string(degree));
    const std::size_t idx = block_offset(k) + static_cast<std::size_t>(j);
    if (seen[idx]) throw FormatError("duplicate coefficient entry");
    seen[idx] = true;
    rep.c(j, k) = field<double>(e, "c");
  }
  for (bool s : seen)
    if (!s) throw FormatError("polynomial document must list all (n+1)(n+2)/2 coefficients");
  return rep;
}

NodeSet read_nodes(std::istream& is) { return nodes_from_json(parse(is)); }

ProjectionGrid<double> read_grid(std::istream& is) {
  const json doc = parse(is);
  const int m = field<int>(doc, "m");
  const Parity parity = parse_parity(field<std::string>(doc, "parity"));
  if (m < 0 || (parity == Parity::odd && m < 1)) throw FormatError("invalid m");
  const int degree = parity == Parity::even ? 2 * m : 2 * m - 1;
  if (!doc.contains("nodes")) throw FormatError("missing field 'nodes'");
  ProjectionGrid<double> grid(degree, nodes_from_json(doc.at("nodes")));
  std::vector<bool> seen(grid.size(), false);
  for (const auto& e : array_field(doc, "values")) {
    const int j = field<int>(e, "j");
    const int k = field<int>(e, "k");
    if (j < 0 || k < 0 || static_cast<std::size_t>(j) >= grid.angle_count() ||
        static_cast<std::size_t>(k) >= grid.nodes_per_angle())
      throw FormatError("grid entry (" + std::to_string(j) + "," + std::to_string(k) +
                        ") out of range");
    const std::size_t idx = static_cast<std::size_t>(j) * grid.nodes_per_angle() + k;
    if (seen[idx]) throw FormatError("duplicate grid entry");
    seen[idx] = true;
    grid.value(j, k) = field<double>(e, "value");
  }
  for (bool s : seen)
    if (!s) throw FormatError("grid document must list every (j, k) entry");
  return grid;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

namespace {

template <class T, class Reader>
T load(const std::filesystem::path& path, Reader reader) {
  std::istringstream in(read_text_file(path));
  return reader(in);
}

template <class T, class Writer>
void save(const std::filesystem::path& path, const T& value, Writer writer) {
  std::ostringstream out;
  writer(out, value);
  write_text_file(path, out.str());
}

}  // namespace

RidgeRepresentation<double> load_polynomial(const std::filesystem::path& path) {
  return load<RidgeRepresentation<double>>(path, [](std::istream& is) { return read_polynomial(is); });
}
NodeSet load_nodes(const std::filesystem::path& path) {
  return load<NodeSet>(path, [](std::istream& is) { return read_nodes(is); });
}
ProjectionGrid<double> load_grid(const std::filesystem::path& path) {
  return load<ProjectionGrid<double>>(path, [](std::istream& is) { return read_grid(is); });
}

void save_polynomial(const std::filesystem::path& path, const RidgeRepresentation<double>& rep) {
  save(path, rep, [](std::ostream& os, const auto& v) { write_polynomial(os, v); });
}
void save_nodes(const std::filesystem::path& path, const NodeSet& nodes) {
  save(path, nodes, [](std::ostream& os, const auto& v) { write_nodes(os, v); });
}
void save_grid(const std::filesystem::path& path, const ProjectionGrid<double>& grid) {
  save(path, grid, [](std::ostream& os, const auto& v) { write_grid(os, v); });
}

}  // namespace radon
