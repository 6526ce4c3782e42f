#pragma once

// JSON documents for factorizations and torus diagrams.
//
// Writers are hand-rolled so the bytes are canonical: keys in sorted order,
// coordinates with exactly six decimals. Readers go through nlohmann::json.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bridgetri/diagram.hpp"
#include "bridgetri/quasipositive.hpp"

namespace bridgetri::io {

inline constexpr const char* kFormatVersion = "1";

/// Malformed or out-of-range input. line/column are 1-based and only set for
/// syntax errors.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ")"
                                    : what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct DiagramDocument {
  TorusDiagram diagram;
  std::optional<Factorization> source;  ///< the bands the diagram was built from
  bool operator==(const DiagramDocument&) const = default;
};

namespace detail {

using nlohmann::json;

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is the 1-based offset just past the offending character
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, column = 1;
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw IoError("syntax error", line, column);
  }
}

inline const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw IoError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw IoError(where + ": missing \"" + key + "\"");
  return *it;
}

inline std::int64_t integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw IoError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

inline int small_int(const json& v, const std::string& where) {
  const std::int64_t x = integer(v, where);
  if (x < -1'000'000'000 || x > 1'000'000'000) throw IoError(where + ": integer out of range");
  return static_cast<int>(x);
}

inline const json& array(const json& v, const std::string& where) {
  if (!v.is_array()) throw IoError(where + ": expected an array");
  return v;
}

inline void check_version(const json& doc) {
  const json& v = field(doc, "format_version", "document");
  if (!v.is_string() || v.get<std::string>() != kFormatVersion)
    throw IoError("unsupported format_version (expected \"" + std::string(kFormatVersion) + "\")");
}

inline Factorization factorization_from_json(const json& doc) {
  check_version(doc);
  Factorization f;
  f.strands = small_int(field(doc, "strands", "document"), "strands");
  if (f.strands < 1) throw IoError("strands must be >= 1");
  const json& factors = array(field(doc, "factors", "document"), "factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string where = "factor " + std::to_string(i);
    const json& item = factors[i];
    const json& conj = array(field(item, "conjugator", where), where + " conjugator");
    std::vector<int> letters;
    for (const auto& l : conj) {
      const int letter = small_int(l, where + " conjugator");
      if (letter == 0 || std::abs(letter) > f.strands - 1)
        throw IoError(where + ": letter " + std::to_string(letter) + " out of range for " +
                      std::to_string(f.strands) + " strands");
      letters.push_back(letter);
    }
    const int exponent = small_int(field(item, "exponent", where), where + " exponent");
    if (exponent < 1) throw IoError(where + ": exponent must be >= 1");
    const int sign = small_int(field(item, "sign", where), where + " sign");
    if (sign != 1 && sign != -1) throw IoError(where + ": sign must be 1 or -1");
    // stored exactly as written; no free reduction on load
    f.factors.push_back(BandFactor{BraidWord(f.strands, std::move(letters)), exponent, sign});
  }
  return f;
}

inline void write_letters(std::ostream& os, const BraidWord& w) {
  os << '[';
  for (std::size_t k = 0; k < w.length(); ++k) os << (k ? ", " : "") << w.letters()[k];
  os << ']';
}

inline void write_factorization(std::ostream& os, const Factorization& f, const std::string& indent) {
  os << "{\n" << indent << "  \"factors\": [";
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& b = f.factors[i];
    os << (i ? ",\n" : "\n") << indent << "    {\"conjugator\": ";
    write_letters(os, b.conjugator);
    os << ", \"exponent\": " << b.exponent << ", \"sign\": " << b.sign << '}';
  }
  if (!f.factors.empty()) os << '\n' << indent << "  ";
  os << "],\n"
     << indent << "  \"format_version\": \"" << kFormatVersion << "\",\n"
     << indent << "  \"strands\": " << f.strands << '\n'
     << indent << '}';
}

/// G = 10^6, so six decimals are exact.
inline std::string coordinate(std::int64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%06lld", static_cast<long long>(v / kTorusScale),
                static_cast<long long>(v % kTorusScale));
  return buf;
}

inline std::int64_t read_coordinate(const json& v, const std::string& where) {
  if (!v.is_number()) throw IoError(where + ": expected a number");
  const double x = v.get<double>();
  if (!(x >= 0.0 && x < 1.0)) throw IoError(where + ": coordinate outside [0,1)");
  const auto scaled = std::llround(x * static_cast<double>(kTorusScale));
  if (scaled >= kTorusScale) throw IoError(where + ": coordinate rounds to 1");
  return scaled;
}

}  // namespace detail

inline std::string serialize_factorization(const Factorization& f) {
  std::ostringstream os;
  detail::write_factorization(os, f, "");
  os << '\n';
  return os.str();
}

/// Structural load: letter ranges, exponent >= 1 and sign are enforced, the
/// product is not checked.
inline Factorization parse_factorization(std::string_view text) {
  return detail::factorization_from_json(detail::parse_json(text));
}

inline std::string serialize_diagram(const DiagramDocument& doc) {
  using detail::coordinate;
  const TorusDiagram& d = doc.diagram;
  std::ostringstream os;
  os << "{\n  \"arcs\": [";
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    const Arc& arc = d.arcs[a];
    os << (a ? ",\n" : "\n") << "    {\"color\": \"" << color_letter(arc.color) << "\", \"end\": " << arc.end
       << ", \"start\": " << arc.start << ", \"vertices\": [";
    for (std::size_t k = 0; k < arc.path.vertices.size(); ++k) {
      const Vec2 v = arc.path.vertices[k];
      os << (k ? ", " : "") << '[' << coordinate(v.x) << ", " << coordinate(v.y) << ']';
    }
    os << "], \"wraps\": [";
    for (std::size_t k = 0; k < arc.path.wraps.size(); ++k) {
      const Wrap w = arc.path.wraps[k];
      os << (k ? ", " : "") << '[' << w.x << ", " << w.y << ']';
    }
    os << "]}";
  }
  if (!d.arcs.empty()) os << "\n  ";
  os << "],\n  \"bridge_points\": [";
  for (std::size_t p = 0; p < d.bridge_points.size(); ++p) {
    const BridgePoint& bp = d.bridge_points[p];
    os << (p ? ",\n" : "\n") << "    {\"id\": " << p << ", \"sign\": " << bp.sign
       << ", \"x\": " << coordinate(bp.position.x) << ", \"y\": " << coordinate(bp.position.y) << '}';
  }
  if (!d.bridge_points.empty()) os << "\n  ";
  os << "],\n  \"format_version\": \"" << kFormatVersion << "\",\n";
  if (doc.source) {
    os << "  \"source\": ";
    detail::write_factorization(os, *doc.source, "  ");
    os << ",\n";
  }
  os << "  \"stabilization_count\": " << d.stabilization_count << ",\n  \"strands\": " << d.strands
     << "\n}\n";
  return os.str();
}

/// Checks the document invariants only (ids, ranges, path shape). Geometric
/// sanity is left to structural_problems.
inline DiagramDocument parse_diagram(std::string_view text) {
  using namespace detail;
  const json doc = parse_json(text);
  check_version(doc);
  DiagramDocument out;
  TorusDiagram& d = out.diagram;
  d.strands = small_int(field(doc, "strands", "document"), "strands");
  if (d.strands < 1) throw IoError("strands must be >= 1");
  d.stabilization_count = small_int(field(doc, "stabilization_count", "document"), "stabilization_count");
  if (d.stabilization_count < 0) throw IoError("stabilization_count must be >= 0");

  const json& points = array(field(doc, "bridge_points", "document"), "bridge_points");
  d.bridge_points.resize(points.size());
  std::vector<bool> seen(points.size(), false);
  for (const auto& p : points) {
    const std::int64_t id = integer(field(p, "id", "bridge point"), "bridge point id");
    if (id < 0 || id >= static_cast<std::int64_t>(points.size()) || seen[id])
      throw IoError("bridge point ids must be 0..n-1 without repeats");
    seen[id] = true;
    const std::string where = "bridge point " + std::to_string(id);
    BridgePoint& bp = d.bridge_points[id];
    bp.sign = small_int(field(p, "sign", where), where + " sign");
    if (bp.sign != 1 && bp.sign != -1) throw IoError(where + ": sign must be 1 or -1");
    bp.position = {read_coordinate(field(p, "x", where), where + " x"),
                   read_coordinate(field(p, "y", where), where + " y")};
  }

  const json& arcs = array(field(doc, "arcs", "document"), "arcs");
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const std::string where = "arc " + std::to_string(a);
    const json& item = arcs[a];
    Arc arc;
    const json& color = field(item, "color", where);
    const std::string letter = color.is_string() ? color.get<std::string>() : "";
    const auto c = letter.size() == 1 ? color_from_letter(letter[0]) : std::nullopt;
    if (!c) throw IoError(where + ": color must be \"A\", \"B\" or \"C\"");
    arc.color = *c;
    arc.start = small_int(field(item, "start", where), where + " start");
    arc.end = small_int(field(item, "end", where), where + " end");
    for (int id : {arc.start, arc.end})
      if (id < 0 || id >= static_cast<int>(d.bridge_points.size()))
        throw IoError(where + ": unknown bridge point " + std::to_string(id));
    for (const auto& v : array(field(item, "vertices", where), where + " vertices")) {
      if (!v.is_array() || v.size() != 2) throw IoError(where + ": vertex must be [x, y]");
      arc.path.vertices.push_back({read_coordinate(v[0], where), read_coordinate(v[1], where)});
    }
    for (const auto& w : array(field(item, "wraps", where), where + " wraps")) {
      if (!w.is_array() || w.size() != 2) throw IoError(where + ": wrap must be [wx, wy]");
      arc.path.wraps.push_back({small_int(w[0], where), small_int(w[1], where)});
    }
    if (arc.path.vertices.size() < 2 || arc.path.wraps.size() + 1 != arc.path.vertices.size())
      throw IoError(where + ": needs >= 2 vertices and one wrap per segment");
    d.arcs.push_back(std::move(arc));
  }

  if (auto it = doc.find("source"); it != doc.end()) {
    out.source = factorization_from_json(*it);
    if (out.source->strands != d.strands) throw IoError("source strands differ from diagram strands");
  }
  return out;
}

}  // namespace bridgetri::io
