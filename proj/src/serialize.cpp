#include "gfs/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gfs {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  return "[" + format_real(z.real()) + ", " + format_real(z.imag()) + "]";
}

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void JsonWriter::comma() {
  if (!need_comma_.empty()) {
    if (need_comma_.back()) out_ += ", ";
    need_comma_.back() = true;
  }
}

void JsonWriter::key(const std::string& k) {
  comma();
  out_ += "\"" + escape_json(k) + "\": ";
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += "{";
  need_comma_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::begin_unkeyed_object() { return begin_object(); }

JsonWriter& JsonWriter::end_object() {
  out_ += "}";
  need_comma_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& k) {
  key(k);
  out_ += "[";
  need_comma_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += "]";
  need_comma_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& k, const std::string& v) {
  key(k);
  out_ += "\"" + escape_json(v) + "\"";
  return *this;
}

JsonWriter& JsonWriter::field_raw(const std::string& k, const std::string& raw) {
  key(k);
  out_ += raw;
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& k, double v) { return field_raw(k, format_real(v)); }
JsonWriter& JsonWriter::field(const std::string& k, long long v) { return field_raw(k, std::to_string(v)); }
JsonWriter& JsonWriter::field(const std::string& k, int v) { return field_raw(k, std::to_string(v)); }
JsonWriter& JsonWriter::field(const std::string& k, bool v) { return field_raw(k, v ? "true" : "false"); }
JsonWriter& JsonWriter::field_null(const std::string& k) { return field_raw(k, "null"); }
JsonWriter& JsonWriter::field(const std::string& k, std::complex<double> v) {
  return field_raw(k, format_complex(v));
}

JsonWriter& JsonWriter::element(const std::string& v) {
  comma();
  out_ += "\"" + escape_json(v) + "\"";
  return *this;
}

JsonWriter& JsonWriter::element_raw(const std::string& raw) {
  comma();
  out_ += raw;
  return *this;
}

JsonWriter& JsonWriter::element(double v) { return element_raw(format_real(v)); }
JsonWriter& JsonWriter::element(std::complex<double> v) { return element_raw(format_complex(v)); }

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ += ",";
    out_ += header[i];
  }
  out_ += "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::invalid_argument("csv row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ",";
    out_ += cells[i];
  }
  out_ += "\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string group_to_json(const FiniteGroup& G) {
  JsonWriter w;
  w.begin_object();
  w.field("name", G.name());
  w.field("order", static_cast<long long>(G.order()));
  w.begin_array("mul_table");
  for (ElemId v : G.table()) w.element_raw(std::to_string(v));
  w.end_array();
  w.field("identity_id", static_cast<long long>(G.identity()));
  w.end_object();
  return w.str() + "\n";
}

FiniteGroup group_from_json(const std::string& text, const GroupOptions& opts) {
  nlohmann::json j = nlohmann::json::parse(text);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "name" && k != "order" && k != "mul_table" && k != "identity_id")
      throw std::invalid_argument("group json: unknown key '" + k + "'");
  }
  const std::string name = j.at("name").get<std::string>();
  const std::size_t order = j.at("order").get<std::size_t>();
  if (order > opts.max_order)
    throw std::invalid_argument("group json: order exceeds table guard");
  std::vector<ElemId> table = j.at("mul_table").get<std::vector<ElemId>>();
  if (table.size() != order * order)
    throw std::invalid_argument("group json: mul_table size != order^2");
  const ElemId identity = j.at("identity_id").get<ElemId>();
  FiniteGroup G = FiniteGroup::from_table(name, std::move(table), identity);
  if (!check_associativity(G, 128))
    throw std::invalid_argument("group json: multiplication table is not associative");
  return G;
}

}  // namespace gfs
