#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gfs/group.hpp"

namespace gfs {

// Numbers in persisted artifacts are rendered with %.17g so reruns are
// byte-identical; complex values are [re, im] pairs.
std::string format_real(double x);
std::string format_complex(std::complex<double> z);

// Minimal ordered JSON writer. nlohmann::json is used for parsing; emission
// goes through this so field order and float formatting stay fixed.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(const std::string& key);
  JsonWriter& begin_unkeyed_object();
  JsonWriter& end_array();
  JsonWriter& field(const std::string& key, const std::string& value);
  JsonWriter& field_raw(const std::string& key, const std::string& raw);
  JsonWriter& field(const std::string& key, double value);
  JsonWriter& field(const std::string& key, long long value);
  JsonWriter& field(const std::string& key, int value);
  JsonWriter& field(const std::string& key, bool value);
  JsonWriter& field_null(const std::string& key);
  JsonWriter& field(const std::string& key, std::complex<double> value);
  JsonWriter& element(const std::string& value);
  JsonWriter& element_raw(const std::string& raw);
  JsonWriter& element(double value);
  JsonWriter& element(std::complex<double> value);
  std::string str() const { return out_; }

 private:
  void comma();
  void key(const std::string& k);
  std::string out_;
  std::vector<bool> need_comma_;
};

std::string escape_json(const std::string& s);

// CSV with a header row, LF line endings, %.17g reals.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  std::string str() const { return out_; }

 private:
  std::size_t columns_;
  std::string out_;
};

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

// Group <-> JSON document {name, order, mul_table (row-major), identity_id}.
std::string group_to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const std::string& text, const GroupOptions& opts = {});

}  // namespace gfs
