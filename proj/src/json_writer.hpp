#pragma once

// Internal: deterministic JSON emission with fixed key order and fixed
// 6-decimal reals (golden-file friendly). Not part of the public API.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

namespace cepseval::detail {

inline std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

inline std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

class JsonWriter {
 public:
  void open_object() { begin("{"); }
  void open_object(const std::string& key) {
    key_prefix(key);
    begin("{");
  }
  void close_object() { end("}"); }
  void open_array(const std::string& key) {
    key_prefix(key);
    begin("[");
  }
  void close_array() { end("]"); }

  void field(const std::string& key, const std::string& raw) {
    key_prefix(key);
    out_ << raw;
    needs_comma_ = true;
  }
  void string_field(const std::string& key, const std::string& value) {
    field(key, quote(value));
  }
  void real_field(const std::string& key, double v) { field(key, format_real(v)); }
  void count_field(const std::string& key, std::size_t v) { field(key, std::to_string(v)); }
  void bool_field(const std::string& key, bool v) { field(key, v ? "true" : "false"); }

  void array_string(const std::string& value) {
    element();
    out_ << quote(value);
  }
  void array_real(double v) {
    element();
    out_ << format_real(v);
  }
  void array_object_open() {
    element();
    out_ << "{";
    ++depth_;
    needs_comma_ = false;
  }
  void array_array_open() {
    element();
    out_ << "[";
    ++depth_;
    needs_comma_ = false;
  }

  std::string str() const { return out_.str(); }

 private:
  void begin(const char* tok) {
    out_ << tok;
    ++depth_;
    needs_comma_ = false;
  }
  void end(const char* tok) {
    --depth_;
    if (needs_comma_) {  // non-empty container
      out_ << "\n";
      indent();
    }
    out_ << tok;
    needs_comma_ = true;
  }
  void key_prefix(const std::string& key) {
    element();
    out_ << quote(key) << ": ";
  }
  void element() {
    if (needs_comma_) out_ << ",";
    out_ << "\n";
    indent();
    needs_comma_ = false;
  }
  void indent() {
    for (int i = 0; i < depth_; ++i) out_ << "  ";
  }

  std::ostringstream out_;
  int depth_ = 0;
  bool needs_comma_ = false;
};

}  // namespace cepseval::detail
