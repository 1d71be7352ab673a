#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace klf {

/// Single-line JSON object writer with insertion-ordered fields. Doubles are
/// written with 17 significant digits so that they round-trip exactly.
class JsonLine {
 public:
  JsonLine& add(std::string_view key, double v) {
    key_prefix(key);
    if (!std::isfinite(v)) {
      body_ += "null";
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      body_ += buf;
    }
    return *this;
  }
  JsonLine& add(std::string_view key, int v) { return add_raw(key, std::to_string(v)); }
  JsonLine& add(std::string_view key, std::int64_t v) { return add_raw(key, std::to_string(v)); }
  JsonLine& add(std::string_view key, std::uint64_t v) { return add_raw(key, std::to_string(v)); }
  JsonLine& add(std::string_view key, bool v) { return add_raw(key, v ? "true" : "false"); }
  JsonLine& add(std::string_view key, const char* v) { return add(key, std::string_view(v)); }
  JsonLine& add(std::string_view key, std::string_view v) {
    key_prefix(key);
    append_string(v);
    return *this;
  }
  JsonLine& add(std::string_view key, const JsonLine& nested) { return add_raw(key, nested.str()); }

  std::string str() const { return "{" + body_ + "}"; }

 private:
  JsonLine& add_raw(std::string_view key, const std::string& raw) {
    key_prefix(key);
    body_ += raw;
    return *this;
  }
  void key_prefix(std::string_view key) {
    if (!body_.empty()) body_ += ',';
    append_string(key);
    body_ += ':';
  }
  void append_string(std::string_view s) {
    body_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': body_ += "\\\""; break;
        case '\\': body_ += "\\\\"; break;
        case '\n': body_ += "\\n"; break;
        case '\t': body_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            body_ += buf;
          } else {
            body_ += c;
          }
      }
    }
    body_ += '"';
  }

  std::string body_;
};

}  // namespace klf
