#ifndef HAMWIT_REPORT_IO_HPP
#define HAMWIT_REPORT_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace hamwit {

// Ordered key/value document rendered either as grep-able "key = value"
// lines or as one JSON object with the same fields in the same order.
class ReportDoc {
 public:
  void add(const std::string& key, const std::string& text, nlohmann::ordered_json json_value);
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value);
  void add(const std::string& key, std::uint64_t value);
  void add(const std::string& key, unsigned value);
  void add(const std::string& key, int value);
  void add(const std::string& key, double value);
  void add(const std::string& key, const mpz_class& value);
  void add_null(const std::string& key, const std::string& text);

  // "deg:count" pairs ascending by degree, e.g. "0:1 1:4".
  void add_histogram(const std::string& key, const std::map<unsigned, std::uint64_t>& histogram);

  std::string to_text() const;
  std::string to_json_text() const;

  std::string render(bool as_json) const { return as_json ? to_json_text() : to_text(); }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  nlohmann::ordered_json json_ = nlohmann::ordered_json::object();
};

}  // namespace hamwit

#endif  // HAMWIT_REPORT_IO_HPP
