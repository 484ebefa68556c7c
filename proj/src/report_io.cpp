#include "hamwit/report_io.hpp"

#include <sstream>

namespace hamwit {

void ReportDoc::add(const std::string& key, const std::string& text,
                    nlohmann::ordered_json json_value) {
  lines_.emplace_back(key, text);
  json_[key] = std::move(json_value);
}

void ReportDoc::add(const std::string& key, const std::string& value) { add(key, value, value); }

void ReportDoc::add(const std::string& key, const char* value) { add(key, std::string(value)); }

void ReportDoc::add(const std::string& key, std::uint64_t value) {
  add(key, std::to_string(value), value);
}

void ReportDoc::add(const std::string& key, unsigned value) {
  add(key, static_cast<std::uint64_t>(value));
}

void ReportDoc::add(const std::string& key, int value) {
  add(key, std::to_string(value), value);
}

void ReportDoc::add(const std::string& key, double value) {
  std::ostringstream out;
  out << value;
  add(key, out.str(), value);
}

void ReportDoc::add(const std::string& key, const mpz_class& value) {
  const std::string decimal = value.get_str();
  if (value.fits_ulong_p()) {
    add(key, decimal, static_cast<std::uint64_t>(value.get_ui()));
  } else {
    // Too wide for a JSON number; keep the exact decimal as a string.
    add(key, decimal, decimal);
  }
}

void ReportDoc::add_null(const std::string& key, const std::string& text) {
  lines_.emplace_back(key, text);
  json_[key] = nullptr;
}

void ReportDoc::add_histogram(const std::string& key,
                              const std::map<unsigned, std::uint64_t>& histogram) {
  std::string text;
  nlohmann::ordered_json object = nlohmann::ordered_json::object();
  for (const auto& [degree, count] : histogram) {
    if (!text.empty()) text += " ";
    text += std::to_string(degree) + ":" + std::to_string(count);
    object[std::to_string(degree)] = count;
  }
  add(key, text, std::move(object));
}

std::string ReportDoc::to_text() const {
  std::string out;
  for (const auto& [key, value] : lines_) {
    out += key;
    out += " = ";
    out += value;
    out += "\n";
  }
  return out;
}

std::string ReportDoc::to_json_text() const { return json_.dump(2) + "\n"; }

}  // namespace hamwit
