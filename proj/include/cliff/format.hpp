#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "cliff/multivector.hpp"
#include "cliff/repmat.hpp"
#include "cliff/split.hpp"
#include "cliff/verify.hpp"

namespace cliff {

enum class Format { pretty, json, csv };

inline Format parse_format(const std::string& s) {
  if (s == "pretty") return Format::pretty;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw range_error("unknown format '" + s + "' (expected pretty|json|csv)");
}

// Schema tag carried by every JSON document; bump on breaking changes.
inline constexpr const char* kSchemaTag = "clifftrans/1";

inline nlohmann::json multivector_to_json(const Multivector& u) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [I, c] : u.terms()) {
    terms.push_back({{"monomial", I.name()},
                     {"mask", I.mask()},
                     {"grade", I.grade()},
                     {"coeff", fraction_string(c)}});
  }
  return {{"terms", terms}, {"text", to_string(u)}};
}

inline nlohmann::json matrix_to_json(const RepMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(fraction_string(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"dim", m.dim()}, {"labels", m.labels()}, {"rows", rows}};
}

inline nlohmann::json split_to_json(const SplitElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : x.terms()) {
    const auto& [I1, I2] = key;
    terms.push_back({{"left", I1.name()},
                     {"right", I2.name()},
                     {"left_mask", I1.mask()},
                     {"right_mask", I2.mask()},
                     {"coeff", fraction_string(c)}});
  }
  return {{"factors", {x.p(), x.q()}}, {"terms", terms}, {"text", to_string(x)}};
}

inline nlohmann::json cases_to_json(const std::vector<VerifyCase>& cases) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cases) {
    arr.push_back({{"id", c.id}, {"pass", c.pass}, {"note", c.note}});
  }
  return arr;
}

inline void print_matrix_pretty(std::ostream& os, const RepMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.dim() + 1,
                                              std::vector<std::string>(m.dim() + 1));
  cells[0][0] = "";
  for (std::size_t j = 0; j < m.dim(); ++j) cells[0][j + 1] = m.labels()[j];
  for (std::size_t i = 0; i < m.dim(); ++i) {
    cells[i + 1][0] = m.labels()[i];
    for (std::size_t j = 0; j < m.dim(); ++j) {
      cells[i + 1][j + 1] = pretty_string(m.at(i, j));
    }
  }
  std::vector<std::size_t> width(m.dim() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      width[j] = std::max(width[j], row[j].size());
    }
  }
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << (j == 0 ? "" : "  ");
      os << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    os << "\n";
  }
}

// CSV cells hold only label characters and "num/den" strings, so no
// quoting is needed.
inline void print_matrix_csv(std::ostream& os, const RepMatrix& m) {
  os << "label";
  for (const auto& l : m.labels()) os << "," << l;
  os << "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << m.labels()[i];
    for (std::size_t j = 0; j < m.dim(); ++j) os << "," << fraction_string(m.at(i, j));
    os << "\n";
  }
}

inline void print_multivector_csv(std::ostream& os, const Multivector& u) {
  os << "mask,monomial,grade,coeff\n";
  for (const auto& [I, c] : u.terms()) {
    os << I.mask() << "," << I.name() << "," << I.grade() << "," << fraction_string(c)
       << "\n";
  }
}

inline void print_split_csv(std::ostream& os, const SplitElement& x) {
  os << "left,right,coeff\n";
  for (const auto& [key, c] : x.terms()) {
    const auto& [I1, I2] = key;
    os << I1.name() << "," << I2.name() << "," << fraction_string(c) << "\n";
  }
}

}  // namespace cliff
