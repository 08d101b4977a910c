#include "circuitsplit/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "circuitsplit/error.hpp"

namespace circuitsplit {

bool ExtMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

nlohmann::json matrix_to_json(const ExtMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

ExtRat entry_from_json(const nlohmann::json& e) {
  if (e.is_string()) return ExtRat::parse(e.get<std::string>());
  if (e.is_number_integer()) return ExtRat(e.get<long>());
  throw DomainError("matrix entries must be strings or integers");
}

}  // namespace

ExtMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("matrix must be a JSON array of rows");
  ExtMatrix m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != j.size()) {
      throw DomainError("matrix must be square", {{"row", i + 1}});
    }
    for (std::size_t k = 0; k < row.size(); ++k) m.at(i, k) = entry_from_json(row[k]);
  }
  return m;
}

ExtMatrix parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

std::string matrix_to_table(const ExtMatrix& m) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) width = std::max(width, m.at(i, j).to_string().size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      auto s = m.at(i, j).to_string();
      os << std::string(width - s.size() + (j == 0 ? 0 : 2), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace circuitsplit
