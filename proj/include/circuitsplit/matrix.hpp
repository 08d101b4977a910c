#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circuitsplit/ext_rational.hpp"
#include "json.hpp"

namespace circuitsplit {

// Square matrix over ExtRat. Used both for response matrices M (positive
// off-diagonals, nonpositive diagonal) and resistance matrices W.
class ExtMatrix {
 public:
  ExtMatrix() = default;
  explicit ExtMatrix(std::size_t n) : n_(n), data_(n * n, ExtRat(0)) {}

  std::size_t size() const { return n_; }

  // 0-based access.
  ExtRat& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const ExtRat& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  // 1-based access by label.
  const ExtRat& label(int i, int j) const { return at(i - 1, j - 1); }

  bool is_symmetric() const;

  friend bool operator==(const ExtMatrix&, const ExtMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExtRat> data_;
};

// Matrices are JSON arrays of arrays of strings; "inf"/"-inf" are sentinels.
nlohmann::json matrix_to_json(const ExtMatrix& m);
ExtMatrix matrix_from_json(const nlohmann::json& j);
ExtMatrix parse_matrix(const std::string& text);

// Row-aligned text layout, one row per line.
std::string matrix_to_table(const ExtMatrix& m);

}  // namespace circuitsplit
