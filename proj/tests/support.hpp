#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "circuitsplit/matrix.hpp"
#include "circuitsplit/network.hpp"

namespace testsupport {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(CIRCUITSPLIT_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) { return std::string(CIRCUITSPLIT_TEST_DATA) + "/" + name; }

inline circuitsplit::ExtMatrix load_matrix(const std::string& name) {
  return circuitsplit::parse_matrix(read_data(name));
}

inline circuitsplit::CircularNetwork load_network(const std::string& name) {
  return circuitsplit::parse_network(read_data(name));
}

}  // namespace testsupport
