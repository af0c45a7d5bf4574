#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "biembed/embedding.hpp"

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(BIEMBED_DATA_DIR) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline biembed::RotationSystem load_table(int n) {
  return biembed::parse_rotation(read_fixture("table" + std::to_string(n) + ".rot"));
}
