#pragma once

#include <string>

#include "lieq/serialize.hpp"

// Oracle-frozen invariants shared by the unit suites.
inline const lieq::json& golden() {
  static const lieq::json g = lieq::load_json_file(LIEQ_GOLDEN_FILE);
  return g;
}

inline const lieq::json& golden_signature(const std::string& name) {
  return golden().at("signatures").at(name);
}
