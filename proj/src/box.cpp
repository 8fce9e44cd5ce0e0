#include "ivo/box.hpp"

namespace ivo {

std::string to_string(const Box& b) {
  std::string s;
  for (int i = 0; i < b.size(); ++i) {
    if (i) s += " x ";
    s += to_string(b[i]);
  }
  return s;
}

} // namespace ivo
