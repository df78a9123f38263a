#pragma once

#include <sstream>
#include <string>

namespace colombeau {

/// Shortest round-trip-ish rendering used in labels ("0.3", "2", "1e-05").
inline std::string format_number(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

}  // namespace colombeau
