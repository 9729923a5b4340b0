#include "vinerep/report.hpp"

#include <sstream>

namespace vinerep {

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& v : items)
    os << v.code << " at " << v.where << ": " << v.detail << "\n";
  return os.str();
}

}  // namespace vinerep
