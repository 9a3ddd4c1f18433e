#include "dascent/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "dascent/genfun.hpp"
#include "dascent/polynomial.hpp"

namespace dascent {

std::string table_csv(int which, Entry max_d, Entry max_n) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("table_csv: table number must be 1 or 2");
  if (max_d < 0 || max_n < 0)
    throw std::invalid_argument("table_csv: bounds must be >= 0");
  std::ostringstream os;
  os << "d\\n";
  for (Entry n = 0; n <= max_n; ++n) os << ',' << n;
  os << '\n';
  for (Entry d = 0; d <= max_d; ++d) {
    auto counts = which == 1 ? self_gf(d, max_n).counts()
                             : shifted_self(d, max_n).counts();
    os << d;
    for (Entry n = 0; n <= max_n; ++n)
      os << ',' << counts[static_cast<std::size_t>(n)];
    os << '\n';
  }
  return os.str();
}

}  // namespace dascent
