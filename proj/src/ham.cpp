#include "hamfrac/ham.hpp"

namespace hamfrac {

int chi_switch(int m) {
  if (m < 1) throw DomainError("chi_switch: m must be >= 1, got " + std::to_string(m));
  return m == 1 ? 0 : 1;
}

}  // namespace hamfrac
