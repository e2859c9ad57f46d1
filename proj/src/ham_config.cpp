#include "hamfrac/ham_config.hpp"

#include <cmath>
#include <string>

#include "hamfrac/errors.hpp"

namespace hamfrac {

void HamConfig::validate() const {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0) {
    throw DomainError("alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
  if (!std::isfinite(hbar) || hbar == 0.0) {
    throw DomainError("hbar must be finite and nonzero");
  }
  if (m_terms < 0) throw DomainError("term count M must be nonnegative");
  if (!std::isfinite(a) || a < psi.domain_min()) {
    throw DomainError("lower terminal a = " + std::to_string(a) + " outside the domain of psi '" +
                      psi.name() + "'");
  }
  grid.validate();
}

}  // namespace hamfrac
