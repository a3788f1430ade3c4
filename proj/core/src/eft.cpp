#include "mw/eft.hpp"

#include <cfenv>
#include <stdexcept>

namespace mw {

bool round_to_nearest_active() noexcept { return std::fegetround() == FE_TONEAREST; }

void require_round_to_nearest() {
  if (!round_to_nearest_active())
    throw std::runtime_error("floating-point rounding mode is not round-to-nearest");
}

}  // namespace mw
