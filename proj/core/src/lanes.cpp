#include "mw/lanes.hpp"

namespace mw {

int native_lane_width() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx512f")) return 8;
  if (__builtin_cpu_supports("avx")) return 4;
#endif
  return 2;
}

}  // namespace mw
