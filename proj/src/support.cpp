#include "gft/support.hpp"

#include <cstdlib>
#include <string>

namespace gft {

unsigned worker_count() {
  if (const char* env = std::getenv("GFT_RADII_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace gft
