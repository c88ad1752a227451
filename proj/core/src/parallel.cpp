#include "permcluster/parallel.hpp"

#include <cstdlib>
#include <string>

namespace permcluster {

unsigned default_threads() {
  if (const char* env = std::getenv("PERMCLUSTER_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace permcluster
