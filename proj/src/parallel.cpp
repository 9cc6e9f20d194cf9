#include "fracwave/parallel.hpp"

#include <cstdlib>
#include <string>

namespace fracwave {

int default_jobs() {
  if (const char* env = std::getenv("FRACWAVE_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? int(hc) : 1;
}

}  // namespace fracwave
