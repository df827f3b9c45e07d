#include "symdist/parallel.hpp"

#include <cstdlib>
#include <string>

namespace symdist {

int default_jobs() {
  if (const char* env = std::getenv("SYMMETRIC_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs > 0) return jobs;
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace symdist
