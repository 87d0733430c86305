#include "edgecut/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace edgecut {

namespace {
std::atomic<int> g_override{0};
}

int worker_count() {
  if (const int forced = g_override.load(); forced > 0) return forced;
  if (const char* env = std::getenv("EDGECUT_THREADS"); env != nullptr && *env != '\0') {
    try {
      const int parsed = std::stoi(env);
      if (parsed > 0) return parsed;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void set_worker_count(int workers) { g_override.store(std::max(0, workers)); }

}  // namespace edgecut
