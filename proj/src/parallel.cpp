#include "mstd/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mstd {

namespace {
std::atomic<unsigned> g_override{0};
}

unsigned thread_count() {
  if (const unsigned o = g_override.load()) return o;
  if (const char* env = std::getenv("MSTD_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void set_thread_count(unsigned n) { g_override = n; }

}  // namespace mstd
