#include "dualwave/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace dualwave {

static int read_thread_cap() {
  int hw = omp_get_max_threads();
  if (const char* env = std::getenv("DUALWAVE_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (...) {
      // fall through to default on unparseable values
    }
  }
  return hw > 0 ? hw : 1;
}

int max_threads() {
  static const int cap = read_thread_cap();
  return cap;
}

}  // namespace dualwave
