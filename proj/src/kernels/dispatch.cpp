#include <cstdlib>
#include <string>

#include "spellfix/kernels/levenshtein_block.hpp"

namespace spellfix::kernels {

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(SPELLFIX_WITH_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() {
  if (const char* forced = std::getenv("SPELLFIX_KERNEL")) {
    if (std::string(forced) == "scalar") return Backend::scalar;
  }
  return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

BlockDistanceFn block_distance_fn(Backend backend) {
#if defined(SPELLFIX_WITH_AVX2)
  if (backend == Backend::avx2 && backend_available(Backend::avx2)) {
    return &block_distances_avx2;
  }
#else
  (void)backend;
#endif
  return &block_distances_scalar;
}

}  // namespace spellfix::kernels
