#include "linrez/parallel.hpp"

#include <cstdlib>
#include <string>

#include "linrez/errors.hpp"

namespace linrez {

unsigned resolve_threads(std::optional<unsigned> requested) {
  if (requested) return std::max(1u, *requested);
  if (const char* env = std::getenv("LINREZ_THREADS"); env && *env) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw ArgumentError(std::string("LINREZ_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace linrez
