#include "stingray/random.hpp"

#include <cstdlib>
#include <string>

namespace stingray {

std::uint64_t default_seed() {
  const char* env = std::getenv("STINGRAY_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(env, &used, 0);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  return kDefaultSeed;
}

}  // namespace stingray
