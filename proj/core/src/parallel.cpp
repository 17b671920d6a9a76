#include "mahonian/parallel.hpp"

namespace mahonian {

namespace {
std::atomic<unsigned> g_default_jobs{1};
}  // namespace

unsigned default_jobs() { return g_default_jobs.load(); }

void set_default_jobs(unsigned jobs) { g_default_jobs.store(jobs == 0 ? 1 : jobs); }

}  // namespace mahonian

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mahonian/limits.hpp"

namespace mahonian {

int enumeration_ceiling() {
  static const int ceiling = [] {
    const char* raw = std::getenv("MAHONIAN_MAX_N");
    if (raw == nullptr || *raw == '\0') {
      return 9;
    }
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 0 || value > 20) {
      throw std::invalid_argument("MAHONIAN_MAX_N must be an integer in [0, 20]");
    }
    return static_cast<int>(value);
  }();
  return ceiling;
}

void require_within_ceiling(int n, const char* what) {
  if (n > enumeration_ceiling()) {
    throw std::length_error(std::string(what) + ": n=" + std::to_string(n) +
                            " exceeds the enumeration ceiling " +
                            std::to_string(enumeration_ceiling()) + " (MAHONIAN_MAX_N)");
  }
}

}  // namespace mahonian
