#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace trisys {

/// Outcome of a bounded backtracking search. `Absent` means the search space
/// was provably empty; `Exhausted` means the node budget ran out first.
enum class SearchStatus { Found, Absent, Exhausted };

/// A construction produced something its own validator rejects.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested order lies in a residue class with no 3-pyramidal system.
struct NonExistenceError : std::runtime_error {
  long long v;
  std::string residue;
  NonExistenceError(long long v_, std::string residue_, const std::string& what)
      : std::runtime_error(what), v(v_), residue(std::move(residue_)) {}
};

/// Default backtracking budget; the TRISYS_NODE_LIMIT env var overrides it.
inline long long default_node_limit() {
  if (const char* env = std::getenv("TRISYS_NODE_LIMIT")) {
    char* end = nullptr;
    long long parsed = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
  }
  return 50'000'000;
}

}  // namespace trisys
