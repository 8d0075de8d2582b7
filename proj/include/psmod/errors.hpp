#pragma once

#include <stdexcept>
#include <string>

namespace psmod {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid input: bad shapes, bad field spec, bad JSON, invalid
// category (cycle / redundant edge / disconnected), inadmissible support, etc.
struct MalformedInput : Error {
  explicit MalformedInput(const std::string& what) : Error(what) {}
};

// Two directed paths between the same pair of objects compose to different
// matrices; the module is not a functor.
struct PathConflict : Error {
  std::string src;
  std::string dst;
  PathConflict(std::string src_, std::string dst_, const std::string& detail)
      : Error("path conflict between '" + src_ + "' and '" + dst_ + "': " + detail),
        src(std::move(src_)),
        dst(std::move(dst_)) {}
};

// Intersection closure exceeded its member-count cap.
struct FlagCapExceeded : Error {
  std::size_t cap;
  explicit FlagCapExceeded(std::size_t cap_)
      : Error("multi-flag closure exceeded the member cap of " + std::to_string(cap_)),
        cap(cap_) {}
};

// An operation that needs a stabilized local structure received a capped one.
struct NotStabilized : Error {
  explicit NotStabilized(const std::string& what) : Error(what) {}
};

// An operation that needs a verified compatible inner-product structure was
// called without one (missing grams, or verification failed).
struct IpcRequired : Error {
  explicit IpcRequired(const std::string& what) : Error(what) {}
};

// A self-check guarding a structural contract failed; indicates a bug or a
// module outside the theory's guarantees, never a user error.
struct InternalCheckFailure : Error {
  explicit InternalCheckFailure(const std::string& what)
      : Error("internal contract violation: " + what) {}
};

}  // namespace psmod
