#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantorval {

/// Thrown when an exact enumeration would grow past its configured size.
/// Results are never truncated; callers either raise the cap or give up.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::string stage, std::size_t cap)
      : std::runtime_error(stage + ": exceeded capacity of " + std::to_string(cap)),
        stage_(std::move(stage)),
        cap_(cap) {}

  const std::string& stage() const noexcept { return stage_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::string stage_;
  std::size_t cap_;
};

/// Malformed or invalid family / series description.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultCap = 2'000'000;

}  // namespace cantorval
