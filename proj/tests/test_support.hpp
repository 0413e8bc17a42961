#pragma once

#include "abels/errors.hpp"

#include <optional>

namespace test_support {

/// Kind of the abels::Error thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<abels::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const abels::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace test_support
