#ifndef UNITL_TEST_UTIL_HPP
#define UNITL_TEST_UTIL_HPP

// Shared helpers for the test suites: run a callable and report which error
// code it threw, if any.

#include <optional>
#include <utility>

#include "unitl/errors.hpp"

namespace unitl_test {

template <class F>
std::optional<unitl::errc> thrown_code(F&& fn) {
  try {
    std::forward<F>(fn)();
  } catch (const unitl::error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace unitl_test

#endif
