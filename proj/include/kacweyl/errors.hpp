#pragma once

#include <stdexcept>
#include <string>

namespace kacweyl {

struct NotReducedError : std::runtime_error {
  explicit NotReducedError(const std::string& what) : std::runtime_error(what) {}
};

struct NotInOrbitError : std::runtime_error {
  explicit NotInOrbitError(const std::string& what) : std::runtime_error(what) {}
};

struct NotXDominantError : std::runtime_error {
  explicit NotXDominantError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedLabelError : std::runtime_error {
  explicit UnsupportedLabelError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceCapError : std::runtime_error {
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kacweyl
