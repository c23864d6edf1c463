// vgdlgen/expected.hpp - Minimal value-or-error container used across the
// library until std::expected is available.
#pragma once

#include <cassert>
#include <utility>
#include <variant>

namespace vgdlgen {

template <typename T, typename E>
class Expected {
 public:
  Expected(T value) : storage_(std::in_place_index<0>, std::move(value)) {}
  Expected(E error) : storage_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return storage_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() {
    assert(ok());
    return std::get<0>(storage_);
  }
  const T& value() const {
    assert(ok());
    return std::get<0>(storage_);
  }
  E& error() {
    assert(!ok());
    return std::get<1>(storage_);
  }
  const E& error() const {
    assert(!ok());
    return std::get<1>(storage_);
  }

 private:
  std::variant<T, E> storage_;
};

}  // namespace vgdlgen
