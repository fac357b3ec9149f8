#pragma once

#include <stdexcept>
#include <string_view>
#include <utility>
#include <variant>

namespace ispec {

/// Why a verified computation gave up. These are data, not exceptions: the
/// experiment harness tallies them.
enum class FailureCause {
  kSolverFailed,      // midpoint eigensolve or its verification failed
  kDiscsIntersect,    // eigenvalue discs are not pairwise disjoint
  kEigvecFailed,      // no candidate reduced system could be verified
  kInversionFailed,   // eigenvector enclosure possibly singular
};

std::string_view to_string(FailureCause cause);

/// Either a value or the FailureCause that prevented it.
template <typename T>
class Result {
 public:
  // NOLINTNEXTLINE(google-explicit-constructor)
  Result(T value) : v_(std::move(value)) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  Result(FailureCause cause) : v_(cause) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Result: no value");
    return std::get<T>(v_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Result: no value");
    return std::get<T>(std::move(v_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  FailureCause failure() const {
    if (ok()) throw std::logic_error("Result: holds a value");
    return std::get<FailureCause>(v_);
  }

 private:
  std::variant<T, FailureCause> v_;
};

}  // namespace ispec
