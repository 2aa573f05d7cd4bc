#pragma once

#include <mutex>
#include <optional>
#include <utility>

namespace ringlab::detail {

/// Write-once memoization cell. Initialization is race-safe: call_once keeps
/// torn writes impossible, and a throwing computation leaves the cell
/// untouched so a later call may retry.
template <class T>
class Lazy {
public:
    template <class F>
    const T& get(F&& compute) const {
        std::call_once(flag_, [&] { value_.emplace(compute()); });
        return *value_;
    }

    bool ready() const { return value_.has_value(); }

private:
    mutable std::once_flag flag_;
    mutable std::optional<T> value_;
};

}  // namespace ringlab::detail
