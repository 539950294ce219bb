#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <utility>
#include <vector>

namespace elliptica {

/// Lazily extended sequence whose i-th entry may depend on all earlier ones.
///
/// Filling happens under a single mutex, so callers on any thread see a
/// consistent prefix and no entry is computed twice. A builder must not call
/// get() on its own table; it receives the prefix instead.
template <class T>
class MemoSequence {
public:
    using Builder = std::function<T(std::size_t index, const std::vector<T>& prefix)>;

    explicit MemoSequence(Builder builder) : builder_(std::move(builder)) {}

    T get(std::size_t index) {
        std::lock_guard lock(mutex_);
        while (entries_.size() <= index) entries_.push_back(builder_(entries_.size(), entries_));
        return entries_[index];
    }

private:
    Builder builder_;
    std::mutex mutex_;
    std::vector<T> entries_;
};

}  // namespace elliptica
