#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "svt/numeric.hpp"

namespace svt {

/// Consecutive terms a(offset), a(offset+1), ... of an integer sequence.
class BigSequence {
 public:
  BigSequence() = default;
  BigSequence(std::int64_t offset, std::vector<BigInt> terms);

  std::int64_t offset() const { return offset_; }
  std::int64_t last_index() const {
    return offset_ + static_cast<std::int64_t>(terms_.size()) - 1;
  }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// a(n) by sequence index; throws UsageError when out of range.
  const BigInt& at(std::int64_t n) const;
  const std::vector<BigInt>& terms() const { return terms_; }

  void push_back(BigInt value) { terms_.push_back(std::move(value)); }

  /// Terms with index in [first, last].
  BigSequence slice(std::int64_t first, std::int64_t last) const;

  friend bool operator==(const BigSequence&, const BigSequence&) = default;

 private:
  std::int64_t offset_ = 1;
  std::vector<BigInt> terms_;
};

}  // namespace svt
