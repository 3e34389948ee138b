#include "svt/sequence.hpp"

#include <string>

namespace svt {

BigSequence::BigSequence(std::int64_t offset, std::vector<BigInt> terms)
    : offset_(offset), terms_(std::move(terms)) {}

const BigInt& BigSequence::at(std::int64_t n) const {
  if (n < offset_ || n > last_index()) {
    throw UsageError("sequence index " + std::to_string(n) + " out of range");
  }
  return terms_[static_cast<std::size_t>(n - offset_)];
}

BigSequence BigSequence::slice(std::int64_t first, std::int64_t last) const {
  if (first < offset_ || last > last_index() || first > last + 1) {
    throw UsageError("sequence slice out of range");
  }
  std::vector<BigInt> out(terms_.begin() + (first - offset_),
                          terms_.begin() + (last - offset_ + 1));
  return BigSequence(first, std::move(out));
}

}  // namespace svt
