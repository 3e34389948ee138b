#include "svt/multi_index.hpp"

#include <numeric>
#include <sstream>

#include "svt/numeric.hpp"

namespace svt {

MultiIndex::MultiIndex(std::size_t dim, value_type fill) {
  if (dim > kMaxDim) throw UsageError("dimension exceeds kMaxDim");
  dim_ = static_cast<std::uint8_t>(dim);
  std::fill(begin(), end(), fill);
}

MultiIndex::MultiIndex(std::initializer_list<value_type> entries)
    : MultiIndex(std::span<const value_type>(entries.begin(), entries.size())) {}

MultiIndex::MultiIndex(std::span<const value_type> entries) {
  if (entries.size() > kMaxDim) throw UsageError("dimension exceeds kMaxDim");
  dim_ = static_cast<std::uint8_t>(entries.size());
  std::copy(entries.begin(), entries.end(), e_.begin());
}

std::int64_t MultiIndex::total() const {
  return std::accumulate(begin(), end(), std::int64_t{0});
}

bool MultiIndex::nonnegative() const {
  return std::all_of(begin(), end(), [](value_type v) { return v >= 0; });
}

bool MultiIndex::any_zero() const {
  return std::any_of(begin(), end(), [](value_type v) { return v == 0; });
}

bool MultiIndex::leq(const MultiIndex& cap) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (e_[i] > cap.e_[i]) return false;
  }
  return true;
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) os << ',';
    os << e_[i];
  }
  os << ')';
  return os.str();
}

void require_valid(const MultiIndex& m, const char* what) {
  if (m.empty()) throw UsageError(std::string(what) + ": dimension must be >= 1");
  if (!m.nonnegative()) {
    throw UsageError(std::string(what) + ": negative entry in " + m.str());
  }
}

}  // namespace svt
