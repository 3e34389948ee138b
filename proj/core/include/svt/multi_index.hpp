#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace svt {

inline constexpr std::size_t kMaxDim = 16;

/// Exponent vector of a monomial in d variables. Doubles as a tensor
/// shape (m_1, ..., m_d). Storage is inline; d is capped at kMaxDim.
class MultiIndex {
 public:
  using value_type = std::int32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim, value_type fill = 0);
  MultiIndex(std::initializer_list<value_type> entries);
  explicit MultiIndex(std::span<const value_type> entries);

  std::size_t size() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  value_type& operator[](std::size_t i) { return e_[i]; }
  value_type operator[](std::size_t i) const { return e_[i]; }

  value_type* begin() { return e_.data(); }
  value_type* end() { return e_.data() + dim_; }
  const value_type* begin() const { return e_.data(); }
  const value_type* end() const { return e_.data() + dim_; }

  std::int64_t total() const;
  bool nonnegative() const;
  bool any_zero() const;

  /// Componentwise <=.
  bool leq(const MultiIndex& cap) const;

  MultiIndex sorted() const {
    MultiIndex out = *this;
    std::sort(out.begin(), out.end());
    return out;
  }
  bool is_sorted() const { return std::is_sorted(begin(), end()); }

  std::string str() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.dim_ == b.dim_ && std::equal(a.begin(), a.end(), b.begin());
  }
  /// Lexicographic on the entries, shorter first on ties.
  friend std::strong_ordering operator<=>(const MultiIndex& a,
                                          const MultiIndex& b) {
    const std::size_t n = std::min(a.dim_, b.dim_);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    }
    return a.dim_ <=> b.dim_;
  }

 private:
  std::array<value_type, kMaxDim> e_{};
  std::uint8_t dim_ = 0;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : m) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ m.size());
  }
};

/// Validates user-facing input: 1 <= d <= kMaxDim and no negative entries.
/// Throws UsageError otherwise.
void require_valid(const MultiIndex& m, const char* what);

}  // namespace svt
