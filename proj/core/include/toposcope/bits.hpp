#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace toposcope {

// Fixed-capacity dynamic bitset. Order comparisons are lexicographic on the
// word representation, which makes sets usable as deterministic map keys.
class Bits {
 public:
  Bits() : n_(0) {}
  explicit Bits(std::size_t n, bool value = false)
      : n_(n), w_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  // this ⊆ o
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  friend bool operator==(const Bits& a, const Bits& b) = default;
  friend auto operator<=>(const Bits& a, const Bits& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.w_ <=> b.w_;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
  }
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

}  // namespace toposcope
