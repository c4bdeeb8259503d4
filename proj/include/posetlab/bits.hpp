#pragma once

#include <cstdint>
#include <vector>

namespace posetlab {

// Dense dynamic-width bit set used for poset rows and element sets.
// Width is fixed at construction; all binary operations require equal width.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int width() const { return nbits_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void clear() { for (auto& w : w_) w = 0; }
  void set_all() {
    for (auto& w : w_) w = ~std::uint64_t(0);
    trim();
  }

  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  // Lowest set bit, or -1.
  int lowest() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }

  // Highest set bit, or -1.
  int highest() const {
    for (std::size_t k = w_.size(); k-- > 0;)
      if (w_[k]) return int(k * 64 + 63 - __builtin_clzll(w_[k]));
    return -1;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  // this &= ~o
  Bits& subtract(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits and_not(Bits a, const Bits& b) { return a.subtract(b); }

  bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  template <class F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(int(k * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

 private:
  void trim() {
    int rem = nbits_ & 63;
    if (rem && !w_.empty()) w_.back() &= (std::uint64_t(1) << rem) - 1;
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace posetlab
