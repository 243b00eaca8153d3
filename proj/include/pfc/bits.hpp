// Dynamic fixed-capacity bitset used for frame rows, generator sets and C-ideals.
#ifndef PFC_BITS_HPP
#define PFC_BITS_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace pfc {

class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void clear() { for (auto& w : w_) w = 0; }

  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }
  friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }

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

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // Lexicographic comparison by element index (bit 0 most significant).
  bool lex_less(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] == o.w_[i]) continue;
      std::uint64_t d = w_[i] ^ o.w_[i];
      std::uint64_t low = d & ~(d - 1);
      return (o.w_[i] & low) == 0 ? false : true;  // first differing bit set in o?
    }
    return false;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(int(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= std::size_t(w);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace pfc

#endif
