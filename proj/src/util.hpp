#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sigenum {

// Fixed-width bit vector with 0-based indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void assign(int i, bool v) { v ? set(i) : reset(i); }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (int i = 0; i < size_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(size_);
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace sigenum
