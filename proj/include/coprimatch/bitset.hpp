#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "coprimatch/kernels.hpp"

namespace coprimatch {

// Dynamic bitset with the word ops routed through the dispatched kernels.
// Bits past size() are kept zero so count() and operator== stay honest.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return w_.size(); }
  const uint64_t* words() const { return w_.data(); }

  void set(std::size_t i) {
    assert(i < nbits_);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < nbits_);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  void set_all() {
    std::fill(w_.begin(), w_.end(), ~uint64_t{0});
    trim_tail();
  }

  std::size_t count() const { return kernels::ops().popcount(w_.data(), w_.size()); }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    kernels::ops().or_acc(w_.data(), o.w_.data(), w_.size());
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    kernels::ops().and_words(w_.data(), w_.data(), o.w_.data(), w_.size());
    return *this;
  }
  // *this = a & ~b
  void assign_and_not(const Bitset& a, const Bitset& b) {
    assert(a.nbits_ == b.nbits_);
    nbits_ = a.nbits_;
    w_.resize(a.w_.size());
    kernels::ops().and_not(w_.data(), a.w_.data(), b.w_.data(), w_.size());
  }
  // *this = ~src (within size)
  void assign_not(const Bitset& src) {
    nbits_ = src.nbits_;
    w_.resize(src.w_.size());
    kernels::ops().not_words(w_.data(), src.w_.data(), w_.size());
    trim_tail();
  }

  std::size_t find_first() const { return find_from_word(0); }
  std::size_t find_next(std::size_t i) const {
    ++i;
    if (i >= nbits_) return npos;
    std::size_t wi = i >> 6;
    uint64_t w = w_[wi] & (~uint64_t{0} << (i & 63));
    if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
    return find_from_word(wi + 1);
  }

  bool operator==(const Bitset&) const = default;

 private:
  std::size_t find_from_word(std::size_t wi) const {
    for (; wi < w_.size(); ++wi)
      if (w_[wi]) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w_[wi]));
    return npos;
  }
  void trim_tail() {
    if (nbits_ & 63) w_.back() &= (~uint64_t{0}) >> (64 - (nbits_ & 63));
  }

  std::size_t nbits_ = 0;
  std::vector<uint64_t> w_;
};

// Calls fn(index) for every set bit in ascending order.
template <typename Fn>
void for_each_set(const Bitset& b, Fn&& fn) {
  for (std::size_t i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) fn(i);
}

}  // namespace coprimatch
