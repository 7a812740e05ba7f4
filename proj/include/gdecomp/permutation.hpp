#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "gdecomp/error.hpp"

namespace gdecomp {

/// Bijection on {0, ..., m-1}. image()[i] is pi(i).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
      if (v >= image_.size() || seen[v]) {
        throw Error(ErrorCode::InvalidIndexSet, "permutation is not a bijection");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t m) {
    std::vector<std::size_t> img(m);
    for (std::size_t i = 0; i < m; ++i) img[i] = i;
    return Permutation(std::move(img));
  }

  static Permutation transposition(std::size_t m, std::size_t a, std::size_t b) {
    auto p = identity(m).image_;
    if (a >= m || b >= m) throw Error(ErrorCode::InvalidIndexSet, "transposition");
    std::swap(p[a], p[b]);
    return Permutation(std::move(p));
  }

  std::size_t order() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_.at(i); }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.order() != q.order()) {
      throw Error(ErrorCode::OrderMismatch, "composing permutations of different order");
    }
    std::vector<std::size_t> img(p.order());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = p(q(i));
    return Permutation(std::move(img));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Every permutation of {0..m-1} in lexicographic order of images.
inline std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<std::size_t> img(m);
  for (std::size_t i = 0; i < m; ++i) img[i] = i;
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace gdecomp
