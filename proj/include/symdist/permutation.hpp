#pragma once

#include <span>
#include <string>
#include <vector>

namespace symdist {

/// Bijection on {0, ..., n-1}; vertex v maps to (*this)[v].
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int v) const { return image_[v]; }
  std::span<const int> images() const { return image_; }

  /// (this * other)[v] = this[other[v]]: apply `other` first.
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  /// Number of points moved.
  int support_size() const;
  bool is_identity() const { return support_size() == 0; }

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

}  // namespace symdist
