#include "symdist/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace symdist {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= size() || hit[x]) throw std::invalid_argument("not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(image_.size());
  for (int v = 0; v < size(); ++v) out[v] = image_[other[v]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(image_.size());
  for (int v = 0; v < size(); ++v) out[image_[v]] = v;
  return Permutation(std::move(out));
}

int Permutation::support_size() const {
  int moved = 0;
  for (int v = 0; v < size(); ++v) moved += image_[v] != v;
  return moved;
}

std::string Permutation::to_string() const {
  std::string out = "(";
  for (int v = 0; v < size(); ++v) {
    if (v) out += ' ';
    out += std::to_string(image_[v]);
  }
  return out + ")";
}

}  // namespace symdist
