#pragma once

#include <cstddef>
#include <vector>

#include "ged/matrix.hpp"

namespace ged {

/// Bijection on 0..n-1; image(i) is the node of g2 that node i of g1 maps to.
/// Matrix form P has P(i, image(i)) = 1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `mapping` is a bijection on 0..n-1.
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t n);
  /// Reads a permutation back from a 0/1 matrix; throws if it is not one.
  static Permutation from_matrix(const Matrix& p);

  std::size_t size() const { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& mapping() const { return map_; }

  Permutation inverse() const;
  /// The mapping i -> next[(*this)[i]]; matrix form is this * next.
  Permutation then(const Permutation& next) const;
  Matrix matrix() const;

  bool is_identity() const;
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::size_t> map_;
};

}  // namespace ged
