#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace pfdimers {

// Z/2 vectors indexed by edges or vertices; one byte per entry keeps
// indexing trivial and the sizes involved are small.
using Bits = std::vector<std::uint8_t>;
using Z2Matrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

inline void xor_into(Bits& target, const Bits& other) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] ^= other[i];
}

inline Bits xor_of(Bits a, const Bits& b) {
  xor_into(a, b);
  return a;
}

inline int dot(const Bits& a, const Bits& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s ^= (a[i] & b[i]);
  return s;
}

inline bool is_zero(const Bits& a) {
  for (auto x : a)
    if (x) return false;
  return true;
}

inline int popcount(const Bits& a) {
  int n = 0;
  for (auto x : a) n += x != 0;
  return n;
}

// Bit i of an integer mask, as used for subset enumeration over a basis.
inline int mask_bit(std::uint64_t mask, int i) { return static_cast<int>((mask >> i) & 1u); }

int z2_rank(Z2Matrix m);
std::optional<Z2Matrix> z2_inverse(const Z2Matrix& m);
// Solves m x = rhs; returns nullopt when inconsistent. Free variables are 0.
std::optional<Bits> z2_solve(const Z2Matrix& m, const Bits& rhs);

// Incremental row-echelon basis of a subspace of Z/2^n.
class Z2Eliminator {
 public:
  explicit Z2Eliminator(int length) : length_(length) {}

  Bits reduce(Bits v) const;
  // Adds v and returns true if it was independent of what was already there.
  bool insert(const Bits& v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int length_;
  std::vector<Bits> rows_;
  std::vector<int> pivots_;
};

}  // namespace pfdimers
