#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "imac/polymatroid.hpp"

namespace imac {

/// Subset of the four transmitters {1,2,3,4}, stored as a bitmask
/// (bit i-1 set <=> user i present).
class UserSet {
 public:
  constexpr UserSet() = default;
  explicit constexpr UserSet(std::uint8_t bits) : bits_(bits & 0x0f) {}
  UserSet(std::initializer_list<int> users);

  bool contains(int user) const { return (bits_ >> (user - 1)) & 1u; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::uint8_t bits() const { return bits_; }
  std::vector<int> users() const;  // ascending

  static constexpr UserSet all() { return UserSet(0x0f); }

  friend bool operator==(UserSet, UserSet) = default;
  friend std::strong_ordering operator<=>(UserSet a, UserSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint8_t bits_ = 0;
};

/// Two interfering Gaussian 2-user MACs, parameterized by (P1,P2,h1,h2).
/// Users 3 and 4 share the power constraints of users 1 and 2; direct
/// links have unit gain and both receivers see unit noise.
struct ImacChannel {
  double p1;  // power of users 1 and 3
  double p2;  // power of users 2 and 4
  double h1;  // cross gain, signed
  double h2;  // cross gain, signed

  ImacChannel(double p1, double p2, double h1, double h2);
};

/// Total interference power at either receiver: h1^2 p1 + h2^2 p2.
double inr(const ImacChannel& ch);

/// The MAC from `users` to `receiver` (1 or 2) under the given noise
/// variance, users ordered ascending by index.
MacSpec mac_spec(const ImacChannel& ch, UserSet users, int receiver,
                 double noise);

}  // namespace imac
