#include "imac/channel.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace imac {

namespace {

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(field) + " must be finite");
  }
}

void require_positive(double v, const char* field) {
  require_finite(v, field);
  if (v <= 0.0) {
    throw std::invalid_argument(std::string(field) + " must be > 0");
  }
}

}  // namespace

UserSet::UserSet(std::initializer_list<int> users) {
  for (int u : users) {
    if (u < 1 || u > 4) {
      throw std::invalid_argument("user index must be in {1,2,3,4}");
    }
    bits_ |= static_cast<std::uint8_t>(1u << (u - 1));
  }
}

int UserSet::size() const { return std::popcount(bits_); }

std::vector<int> UserSet::users() const {
  std::vector<int> out;
  for (int u = 1; u <= 4; ++u) {
    if (contains(u)) out.push_back(u);
  }
  return out;
}

ImacChannel::ImacChannel(double p1, double p2, double h1, double h2)
    : p1(p1), p2(p2), h1(h1), h2(h2) {
  require_positive(p1, "p1");
  require_positive(p2, "p2");
  require_finite(h1, "h1");
  require_finite(h2, "h2");
}

double inr(const ImacChannel& ch) {
  return ch.h1 * ch.h1 * ch.p1 + ch.h2 * ch.h2 * ch.p2;
}

MacSpec mac_spec(const ImacChannel& ch, UserSet users, int receiver,
                 double noise) {
  if (users.empty()) throw std::invalid_argument("users must be nonempty");
  if (receiver != 1 && receiver != 2) {
    throw std::invalid_argument("receiver must be 1 or 2");
  }
  require_positive(noise, "noise");

  // Receiver 1 hears users 1,2 directly and 3,4 through h1,h2; receiver 2
  // is the mirror image.
  auto gain_at = [&](int user) {
    const bool direct = (receiver == 1) ? (user <= 2) : (user >= 3);
    if (direct) return 1.0;
    return (user == 1 || user == 3) ? ch.h1 : ch.h2;
  };
  auto power_of = [&](int user) {
    return (user == 1 || user == 3) ? ch.p1 : ch.p2;
  };

  std::vector<MacUser> spec_users;
  for (int u : users.users()) {
    spec_users.push_back({power_of(u), gain_at(u)});
  }
  return MacSpec(std::move(spec_users), noise);
}

}  // namespace imac
