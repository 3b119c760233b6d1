#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kprimes/rational.hpp"

namespace kprimes {

inline constexpr std::int64_t kDefaultFareyLevelMax = 10'000;

/// Arc of the level-Q Farey dissection around a/q: (left, right] in α, and the
/// same interval re-centred at the origin, (xi_left, xi_right] in η.
struct FareyArc {
  std::int64_t q = 1;
  std::int64_t a = 1;
  Rational left;
  Rational right;
  Rational xi_left;
  Rational xi_right;

  Rational center() const { return Rational(a, q); }
  Rational length() const { return right - left; }
};

/// Arcs for a/q in (0, 1], q <= Q, in increasing order; their union is
/// (1/(Q+1), 1 + 1/(Q+1)].
std::vector<FareyArc> farey_arcs(std::int64_t level, std::int64_t max_level = kDefaultFareyLevelMax);

struct FareyCoverCheck {
  bool cover = true;     // consecutive arcs abut and the ends are 1/(Q+1), 1 + 1/(Q+1)
  bool disjoint = true;  // strictly increasing, non-empty arcs
  bool total_length_one = true;
  bool xi_bounds = true;  // (-1/(2qQ), 1/(2qQ)) ⊆ ξ ⊆ (-1/(qQ), 1/(qQ)]
  std::string detail;
  bool ok() const noexcept { return cover && disjoint && total_length_one && xi_bounds; }
};

FareyCoverCheck check_farey_cover(const std::vector<FareyArc>& arcs, std::int64_t level);

}  // namespace kprimes
