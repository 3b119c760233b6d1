#include "kprimes/farey.hpp"

#include "kprimes/errors.hpp"

namespace kprimes {

std::vector<FareyArc> farey_arcs(std::int64_t level, std::int64_t max_level) {
  if (level < 1 || level > max_level) {
    throw RangeError("Farey level " + std::to_string(level) + " outside [1, " + std::to_string(max_level) + "]");
  }
  // Consecutive fractions p0/q0 < p1/q1 of the Farey sequence, starting 0/1, 1/Q.
  std::vector<std::pair<std::int64_t, std::int64_t>> seq{{0, 1}};
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = level;
  seq.emplace_back(p1, q1);
  while (!(p1 == 1 && q1 == 1)) {
    const std::int64_t m = (level + q0) / q1;
    const std::int64_t p2 = m * p1 - p0;
    const std::int64_t q2 = m * q1 - q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    seq.emplace_back(p1, q1);
  }

  std::vector<FareyArc> arcs;
  arcs.reserve(seq.size() - 1);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const auto [a, q] = seq[i];
    FareyArc arc;
    arc.q = q;
    arc.a = a;
    if (a == 1 && q == 1) {
      arc.xi_left = Rational(-1, level + 1);
      arc.xi_right = Rational(1, level + 1);
    } else {
      const std::int64_t q_prev = seq[i - 1].second;
      const std::int64_t q_next = seq[i + 1].second;
      arc.xi_left = Rational(-1, q * (q + q_prev));
      arc.xi_right = Rational(1, q * (q + q_next));
    }
    arc.left = arc.center() + arc.xi_left;
    arc.right = arc.center() + arc.xi_right;
    arcs.push_back(arc);
  }
  return arcs;
}

FareyCoverCheck check_farey_cover(const std::vector<FareyArc>& arcs, std::int64_t level) {
  FareyCoverCheck out;
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && out.detail.empty()) out.detail = why;
    flag = false;
  };
  if (arcs.empty()) {
    fail(out.cover, "no arcs");
    return out;
  }
  const Rational start(1, level + 1);
  if (arcs.front().left != start) fail(out.cover, "first arc starts at " + arcs.front().left.str());
  if (arcs.back().right != Rational(1) + start) fail(out.cover, "last arc ends at " + arcs.back().right.str());
  Rational total;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const FareyArc& arc = arcs[i];
    if (!(arc.left < arc.right)) fail(out.disjoint, "empty arc at " + arc.center().str());
    if (arc.left != arc.center() + arc.xi_left || arc.right != arc.center() + arc.xi_right) {
      fail(out.cover, "ξ inconsistent at " + arc.center().str());
    }
    if (i > 0) {
      const FareyArc& prev = arcs[i - 1];
      if (prev.right < arc.left) fail(out.cover, "gap before " + arc.center().str());
      if (prev.right > arc.left) fail(out.disjoint, "overlap before " + arc.center().str());
      if (!(prev.center() < arc.center())) fail(out.disjoint, "centres out of order at " + arc.center().str());
    }
    const Rational inner(1, 2 * arc.q * level);
    const Rational outer(1, arc.q * level);
    if (!(arc.xi_left <= -inner && arc.xi_right >= inner && arc.xi_left >= -outer && arc.xi_right <= outer)) {
      fail(out.xi_bounds, "ξ bounds violated at " + arc.center().str());
    }
    total += arc.length();
  }
  if (total != Rational(1)) fail(out.total_length_one, "total length " + total.str());
  return out;
}

}  // namespace kprimes
