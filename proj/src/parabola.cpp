#include "diffset/parabola.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "diffset/number_theory.hpp"
#include "diffset/random_stream.hpp"
#include "diffset/rational.hpp"
#include "diffset/representation.hpp"

namespace diffset {

namespace {

void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

// r_A(target) by membership lookups over a dense indicator of (Z/p)^2.
std::int64_t count_differences(const GroupSubset& a, const std::vector<char>& member, std::int64_t target) {
  const GroupSpec& g = a.group();
  std::int64_t c = 0;
  for (auto x : a.indices()) c += member[static_cast<std::size_t>(g.sub(x, target))];
  return c;
}

}  // namespace

GroupSubset parabola_set(std::int64_t p, std::int64_t u) {
  require_odd_prime(p);
  if (mod_reduce(u, p) == 0) throw std::invalid_argument("u must be invertible");
  const std::int64_t inv = mod_inverse(u, p);
  std::vector<GroupSpec::Element> pts;
  pts.reserve(static_cast<std::size_t>(p));
  for (std::int64_t x = 0; x < p; ++x) pts.push_back({x, x * x % p * inv % p});
  return GroupSubset(GroupSpec({p, p}), pts);
}

PairCount pair_rep_count(std::int64_t p, std::int64_t u, std::int64_t v, std::int64_t a, std::int64_t b) {
  require_odd_prime(p);
  u = mod_reduce(u, p);
  v = mod_reduce(v, p);
  a = mod_reduce(a, p);
  b = mod_reduce(b, p);
  if (u == 0 || v == 0) throw std::invalid_argument("u and v must be invertible");
  PairCount out;
  if (u != v) {
    // (v-u) y^2 + 2av y + (a^2 v - buv) = 0 has 1 + (disc/p) roots.
    std::int64_t inner = mod_reduce(a * a - b * mod_reduce(u - v, p), p);
    out.discriminant = 4 * u % p * v % p * inner % p;
    out.legendre = legendre_symbol(out.discriminant, p);
    out.count = 1 + out.legendre;
    out.via_discriminant = true;
    return out;
  }
  // u == v: (x - y)(x + y) = bu with x - y = a.
  if (a != 0) {
    out.count = 1;
  } else {
    out.count = b == 0 ? p : 0;
  }
  return out;
}

std::int64_t shift_score(std::int64_t p, std::int64_t k, std::int64_t t) {
  require_odd_prime(p);
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (t < 0 || t > p - k - 1) {
    throw std::invalid_argument("shift t=" + std::to_string(t) + " outside [0, p-k-1]");
  }
  std::vector<int> chi(static_cast<std::size_t>(k) + 1);
  for (std::int64_t i = 1; i <= k; ++i) chi[static_cast<std::size_t>(i)] = legendre_symbol(t + i, p);
  std::int64_t score = 0;
  for (std::int64_t l = -(k - 1); l <= k - 1; ++l) {
    std::int64_t inner = 0;
    for (std::int64_t j = std::max<std::int64_t>(1, 1 - l); j <= std::min(k, k - l); ++j) {
      inner += chi[static_cast<std::size_t>(j + l)] * chi[static_cast<std::size_t>(j)];
    }
    score += std::llabs(inner);
  }
  return score;
}

std::int64_t parabola_guarantee(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  // ceil(c - sqrt(4k^3)) = c - floor(sqrt(4k^3)) for integer c.
  Integer four_k3 = Integer(4) * k * k * k;
  return k * k - 2 * (k - 1) - floor_sqrt(four_k3).get_si();
}

GroupSubset parabola_union_set(std::int64_t p, std::int64_t k, std::int64_t t) {
  require_odd_prime(p);
  if (k < 1 || t < 0 || t + k > p - 1) throw std::invalid_argument("invalid parabola union parameters");
  GroupSpec g({p, p});
  std::vector<std::int64_t> idx;
  idx.reserve(static_cast<std::size_t>(k * (p - 1) + 1));
  for (std::int64_t u = t + 1; u <= t + k; ++u) {
    const std::int64_t inv = mod_inverse(u, p);
    for (std::int64_t x = 0; x < p; ++x) idx.push_back(x * p + x * x % p * inv % p);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return GroupSubset::from_indices(g, std::move(idx));
}

ParabolaUnion best_shift_union(std::int64_t p, std::int64_t k, const UnionOptions& opts) {
  require_odd_prime(p);
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (p <= k + 1) throw std::invalid_argument("no admissible shift");
  ParabolaUnion out;
  out.p = p;
  out.k = k;
  out.score = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t t = 0; t <= p - k - 1; ++t) {
    std::int64_t s = shift_score(p, k, t);
    if (s < out.score) {
      out.score = s;
      out.t = t;
    }
  }
  out.set = parabola_union_set(p, k, out.t);
  if (static_cast<std::int64_t>(out.set.size()) != k * (p - 1) + 1) {
    throw std::logic_error("parabola union has unexpected size");
  }
  out.guaranteed_g = parabola_guarantee(k);
  // S_t < 2k^{3/2}  <=>  S_t^2 < 4k^3
  const bool score_small = out.score * out.score < 4 * k * k * k;
  out.vacuous = !score_small || out.guaranteed_g <= 0;

  const GroupSpec& g = out.set.group();
  if (p * p <= opts.enumeration_cap) {
    RepProfile prof = group_rep_profile(out.set, RepMode::difference);
    std::int64_t m = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 1; i < prof.counts.size(); ++i) m = std::min(m, prof.counts[i]);
    out.verified_g = m;
    out.enumeration = Enumeration::exhaustive;
  } else {
    std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
    for (auto x : out.set.indices()) member[static_cast<std::size_t>(x)] = 1;
    CounterStream stream(opts.seed);
    std::int64_t m = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t s = 0; s < opts.sample_size; ++s) {
      std::int64_t target = 1 + static_cast<std::int64_t>(stream.below(static_cast<std::uint64_t>(s),
                                                                        static_cast<std::uint64_t>(g.order() - 1)));
      m = std::min(m, count_differences(out.set, member, target));
    }
    out.verified_g = m;
    out.enumeration = Enumeration::sampled;
  }
  out.instance_bound = k * k - 2 * (k - 1) - out.score;
  out.instance_bound_holds = out.verified_g >= out.instance_bound;
  return out;
}

}  // namespace diffset
