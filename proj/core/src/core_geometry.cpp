// Copyright 2026 The pigame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pigame/core_geometry.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pigame/errors.hpp"
#include "pigame/lp.hpp"

namespace pigame {
namespace {

void check_length(const GameTable& game, const Allocation& x) {
  if (x.size() != game.players()) {
    throw ValidationError("allocation has " + std::to_string(x.size()) + " entries but the game has " +
                          std::to_string(game.players()) + " players");
  }
}

// x_S for every mask S, built from S minus its lowest member.
RationalVector coalition_sums(const Allocation& x) {
  const std::size_t count = std::size_t{1} << x.size();
  RationalVector sums(count);
  for (std::size_t m = 1; m < count; ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    sums[m] = sums[m & (m - 1)] + x[low];
  }
  return sums;
}

}  // namespace

CoreCheck is_core_member(const GameTable& game, const Allocation& x) {
  check_length(game, x);
  const RationalVector sums = coalition_sums(x);
  const Coalition::Mask full = game.grand().mask();
  for (Coalition::Mask m = 1; m < full; ++m) {
    if (sums[m] > game.value(Coalition(m))) return {false, Coalition(m)};
  }
  if (sums[full] != game.value(game.grand())) return {false, game.grand()};
  return {true, std::nullopt};
}

EssentialPlayers essential_players(const GameTable& game) {
  const std::size_t n = game.players();
  const std::size_t periods = game.periods();
  EssentialPlayers out;
  out.per_period.assign(periods, Coalition());
  if (n < 2) return out;
  const auto& inst = game.instance();
  const auto& y_grand = game.grand_prices();
  for (Player i = 0; i < n; ++i) {
    const auto& y_without = game.prices_without(i);
    const Coalition rest = game.grand().without(i);
    for (std::size_t t = 0; t < periods; ++t) {
      if (y_without[t] > y_grand[t] && coalition_demand(inst, rest, t) > 0) {
        out.per_period[t] = out.per_period[t].with(i);
        out.all = out.all.with(i);
      }
    }
  }
  return out;
}

FanSet fan_set(const GameTable& game, Player i) {
  if (i >= game.players() || !essential_players(game).all.contains(i)) {
    throw ValidationError("player " + std::to_string(i + 1) + " is not essential");
  }
  const auto& inst = game.instance();
  const auto& y_grand = game.grand_prices();
  const auto& y_without = game.prices_without(i);
  FanSet out;
  out.per_period.assign(game.periods(), Coalition());
  for (std::size_t t = 0; t < game.periods(); ++t) {
    if (!(y_without[t] > y_grand[t])) continue;
    for (Player j = 0; j < game.players(); ++j) {
      if (j != i && inst.demand(j, t) > 0) {
        out.per_period[t] = out.per_period[t].with(j);
        out.all = out.all.with(j);
      }
    }
  }
  return out;
}

std::vector<EssentialFanPair> pair_set(const GameTable& game) {
  std::vector<EssentialFanPair> pairs;
  for (const auto i : essential_players(game).all.members()) {
    for (const auto j : fan_set(game, i).all.members()) pairs.push_back({i, j});
  }
  return pairs;
}

TransferResult transferred_cost(const GameTable& game, EssentialFanPair p, const Allocation& x) {
  check_length(game, x);
  const std::size_t n = game.players();
  if (p.essential >= n || p.fan >= n || p.essential == p.fan) {
    throw ValidationError("invalid essential-fan pair");
  }
  const Coalition free = game.grand().without(p.essential).without(p.fan);
  std::optional<TransferResult> best;
  // Walk every subset of `free` (including the empty one) and add the fan.
  Coalition::Mask sub = 0;
  for (;;) {
    const Coalition r = Coalition(sub).with(p.fan);
    Rational slack = game.value(r) - x.sum(r);
    if (!best || slack < best->alpha ||
        (slack == best->alpha && (r.size() < best->witness.size() ||
                                  (r.size() == best->witness.size() && r < best->witness)))) {
      best = TransferResult{std::move(slack), r};
    }
    if (sub == free.mask()) break;
    sub = (sub - free.mask()) & free.mask();
  }
  return *best;
}

Allocation extreme_function(const GameTable& game, EssentialFanPair p, const Allocation& x) {
  const TransferResult t = transferred_cost(game, p, x);
  Allocation y = x;
  y[p.fan] += t.alpha;
  y[p.essential] -= t.alpha;
  return y;
}

Allocation composite_walk(const GameTable& game, std::span<const EssentialFanPair> sigma,
                          const Allocation& x) {
  const std::size_t expected = pair_set(game).size();
  if (sigma.size() != expected) {
    throw ValidationError("pair sequence has length " + std::to_string(sigma.size()) + ", expected " +
                          std::to_string(expected));
  }
  Allocation y = x;
  for (const auto& p : sigma) y = extreme_function(game, p, y);
  return y;
}

namespace {

class WalkSearch {
 public:
  WalkSearch(const GameTable& game, std::vector<EssentialFanPair> pairs, std::size_t budget,
             WalkEnumeration& out)
      : game_(game), pairs_(std::move(pairs)), budget_(budget), out_(out) {}

  void expand(const Allocation& x, std::size_t remaining) {
    for (const auto& p : pairs_) {
      if (out_.steps >= budget_) {
        out_.truncated = true;
        return;
      }
      ++out_.steps;
      const TransferResult t = transferred_cost(game_, p, x);
      if (t.alpha == 0) continue;
      Allocation y = x;
      y[p.fan] += t.alpha;
      y[p.essential] -= t.alpha;
      out_.points.insert(y);
      if (remaining <= 1) continue;
      auto [it, inserted] = expanded_.try_emplace(y, remaining - 1);
      if (!inserted) {
        if (it->second >= remaining - 1) continue;
        it->second = remaining - 1;
      }
      expand(y, remaining - 1);
      if (out_.truncated) return;
    }
  }

 private:
  const GameTable& game_;
  std::vector<EssentialFanPair> pairs_;
  std::size_t budget_;
  WalkEnumeration& out_;
  std::map<Allocation, std::size_t> expanded_;
};

// Incrementally maintained row echelon basis used to discard dependent
// constraint choices before solving.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  bool try_add(RationalVector row) {
    for (const auto& [col, basis_row] : rows_) {
      if (row[col] == 0) continue;
      const Rational f = row[col] / basis_row[col];
      for (std::size_t k = 0; k < width_; ++k) {
        if (basis_row[k] != 0) row[k] -= f * basis_row[k];
      }
    }
    for (std::size_t k = 0; k < width_; ++k) {
      if (row[k] != 0) {
        rows_.emplace_back(k, std::move(row));
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t width_;
  std::vector<std::pair<std::size_t, RationalVector>> rows_;
};

RationalVector indicator(Coalition s, std::size_t n) {
  RationalVector row(n);
  for (const auto i : s.members()) row[i] = 1;
  return row;
}

class VertexSearch {
 public:
  explicit VertexSearch(const GameTable& game) : game_(game), n_(game.players()) {
    const Coalition::Mask full = game.grand().mask();
    values_.resize(std::size_t{full} + 1);
    for (Coalition::Mask m = 0; m <= full; ++m) values_[m] = game.value(Coalition(m));
  }

  VertexSet run() {
    EchelonBasis basis(n_);
    basis.try_add(indicator(game_.grand(), n_));
    std::vector<Coalition::Mask> chosen;
    descend(1, basis, chosen);
    return std::move(vertices_);
  }

 private:
  void descend(Coalition::Mask first, const EchelonBasis& basis, std::vector<Coalition::Mask>& chosen) {
    if (chosen.size() + 1 == n_) {
      solve_leaf(chosen);
      return;
    }
    const Coalition::Mask full = game_.grand().mask();
    const std::size_t needed = n_ - 1 - chosen.size();
    for (Coalition::Mask m = first; m < full && full - m >= needed; ++m) {
      EchelonBasis next = basis;
      if (!next.try_add(indicator(Coalition(m), n_))) continue;
      chosen.push_back(m);
      descend(m + 1, next, chosen);
      chosen.pop_back();
    }
  }

  void solve_leaf(const std::vector<Coalition::Mask>& chosen) {
    RationalMatrix matrix;
    RationalVector rhs;
    matrix.push_back(indicator(game_.grand(), n_));
    rhs.push_back(values_[game_.grand().mask()]);
    for (const auto m : chosen) {
      matrix.push_back(indicator(Coalition(m), n_));
      rhs.push_back(values_[m]);
    }
    auto solution = solve_linear_system(std::move(matrix), std::move(rhs));
    if (!solution) return;
    Allocation x(std::move(*solution));
    if (vertices_.contains(x)) return;
    const RationalVector sums = coalition_sums(x);
    for (Coalition::Mask m = 1; m < game_.grand().mask(); ++m) {
      if (sums[m] > values_[m]) return;
    }
    vertices_.insert(std::move(x));
  }

  const GameTable& game_;
  std::size_t n_;
  RationalVector values_;
  VertexSet vertices_;
};


__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

struct Overflow {};

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

Wide checked_sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt to_big(Wide v) {
  const bool negative = v < 0;
  auto u = static_cast<UWide>(negative ? -v : v);
  BigInt out = BigInt(static_cast<std::uint64_t>(u >> 64));
  out <<= 64;
  out += BigInt(static_cast<std::uint64_t>(u));
  return negative ? BigInt(-out) : out;
}

// Same candidate-basis enumeration as VertexSearch, carried out on an
// incrementally maintained fraction-free reduced echelon form over scaled
// integers. Any overflow aborts the search so the caller can fall back.
class IntegerVertexSearch {
 public:
  static constexpr std::size_t kMaxWidth = 8;

  static std::optional<VertexSet> try_run(const GameTable& game) {
    const std::size_t n = game.players();
    if (n > kMaxWidth) return std::nullopt;
    const Coalition::Mask full = game.grand().mask();
    BigInt scale = 1;
    for (Coalition::Mask m = 1; m <= full; ++m) {
      const BigInt den = boost::multiprecision::denominator(game.value(Coalition(m)));
      scale = scale / boost::multiprecision::gcd(scale, den) * den;
    }
    const BigInt limit = BigInt(1) << 40;
    if (scale >= limit) return std::nullopt;
    std::vector<Wide> scaled(std::size_t{full} + 1);
    for (Coalition::Mask m = 1; m <= full; ++m) {
      const Rational v = game.value(Coalition(m)) * Rational(scale);
      const BigInt num = boost::multiprecision::numerator(v);
      if (boost::multiprecision::abs(num) >= limit) return std::nullopt;
      scaled[m] = static_cast<Wide>(num.convert_to<long long>());
    }
    try {
      IntegerVertexSearch search(n, std::move(scaled), Rational(scale));
      return search.run();
    } catch (const Overflow&) {
      return std::nullopt;
    }
  }

 private:
  struct Row {
    std::array<Wide, kMaxWidth + 1> a{};  // coefficients then right-hand side
    std::size_t pivot = 0;
  };

  struct Level {
    std::array<Row, kMaxWidth> rows;
    std::size_t count = 0;
  };

  IntegerVertexSearch(std::size_t n, std::vector<Wide> scaled, Rational scale)
      : n_(n), full_((Coalition::Mask{1} << n) - 1), scaled_(std::move(scaled)), scale_(std::move(scale)),
        levels_(n), sums_(std::size_t{full_} + 1) {}

  VertexSet run() {
    add(levels_[0], full_);
    descend(1, 0);
    return std::move(vertices_);
  }

  void normalize(Row& r) const {
    Wide g = 0;
    for (std::size_t k = 0; k <= n_; ++k) g = wide_gcd(g, r.a[k]);
    if (g > 1) {
      for (std::size_t k = 0; k <= n_; ++k) r.a[k] /= g;
    }
  }

  // Eliminates column col of target using source, keeping target's pivot sign.
  void eliminate(Row& target, const Row& source, std::size_t col) const {
    const Wide f = target.a[col];
    const Wide p = source.a[col];
    for (std::size_t k = 0; k <= n_; ++k) {
      target.a[k] = checked_sub(checked_mul(target.a[k], p), checked_mul(source.a[k], f));
    }
    normalize(target);
  }

  bool add(Level& level, Coalition::Mask m) const {
    Row r;
    for (std::size_t i = 0; i < n_; ++i) r.a[i] = (m >> i) & 1U;
    r.a[n_] = scaled_[m];
    for (std::size_t k = 0; k < level.count; ++k) {
      const Row& b = level.rows[k];
      if (r.a[b.pivot] != 0) eliminate(r, b, b.pivot);
    }
    std::size_t col = 0;
    while (col < n_ && r.a[col] == 0) ++col;
    if (col == n_) return false;
    if (r.a[col] < 0) {
      for (std::size_t k = 0; k <= n_; ++k) r.a[k] = -r.a[k];
    }
    r.pivot = col;
    for (std::size_t k = 0; k < level.count; ++k) {
      Row& b = level.rows[k];
      if (b.a[col] != 0) eliminate(b, r, col);
    }
    level.rows[level.count++] = r;
    return true;
  }

  void descend(Coalition::Mask first, std::size_t depth) {
    if (levels_[depth].count == n_) {
      solve_leaf(levels_[depth]);
      return;
    }
    const std::size_t needed = n_ - levels_[depth].count;
    for (Coalition::Mask m = first; m < full_ && full_ - m >= needed; ++m) {
      levels_[depth + 1] = levels_[depth];
      if (!add(levels_[depth + 1], m)) continue;
      descend(m + 1, depth + 1);
    }
  }

  void solve_leaf(const Level& level) {
    Wide d = 1;
    for (std::size_t k = 0; k < n_; ++k) {
      const Wide p = level.rows[k].a[level.rows[k].pivot];
      d = checked_mul(d / wide_gcd(d, p), p);
    }
    std::array<Wide, kMaxWidth> x{};
    for (std::size_t k = 0; k < n_; ++k) {
      const Row& r = level.rows[k];
      x[r.pivot] = checked_mul(r.a[n_], d / r.a[r.pivot]);
    }
    for (Coalition::Mask m = 1; m < full_; ++m) {
      const auto low = static_cast<std::size_t>(std::countr_zero(m));
      sums_[m] = checked_add(sums_[m & (m - 1)], x[low]);
      if (sums_[m] > checked_mul(d, scaled_[m])) return;
    }
    Allocation point(n_);
    const Rational denominator = Rational(to_big(d)) * scale_;
    for (std::size_t i = 0; i < n_; ++i) point[i] = Rational(to_big(x[i])) / denominator;
    vertices_.insert(std::move(point));
  }

  std::size_t n_;
  Coalition::Mask full_;
  std::vector<Wide> scaled_;
  Rational scale_;
  std::vector<Level> levels_;
  std::vector<Wide> sums_;
  VertexSet vertices_;
};

}  // namespace

WalkEnumeration generate_extremes_from_owen(const GameTable& game, std::size_t budget) {
  WalkEnumeration out;
  const Allocation o = owen_point(game);
  out.points.insert(o);
  auto pairs = pair_set(game);
  if (pairs.empty()) return out;
  const std::size_t depth = pairs.size();
  WalkSearch search(game, std::move(pairs), budget, out);
  search.expand(o, depth);
  return out;
}

VertexSet enumerate_core_vertices(const GameTable& game, std::size_t cap) {
  const std::size_t n = game.players();
  if (n > cap) {
    throw CapExceeded("vertex enumeration is limited to " + std::to_string(cap) + " players; game has " +
                      std::to_string(n));
  }
  if (n == 1) return VertexSet{Allocation{game.value(game.grand())}};
  if (auto fast = IntegerVertexSearch::try_run(game)) return std::move(*fast);
  return VertexSearch(game).run();
}

bool is_boundary_point(const GameTable& game, const Allocation& x) {
  const CoreCheck check = is_core_member(game, x);
  if (!check.member) {
    throw ValidationError("allocation " + to_string(x) + " is not in the core");
  }
  const RationalVector sums = coalition_sums(x);
  for (Coalition::Mask m = 1; m < game.grand().mask(); ++m) {
    if (sums[m] == game.value(Coalition(m))) return true;
  }
  return false;
}

}  // namespace pigame
