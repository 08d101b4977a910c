#include <map>

#include "circuitsplit/enumeration.hpp"
#include "doctest.h"

using namespace circuitsplit;

namespace {

std::vector<long> as_longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

// Brute-force oracle: every subset of diagonals, closure checked by its own
// interleaving test, with optional sides counted from the clique structure.
struct BruteResult {
  long diagrams = 0;
  long xi_image = 0;
};

BruteResult brute_ptolemy(int n) {
  std::vector<std::pair<int, int>> all;  // every pair, sides included
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) all.emplace_back(a, b);
  }
  auto interleave = [](std::pair<int, int> x, std::pair<int, int> y) {
    auto [a, b] = x;
    auto [c, d] = y;
    if (c == a || c == b || d == a || d == b) return false;
    return ((a < c && c < b) ? 1 : 0) + ((a < d && d < b) ? 1 : 0) == 1;
  };
  BruteResult r;
  // Full chord sets over all pairs: the xi-image family of the n-gon.
  const long total = 1L << all.size();
  for (long mask = 0; mask < total; ++mask) {
    auto has = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i] == std::make_pair(a, b)) return ((mask >> i) & 1) != 0;
      }
      return false;
    };
    bool ok = true;
    for (std::size_t i = 0; i < all.size() && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (std::size_t j = i + 1; j < all.size() && ok; ++j) {
        if (!((mask >> j) & 1) || !interleave(all[i], all[j])) continue;
        int p[4] = {all[i].first, all[i].second, all[j].first, all[j].second};
        for (int s = 0; s < 4; ++s) {
          for (int t = s + 1; t < 4; ++t) ok = ok && has(p[s], p[t]);
        }
      }
    }
    if (!ok) continue;
    ++r.xi_image;
  }
  // Diagrams: distinct diagonal patterns that extend to some closed set.
  std::map<long, bool> patterns;
  for (long mask = 0; mask < total; ++mask) {
    long diag = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto [a, b] = all[i];
      const bool side = b - a == 1 || (a == 1 && b == n);
      if (!side && ((mask >> i) & 1)) diag |= 1L << i;
    }
    // Closed iff the version with all sides present is closed.
    long full = diag;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto [a, b] = all[i];
      if (b - a == 1 || (a == 1 && b == n)) full |= 1L << i;
    }
    if (mask != full) continue;
    bool ok = true;
    for (std::size_t i = 0; i < all.size() && ok; ++i) {
      if (!((full >> i) & 1)) continue;
      for (std::size_t j = i + 1; j < all.size() && ok; ++j) {
        if (!((full >> j) & 1) || !interleave(all[i], all[j])) continue;
        int p[4] = {all[i].first, all[i].second, all[j].first, all[j].second};
        for (int s = 0; s < 4; ++s) {
          for (int t = s + 1; t < 4; ++t) {
            int x = std::min(p[s], p[t]), y = std::max(p[s], p[t]);
            for (std::size_t k = 0; k < all.size(); ++k) {
              if (all[k] == std::make_pair(x, y)) ok = ok && ((full >> k) & 1);
            }
          }
        }
      }
    }
    if (ok) patterns[diag] = true;
  }
  r.diagrams = static_cast<long>(patterns.size());
  return r;
}

}  // namespace

TEST_CASE("omega recursion") {
  CHECK(omega_count(0) == 1);
  CHECK(omega_count(3) == 8);
  CHECK(omega_count(4) == 52);
  CHECK(omega_count(5) == 464);
}

TEST_CASE("composition and Lagrange counts agree") {
  for (const auto& name : {"omega", "psi", "xiImage"}) {
    const auto base = count_series(name, 8);
    for (int n = 0; n <= 8; ++n) CHECK(composition_count(base, n) == lagrange_count(base, n));
  }
  const auto psi = count_series("psi", 5);
  CHECK(composition_count(psi, 4) == 117);
  CHECK(lagrange_count(psi, 5) == 1565);
  const auto omega = count_series("omega", 8);
  BigInt dfact = 1;
  for (int n = 1; n <= 8; ++n) {
    dfact *= 2 * n - 1;
    CHECK(composition_count(omega, n) == dfact);
  }
  const CountSeries xi{"xi", {1, 1, 2, 8, 49}};
  CHECK(composition_count(xi, 4) == 102);
}

TEST_CASE("Ptolemy diagrams") {
  const auto four = enumerate_ptolemy(4);
  REQUIRE(four.size() == 4);
  std::multiset<int> ts;
  for (const auto& d : four) {
    ts.insert(d.optional_sides);
    std::vector<Chord> all(d.diagonals.chords.begin(), d.diagonals.chords.end());
    all.insert(all.end(), d.forced.chords.begin(), d.forced.chords.end());
    CHECK(ptolemy_closed(make_chord_set(4, all)).closed);
  }
  CHECK(ts == std::multiset<int>{0, 4, 4, 4});
  CHECK(enumerate_ptolemy(3).size() == 1);
  CHECK(enumerate_ptolemy(5).size() == 17);
  for (int n = 3; n <= 9; ++n) CHECK(BigInt(static_cast<long>(enumerate_ptolemy(n).size())) == ptolemy_formula(n));
  CHECK(xi_image_count(2) == 2);
  CHECK(xi_image_count(4) == 49);
  CHECK(xi_image_count(5) == 373);
  CHECK_THROWS_AS(enumerate_ptolemy(10), SizeGuardError);
}

TEST_CASE("Ptolemy enumeration matches brute force") {
  for (int n = 3; n <= 6; ++n) {
    const auto brute = brute_ptolemy(n);
    CHECK(static_cast<long>(enumerate_ptolemy(n).size()) == brute.diagrams);
    CHECK(xi_image_count(n) == brute.xi_image);
  }
}

TEST_CASE("series values") {
  CHECK(as_longs(count_series("omega", 5).terms) == std::vector<long>{1, 1, 2, 8, 52, 464});
  CHECK(as_longs(count_series("omegaBar", 5).terms) == std::vector<long>{1, 1, 3, 15, 105, 945});
  CHECK(as_longs(count_series("psi", 5).terms) == std::vector<long>{1, 1, 2, 8, 64, 1024});
  CHECK(as_longs(count_series("psiBar", 5).terms) == std::vector<long>{1, 1, 3, 15, 117, 1565});
  CHECK(as_longs(count_series("xiImage", 5).terms) == std::vector<long>{1, 1, 2, 8, 49, 373});
  CHECK(as_longs(count_series("faithfulBar", 5).terms) == std::vector<long>{1, 1, 3, 15, 102, 839});
  CHECK_THROWS_AS(count_series("nope", 3), DomainError);
}

TEST_CASE("cell enumeration") {
  CHECK(as_longs(enumerate_cells("psiBar", 4).f_vector) == std::vector<long>{14, 28, 29, 24, 15, 6, 1});
  CHECK(enumerate_cells("psiBar", 4).total == 117);
  CHECK(as_longs(enumerate_cells("faithfulBar", 4).f_vector) == std::vector<long>{14, 28, 28, 20, 9, 2, 1});
  CHECK(as_longs(enumerate_cells("psi", 4).f_vector) == std::vector<long>{1, 6, 15, 20, 15, 6, 1});
  const auto p3 = enumerate_cells("psiBar", 3);
  CHECK(p3.total == 15);
  CHECK(p3.f_vector[0] == 5);
  const auto psi = count_series("psi", 6);
  const auto xi = count_series("xiImage", 6);
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    const auto bar = enumerate_cells("psiBar", n);
    CHECK(bar.total == lagrange_count(psi, n));
    CHECK(bar.f_vector[0] == catalan[n]);
    CHECK(enumerate_cells("faithfulBar", n).total == composition_count(xi, n));
  }
  CHECK_THROWS_AS(enumerate_cells("psiBar", 7), SizeGuardError);
  CHECK_THROWS_AS(enumerate_cells("omega", 3), DomainError);
}
