#include "circuitsplit/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "circuitsplit/partition.hpp"

namespace circuitsplit {

namespace {

using Poly = std::vector<BigInt>;

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt pow2(long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

Poly multiply(const Poly& a, const Poly& b, std::size_t max_degree = static_cast<std::size_t>(-1)) {
  if (a.empty() || b.empty()) return {};
  const std::size_t size = std::min(a.size() + b.size() - 1, max_degree == static_cast<std::size_t>(-1) ? a.size() + b.size() - 1 : max_degree + 1);
  Poly r(size, 0);
  for (std::size_t i = 0; i < a.size() && i < size; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < size; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly binomial_poly(long e) {
  Poly p;
  for (long i = 0; i <= e; ++i) p.push_back(binomial(e, i));
  return p;
}

const BigInt& term(const CountSeries& base, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= base.terms.size()) {
    throw DomainError("base series too short", {{"series", base.name}, {"needed", k}});
  }
  return base.terms[static_cast<std::size_t>(k)];
}

BigInt exact_divide(const BigInt& num, int n, const std::string& who) {
  if (num % (n + 1) != 0) {
    throw DomainError(who + ": sum not divisible by n+1", {{"n", n}, {"sum", num.get_str()}});
  }
  return num / (n + 1);
}

void check_cells_limit(int n, const Limits& limits) {
  if (n > limits.max_cells_n && !limits.unsafe) {
    throw SizeGuardError("cell enumeration limited to n <= " + std::to_string(limits.max_cells_n), {{"n", n}});
  }
}

// Dissections of the polygon with vertices v[lo..hi] by noncrossing
// diagonals, listed as their cells. The side (v[lo], v[hi]) is the base.
void dissections(int lo, int hi, std::vector<std::vector<int>>& cells,
                 const std::function<void(std::vector<std::vector<int>>&)>& done) {
  if (hi - lo < 2) {
    done(cells);
    return;
  }
  // The cell on the base picks a nonempty subset of lo+1..hi-1.
  const int inner = hi - lo - 1;
  for (long mask = 1; mask < (1L << inner); ++mask) {
    std::vector<int> cell{lo};
    for (int t = 0; t < inner; ++t) {
      if (mask & (1L << t)) cell.push_back(lo + 1 + t);
    }
    cell.push_back(hi);
    cells.push_back(cell);
    // Recurse into each pocket between consecutive cell vertices.
    std::function<void(std::size_t)> pockets = [&](std::size_t i) {
      if (i + 1 == cell.size()) {
        done(cells);
        return;
      }
      dissections(cell[i], cell[i + 1], cells, [&](std::vector<std::vector<int>>&) { pockets(i + 1); });
    };
    pockets(0);
    cells.pop_back();
  }
}

}  // namespace

BigInt omega_count(int n) {
  std::vector<BigInt> a{1, 1, 2};
  for (int m = 3; m <= n; ++m) {
    BigInt s = 2 * (m - 1) * a[m - 1];
    for (int j = 2; j <= m - 2; ++j) s += (j - 1) * a[j] * a[m - j];
    a.push_back(s);
  }
  return a[std::max(n, 0)];
}

BigInt composition_count(const CountSeries& base, int n) {
  if (n == 0) return 1;
  BigInt sum = 0;
  // Compositions j_0 + ... + j_n = n, visited recursively.
  std::function<void(int, int, BigInt)> rec = [&](int slot, int left, BigInt prod) {
    if (slot == n) {
      sum += prod * term(base, left);
      return;
    }
    for (int j = 0; j <= left; ++j) rec(slot + 1, left - j, prod * term(base, j));
  };
  rec(0, n, 1);
  return exact_divide(sum, n, "composition_count");
}

BigInt lagrange_count(const CountSeries& base, int n) {
  if (n == 0) return 1;
  Poly b;
  for (int k = 0; k <= n; ++k) b.push_back(term(base, k));
  Poly p{1};
  for (int i = 0; i <= n; ++i) p = multiply(p, b, static_cast<std::size_t>(n));
  const BigInt coeff = static_cast<std::size_t>(n) < p.size() ? p[static_cast<std::size_t>(n)] : BigInt(0);
  return exact_divide(coeff, n, "lagrange_count");
}

std::vector<PtolemyDiagram> enumerate_ptolemy(int n, const Limits& limits) {
  if (n < 3) throw DomainError("Ptolemy diagrams need n >= 3", {{"n", n}});
  if (n > limits.max_ptolemy_n && !limits.unsafe) {
    throw SizeGuardError("Ptolemy enumeration limited to n <= " + std::to_string(limits.max_ptolemy_n), {{"n", n}});
  }
  std::vector<PtolemyDiagram> out;
  std::vector<std::vector<int>> cells;
  dissections(1, n, cells, [&](std::vector<std::vector<int>>& cs) {
    std::vector<std::size_t> big;
    for (std::size_t c = 0; c < cs.size(); ++c) {
      if (cs[c].size() >= 4) big.push_back(c);
    }
    for (long mask = 0; mask < (1L << big.size()); ++mask) {
      PtolemyDiagram d;
      d.diagonals.n = d.forced.n = n;
      std::vector<bool> clique(cs.size(), false);
      for (std::size_t b = 0; b < big.size(); ++b) clique[big[b]] = (mask >> b) & 1;
      for (std::size_t c = 0; c < cs.size(); ++c) {
        const auto& cell = cs[c];
        const std::size_t m = cell.size();
        for (std::size_t a = 0; a < m; ++a) {
          const int x = cell[a];
          const int y = cell[(a + 1) % m];
          const Chord side{std::min(x, y), std::max(x, y)};
          const bool polygon_side = side.second - side.first == 1 || (side.first == 1 && side.second == n);
          if (polygon_side) {
            if (clique[c]) d.forced.chords.insert(side);
            else ++d.optional_sides;
          } else {
            d.diagonals.chords.insert(side);
          }
        }
        if (clique[c]) {
          for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 2; b < m; ++b) {
              if (a == 0 && b == m - 1) continue;
              d.diagonals.chords.insert({cell[a], cell[b]});
            }
          }
        }
      }
      out.push_back(std::move(d));
    }
  });
  std::sort(out.begin(), out.end(), [](const PtolemyDiagram& a, const PtolemyDiagram& b) {
    return std::make_pair(a.diagonals.chords.size(), a.diagonals.chords) <
           std::make_pair(b.diagonals.chords.size(), b.diagonals.chords);
  });
  return out;
}

BigInt ptolemy_formula(int n) {
  const long k = n - 3;
  BigInt sum = 0;
  for (long j = 0; 2 * j <= k + 1; ++j) sum += pow2(j) * binomial(k + 1 + j, j) * binomial(2 * k + 2, k + 1 - 2 * j);
  return sum / (k + 2);
}

BigInt xi_image_count(int n, const Limits& limits) {
  if (n <= 1) return 1;
  if (n == 2) return 2;
  BigInt sum = 0;
  for (const auto& d : enumerate_ptolemy(n, limits)) sum += pow2(d.optional_sides);
  return sum;
}

std::vector<std::string> series_names() { return {"omega", "omegaBar", "psi", "psiBar", "xiImage", "faithfulBar"}; }

CountSeries count_series(const std::string& name, int max_n, const Limits& limits) {
  CountSeries s{name, {}};
  auto base = [&](const std::string& b) { return count_series(b, max_n, limits); };
  if (name == "omega") {
    for (int k = 0; k <= max_n; ++k) s.terms.push_back(omega_count(k));
  } else if (name == "psi") {
    for (int k = 0; k <= max_n; ++k) s.terms.push_back(pow2(static_cast<long>(k) * (k - 1) / 2));
  } else if (name == "xiImage") {
    for (int k = 0; k <= max_n; ++k) s.terms.push_back(xi_image_count(k, limits));
  } else if (name == "omegaBar") {
    const auto b = base("omega");
    for (int k = 0; k <= max_n; ++k) s.terms.push_back(composition_count(b, k));
  } else if (name == "psiBar") {
    const auto b = base("psi");
    for (int k = 0; k <= max_n; ++k) s.terms.push_back(lagrange_count(b, k));
  } else if (name == "faithfulBar") {
    const auto b = base("xiImage");
    for (int k = 0; k <= max_n; ++k) s.terms.push_back(composition_count(b, k));
  } else {
    throw DomainError("unknown series '" + name + "'", {{"known", series_names()}});
  }
  return s;
}

CellComplexReport enumerate_cells(const std::string& space, int n, const Limits& limits) {
  check_cells_limit(n, limits);
  if (n < 1) throw DomainError("cell enumeration needs n >= 1", {{"n", n}});
  CellComplexReport r;
  r.space = space;
  r.n = n;
  Poly f;
  if (space == "psi") {
    f = binomial_poly(static_cast<long>(n) * (n - 1) / 2);
  } else if (space == "psiBar" || space == "faithfulBar") {
    // Per-part generating polynomial in the number of splits.
    std::vector<Poly> part_poly(n + 1);
    for (int k = 1; k <= n; ++k) {
      if (space == "psiBar" || k < 3) {
        part_poly[k] = binomial_poly(static_cast<long>(k) * (k - 1) / 2);
        continue;
      }
      Poly p;
      for (const auto& d : enumerate_ptolemy(k, limits)) {
        const std::size_t fixed = d.diagonals.chords.size() + d.forced.chords.size();
        Poly term_poly(fixed, 0);
        term_poly.push_back(1);
        term_poly = multiply(term_poly, binomial_poly(d.optional_sides));
        if (p.size() < term_poly.size()) p.resize(term_poly.size(), 0);
        for (std::size_t i = 0; i < term_poly.size(); ++i) p[i] += term_poly[i];
      }
      part_poly[k] = p;
    }
    for (const auto& partition : noncrossing_partitions(n)) {
      Poly cell{1};
      for (const auto& block : partition) cell = multiply(cell, part_poly[block.size()]);
      if (f.size() < cell.size()) f.resize(cell.size(), 0);
      for (std::size_t i = 0; i < cell.size(); ++i) f[i] += cell[i];
    }
  } else {
    throw DomainError("unknown cell space '" + space + "'", {{"known", {"psi", "psiBar", "faithfulBar"}}});
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  r.f_vector = f;
  r.total = 0;
  for (const auto& x : f) r.total += x;
  return r;
}

namespace {

nlohmann::json big_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

}  // namespace

nlohmann::json count_series_to_json(const CountSeries& s) {
  auto terms = nlohmann::json::array();
  for (const auto& t : s.terms) terms.push_back(big_json(t));
  return {{"name", s.name}, {"terms", terms}};
}

nlohmann::json cell_report_to_json(const CellComplexReport& r) {
  auto f = nlohmann::json::array();
  for (const auto& x : r.f_vector) f.push_back(big_json(x));
  return {{"space", r.space}, {"n", r.n}, {"fVector", f}, {"total", big_json(r.total)}};
}

std::string count_table(const std::vector<CountSeries>& rows, int from, int to) {
  std::size_t name_w = 1;
  std::size_t col_w = 1;
  for (const auto& s : rows) {
    name_w = std::max(name_w, s.name.size());
    for (int k = from; k <= to; ++k) col_w = std::max(col_w, s.terms.at(static_cast<std::size_t>(k)).get_str().size());
  }
  col_w = std::max(col_w, std::to_string(to).size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_w)) << "n";
  for (int k = from; k <= to; ++k) os << "  " << std::right << std::setw(static_cast<int>(col_w)) << k;
  os << "\n";
  for (const auto& s : rows) {
    os << std::left << std::setw(static_cast<int>(name_w)) << s.name;
    for (int k = from; k <= to; ++k) {
      os << "  " << std::right << std::setw(static_cast<int>(col_w)) << s.terms[static_cast<std::size_t>(k)].get_str();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace circuitsplit
