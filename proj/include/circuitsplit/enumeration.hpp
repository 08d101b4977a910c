#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "circuitsplit/error.hpp"
#include "circuitsplit/plabic.hpp"
#include "json.hpp"

namespace circuitsplit {

using BigInt = mpz_class;

struct CountSeries {
  std::string name;
  std::vector<BigInt> terms;  // indexed from n = 0
};

struct CellComplexReport {
  std::string space;
  int n = 0;
  std::vector<BigInt> f_vector;  // index = cell dimension
  BigInt total;
};

// a_0 = a_1 = 1, a_2 = 2, a_n = 2(n-1) a_{n-1} + sum_{j=2}^{n-2} (j-1) a_j a_{n-j}.
BigInt omega_count(int n);

// (1/(n+1)) * sum over compositions of n into n+1 nonnegative parts of the
// product of base terms. Throws if the division is not exact.
BigInt composition_count(const CountSeries& base, int n);

// [x^n] B(x)^{n+1} / (n+1) on truncated power series.
BigInt lagrange_count(const CountSeries& base, int n);

struct PtolemyDiagram {
  ChordSet diagonals;  // diagonals only, polygon sides excluded
  ChordSet forced;     // polygon sides lying in a clique of size >= 4
  int optional_sides = 0;
};

// All Ptolemy diagrams of the n-gon, n >= 3.
std::vector<PtolemyDiagram> enumerate_ptolemy(int n, const Limits& limits = {});

// Closed count of Ptolemy diagrams of the (k+3)-gon, used with k = n - 3.
BigInt ptolemy_formula(int n);

// Sum over Ptolemy diagrams of 2^(optional sides); 1, 1, 2 for n = 0, 1, 2.
BigInt xi_image_count(int n, const Limits& limits = {});

// Named series up to and including term `max_n`: omega, omegaBar, psi,
// psiBar, xiImage, faithfulBar.
CountSeries count_series(const std::string& name, int max_n, const Limits& limits = {});
std::vector<std::string> series_names();

// Cell enumeration for psi, psiBar and faithfulBar.
CellComplexReport enumerate_cells(const std::string& space, int n, const Limits& limits = {});

nlohmann::json count_series_to_json(const CountSeries& s);
nlohmann::json cell_report_to_json(const CellComplexReport& r);
std::string count_table(const std::vector<CountSeries>& rows, int from, int to);

}  // namespace circuitsplit
