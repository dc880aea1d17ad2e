#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "caps.hpp"
#include "groups.hpp"
#include "lawkit.hpp"

namespace lawforge {

struct SpectrumReport {
  std::string group;
  uint64_t order = 0;
  std::map<uint64_t, uint64_t> census;  // element order -> count
  uint64_t max_order = 0;
};

SpectrumReport order_census(GroupPtr g, const Caps& caps);

struct DensityReport {
  std::string group;
  std::string family;
  uint64_t q = 0;
  uint64_t b = 0;          // torus exponent b(X, q)
  uint64_t e_count = 0;    // |{g : o(g) divides b}|
  uint64_t order = 0;
  // exact density is e_count / order
};

DensityReport power_divisor_density(GroupPtr g, const LieTypeTag& tag, uint64_t q, const Caps& caps);

// Elements conjugate in G to a diagonal matrix with pairwise distinct
// entries, detected via the characteristic polynomial splitting with n
// distinct roots (restricted to (q+1)-th roots of unity for unitary kinds).
uint64_t regular_diagonalizable_census(GroupPtr g, const Caps& caps);

struct TupleCount {
  uint64_t n = 0;
  uint32_t d = 0;
  uint64_t exact = 0;  // tuples in (Z/n)^d with zero sum and distinct entries
  int64_t bound = 0;   // (n - d(d-1)/2) * n^(d-2)
};

TupleCount cyclic_tuple_count(uint64_t n, uint32_t d, const Caps& caps);

uint64_t centralizer_census(GroupPtr g, const Element& e, const Caps& caps);

std::string fraction_str(uint64_t num, uint64_t den);          // "16/60"
std::string fraction_reduced_str(uint64_t num, uint64_t den);  // "4/15"

}  // namespace lawforge
