#pragma once

#include <vector>

#include "gbs/gbs_graph.hpp"

namespace gbs {

// Distinct prime factors of |n|, ascending. Trial division up to 10^7, which
// certifies primality of any cofactor up to 10^14; larger cofactors throw
// TooLargeError rather than guess.
std::vector<Label> prime_factors(const Label& n);

// Largest e with p^e dividing |n|. n must be nonzero.
int valuation(Label n, const Label& p);

// Image of the modular homomorphism, recorded as an integer exponent lattice:
// one basis row per cycle of a cycle basis, one column per prime occurring in
// any label. Row entry for prime p is v_p of the product of terminus-side
// labels minus v_p of the product of origin-side labels along the cycle.
struct ModulusLattice {
  std::vector<Label> primes;
  std::vector<std::vector<Label>> basis;
};

ModulusLattice modular_image(const GbsGraph& g);

// Row-style Hermite normal form: positive pivots, entries above a pivot
// reduced into [0, pivot), zero rows dropped. Two integer row sets span the
// same subgroup of Z^n iff their forms are identical.
std::vector<std::vector<Label>> hermite_normal_form(
    std::vector<std::vector<Label>> rows);

// Compares the subgroups of the multiplicative rationals described by two
// lattices, aligning their prime lists first.
bool same_subgroup(const ModulusLattice& a, const ModulusLattice& b);

struct IntegerModulus {
  bool yes = false;
  // When yes: an integer > 1 whose exponent vector lies in the lattice, and
  // that vector itself. Small witnesses are preferred when a bounded
  // coefficient search finds one.
  Label witness = 0;
  std::vector<Label> exponents;
};

// Decides whether the lattice meets the nonnegative orthant outside the
// origin. The lattice does iff its rational span does (clear denominators,
// then any lattice point near a rational solution scales onto one), and the
// span condition is exact rational LP feasibility.
IntegerModulus has_integer_modulus(const ModulusLattice& m);

}  // namespace gbs
