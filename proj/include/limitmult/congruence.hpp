#ifndef LIMITMULT_CONGRUENCE_HPP
#define LIMITMULT_CONGRUENCE_HPP

#include "limitmult/exact_scalar.hpp"
#include "limitmult/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace limitmult {

// A positive integer together with its prime factorization, primes strictly
// increasing. Input to all the multiplicative level formulas.
struct FactoredNatural {
  Int value;
  std::vector<std::pair<Int, int>> factors;  // (prime, exponent), exponent >= 1
};

enum class Ambient { SL2R, PSL2R };

std::string to_string(Ambient ambient);  // "sl2" / "psl2"
Ambient parse_ambient(std::string_view text);

// The principal congruence subgroup of level N, viewed inside SL(2,R) or
// (via its image) inside PSL(2,R), with its index and covolume.
//
// The Haar normalization is fixed so that covol(PSL(2,Z)) = pi/3 (hyperbolic
// area) and covol(SL(2,Z)) = pi/6; these are the unique values compatible
// with formal dimension (k-1)/(4 pi) for the weight-k discrete series.
struct LatticeDescriptor {
  Ambient ambient;
  FactoredNatural level;
  Int index;             // [SL(2,Z) : Gamma(N)], resp. index of the image in PSL(2,Z)
  ExactScalar covolume;  // base covolume of the ambient modular group x index
};

// Genus, cusp and elliptic-point counts of the modular curve X(N).
struct CurveInvariants {
  FactoredNatural level;
  Int psl_index;
  Int num_cusps;
  Int genus;
  int elliptic2;
  int elliptic3;
};

// Outcome of checking a level chain against the divisibility criterion.
struct TowerReport {
  bool valid;
  std::size_t first_violation;  // index into levels; meaningful iff !valid
  std::string reason;           // empty iff valid
};

// Trial division; desk-scale inputs. Rejects n < 1.
FactoredNatural factor(const Int& n);

// [SL(2,Z) : Gamma(N)] = N^3 prod_{p|N} (1 - 1/p^2).
Int sl2_index(const FactoredNatural& level);

// Index of the image of Gamma(N) in PSL(2,Z): half the SL(2,Z) index for
// N > 2 (-I is no longer in Gamma(N)); 6 for N = 2; 1 for N = 1.
Int psl_index(const FactoredNatural& level);

LatticeDescriptor lattice(Ambient ambient, const Int& level);

CurveInvariants curve_invariants(const Int& level);

// Accepts iff each level strictly divides the next; this is exactly the
// condition for Gamma(N_{i+1}) < Gamma(N_i) with trivial intersection of
// the chain. Rejects an empty list.
TowerReport validate_tower(const std::vector<Int>& levels);

}  // namespace limitmult

#endif
