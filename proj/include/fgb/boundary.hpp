#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgb/rational.hpp"
#include "fgb/word.hpp"

namespace fgb {

/// An integer k denoting the exact real value k*v with v = log(2r-1). All
/// log-Radon-Nikodym and horofunction-derived quantities live on this lattice.
struct LatticeLog {
  std::int64_t k = 0;

  friend LatticeLog operator+(LatticeLog a, LatticeLog b) { return {a.k + b.k}; }
  friend LatticeLog operator-(LatticeLog a, LatticeLog b) { return {a.k - b.k}; }
  friend LatticeLog operator-(LatticeLog a) { return {-a.k}; }
  friend bool operator==(LatticeLog, LatticeLog) = default;
  friend auto operator<=>(LatticeLog, LatticeLog) = default;

  double to_real(Rank rank) const { return double(k) * rank.growth_log(); }
  /// (2r-1)^k as an exact rational.
  Rational exp_value(Rank rank) const { return lattice_pow(rank.branching(), k); }
};

/// The first |prefix| letters of a boundary point. Every operation declares
/// the minimum prefix length it needs and throws PrefixTooShort if unmet.
struct BoundaryPrefix {
  ReducedWord prefix;

  std::size_t length() const noexcept { return prefix.length(); }
  void require(std::size_t n, const char* op) const;
};

/// The set of boundary points starting with w; Cylinder(e) is the whole space.
struct Cylinder {
  ReducedWord w;

  friend bool operator==(const Cylinder&, const Cylinder&) = default;
  friend auto operator<=>(const Cylinder& a, const Cylinder& b) {
    return a.w <=> b.w;
  }
};

/// A finite disjoint union of cylinders in canonical form: no part is a
/// prefix of another, and no complete sibling family is left unmerged.
class CylinderUnion {
 public:
  CylinderUnion() = default;

  /// Canonicalizes: sorts, rejects overlapping parts, merges complete sibling
  /// families into their parent (repeatedly).
  static CylinderUnion from_parts(std::vector<Cylinder> parts, Rank rank);

  static CylinderUnion whole_boundary();
  static CylinderUnion single(Cylinder c);

  const std::vector<Cylinder>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// True if cyl(w) is contained in this union.
  bool contains_cylinder(const Cylinder& c) const;

  /// Serialized as the sorted list of part words.
  std::vector<std::string> part_strings() const;

  friend bool operator==(const CylinderUnion&, const CylinderUnion&) = default;

 private:
  std::vector<Cylinder> parts_;  // shortlex-sorted, pairwise prefix-free
};

/// nu(cyl(w)) = 1 for w = e, else (2r)^{-1} (2r-1)^{-(|w|-1)}.
Rational cylinder_measure(Rank rank, const Cylinder& c);

/// Sum of part measures of a canonical union.
Rational measure_of_union(Rank rank, const CylinderUnion& u);

/// The boundary action: g applied to a point known by a finite prefix.
/// Requires |xi.prefix| >= |g|; the result carries every determined letter.
BoundaryPrefix boundary_action(const ReducedWord& g, const BoundaryPrefix& xi);

/// Exact image g . cyl(c) as a disjoint cylinder union. Total whenever the
/// cancellation between g and c.w is determined by c.w, in particular
/// whenever |c.w| >= |g|; otherwise (c.w a proper prefix of g^{-1}) throws
/// RefineCylinder and the caller splits c into its children.
CylinderUnion cylinder_image(Rank rank, const ReducedWord& g, const Cylinder& c);

/// Cancellation length between g and xi: the largest k <= |g| with
/// xi_i^{-1} = g_{|g|+1-i} for all i <= k. Requires |xi.prefix| >= |g|.
std::size_t cancellation_length(const ReducedWord& g, const BoundaryPrefix& xi);

/// log_{2r-1} of the Radon-Nikodym derivative d(nu o g)/d(nu) at xi, exactly
/// 2k - |g| with k the cancellation length of (g, xi).
LatticeLog rn_exponent(const ReducedWord& g, const BoundaryPrefix& xi);

/// Horofunction h_xi(g) = |g| - 2 (xi|g)_e, exact on trees.
/// Requires |xi.prefix| >= |g|.
std::int64_t horofunction_value(const BoundaryPrefix& xi, const ReducedWord& g);

/// The Radon-Nikodym cocycle R(g, xi) = -h_xi(g^{-1}) in lattice units;
/// equal to rn_exponent(g, xi) (quasi-conformality holds with C = 1).
LatticeLog cocycle_R(const ReducedWord& g, const BoundaryPrefix& xi);

/// (xi|eta)_e = common prefix length of two boundary points. Throws
/// PrefixTooShort if the known prefixes agree entirely.
std::int64_t boundary_gromov_product(const BoundaryPrefix& xi,
                                     const BoundaryPrefix& eta);

/// (xi|g)_e for a group element g: common prefix length, determined when the
/// first disagreement is visible or g is exhausted.
std::int64_t boundary_gromov_product(const BoundaryPrefix& xi,
                                     const ReducedWord& g);

/// nu({xi' : (xi|xi')_e >= n}) = measure of the depth-n prefix cylinder.
Rational shadow_measure(Rank rank, const BoundaryPrefix& xi, int n);

/// Children of a cylinder: the 2r-1 one-letter extensions (2r at the root).
std::vector<Cylinder> cylinder_children(Rank rank, const Cylinder& c);

/// Deterministically extends a word to the given length (each added letter is
/// the smallest valid index). Used to build explicit boundary representatives.
BoundaryPrefix extend_to_prefix(const ReducedWord& w, std::size_t length,
                                Rank rank);

}  // namespace fgb
