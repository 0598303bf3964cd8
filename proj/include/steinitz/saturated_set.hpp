#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "steinitz/density.hpp"
#include "steinitz/steinitz_number.hpp"

namespace steinitz {

enum class SetKind { Segment, AllNaturals, InfiniteType, FiniteType };

// A saturated subset of Steinitz numbers in canonical form:
//   Segment      {1, ..., n}
//   AllNaturals  N
//   InfiniteType S(inf, s) = { (a/b) s : b in Omega(s) }
//   FiniteType   S(r, s)  = { (a/b) s : b in Omega(s), a <= r b }
//                S+(r, s) = { (a/b) s : b in Omega(s), a <  r b }
//
// The factory functions normalize: S(inf, n) for natural n is N; a base with
// an infinite exponent turns S(r, s) and S+(r, s) into S(inf, s) since every
// bound a <= r b is then met by some representation; the strict flag is
// dropped whenever S+(r, s) == S(r, s). FiniteType bases are therefore always
// infinite and Infinity-free.
class SaturatedSet {
 public:
  static SaturatedSet segment(const BigInt& n);
  static SaturatedSet all_naturals();
  static SaturatedSet infinite_type(const SteinitzNumber& base);
  // Throws std::domain_error for a natural base.
  static SaturatedSet finite_type(const DensityBound& r, const SteinitzNumber& base, bool strict);

  // S(r, s) / S+(r, s) exactly as written, without normalization. Membership
  // follows the existential definition. Used to probe the collapse of bases
  // carrying an infinite exponent.
  static SaturatedSet unnormalized_finite_type(const QuadraticNumber& r, const SteinitzNumber& base, bool strict);

  SetKind kind() const noexcept { return kind_; }
  bool is_normalized() const noexcept { return normalized_; }

  const BigInt& segment_size() const;
  const SteinitzNumber& base() const;
  const QuadraticNumber& bound() const;
  bool is_strict() const;

  // Segment and AllNaturals.
  bool is_natural_type() const noexcept { return kind_ == SetKind::Segment || kind_ == SetKind::AllNaturals; }

  // `[1..n]`, `N`, `S(inf, s)`, `S(r, s)`, `S+(r, s)`.
  std::string str() const;

 private:
  SaturatedSet() = default;

  SetKind kind_ = SetKind::AllNaturals;
  BigInt size_ = 0;
  SteinitzNumber base_;
  QuadraticNumber bound_;
  bool strict_ = false;
  bool normalized_ = true;
};

// True when S(r, s) collapses to S(inf, s): s infinite with an infinite exponent.
bool collapses_to_infinite_type(const SteinitzNumber& base);

bool contains(const SaturatedSet& set, const SteinitzNumber& t);

// Density of the set measured at a rationally connected point t (not
// necessarily a member): r * b / a where t = (a/b) * base. Infinity for
// infinite type. Throws std::domain_error for natural-type sets or an
// unconnected t.
std::optional<QuadraticNumber> density_at(const SaturatedSet& set, const SteinitzNumber& t);

struct Rebased {
  DensityBound density;
  bool strict;
};

// The same set described at base t (t must be a member).
Rebased rebase(const SaturatedSet& set, const SteinitzNumber& t);

bool equals_formal(const SaturatedSet& a, const SaturatedSet& b);

struct ExtensionalComparison {
  bool agree;
  std::size_t checked;
  std::optional<SteinitzNumber> witness;  // member of one set but not the other
};

// Bidirectional membership agreement on `samples` members drawn from each set.
ExtensionalComparison compare_extensional(const SaturatedSet& a, const SaturatedSet& b, std::size_t samples,
                                          std::uint64_t seed);
bool equals_extensional(const SaturatedSet& a, const SaturatedSet& b, std::size_t samples, std::uint64_t seed);

enum class Inclusion { Disjoint, Equal, LeftInRight, RightInLeft };

std::string to_string(Inclusion inclusion);

// Any two saturated sets are disjoint or nested.
Inclusion compare_inclusion(const SaturatedSet& a, const SaturatedSet& b);

// r_t(b) = max { i >= 1 : i * t / b in S }, via closed forms. Requires t in S
// and b in Omega(t); throws std::domain_error otherwise.
ExtendedNatural r_sub(const SaturatedSet& set, const SteinitzNumber& t, const BigInt& b);

// r_S(t) = lim r_t(b) / b. Requires t in S and t infinite.
DensityBound density(const SaturatedSet& set, const SteinitzNumber& t);

// A canonical member: 1 for natural-type sets, otherwise the base, or base/p
// for the least prime p in Omega(base) when the base is excluded (S+(1, s)).
SteinitzNumber reference_member(const SaturatedSet& set);

// Largest member, when one exists (exactly the unital spectra).
std::optional<SteinitzNumber> max_element(const SaturatedSet& set);

// Declared limit behaviour of an infinite ascending chain of sets. A density
// is measured at the base of the chain's first set.
struct TailRule {
  enum class Kind { AttainedDensity, ApproachedDensity, Unbounded };
  Kind kind = Kind::Unbounded;
  std::optional<DensityBound> density;

  static TailRule attained(DensityBound r) { return {Kind::AttainedDensity, std::move(r)}; }
  static TailRule approached(DensityBound r) { return {Kind::ApproachedDensity, std::move(r)}; }
  static TailRule unbounded() { return {Kind::Unbounded, std::nullopt}; }

  friend bool operator==(const TailRule&, const TailRule&) = default;
};

// Union of an ascending chain: the explicit prefix followed by the declared
// tail. Throws std::invalid_argument for a non-ascending prefix or a tail
// that does not dominate the prefix.
SaturatedSet union_chain(std::span<const SaturatedSet> prefix, const std::optional<TailRule>& tail);

// Membership predicate plus a deterministic member generator. Lets the axiom
// checks run against literal (possibly non-saturated) sets as well.
struct SetModel {
  std::string name;
  std::function<bool(const SteinitzNumber&)> contains;
  std::function<SteinitzNumber(std::mt19937_64&)> draw;
};

// Members (a/b) * base with b drawn from Omega(base) up to `divisor_ceiling`
// and a <= floor(r b) + 1, filtered by membership.
SetModel model_of(const SaturatedSet& set, std::uint64_t divisor_ceiling = 210);
SetModel literal_model(std::string name, std::vector<SteinitzNumber> members);

struct AxiomReport {
  bool passed = true;
  int failed_axiom = 0;  // 1, 2 or 3
  std::string witness;
  std::size_t samples = 0;
};

// Checks the three saturation conditions on sampled members:
// (1) pairwise rational connectivity, (2) closure under finite division,
// (3) s, n s in S implies i s in S for 1 <= i <= n.
AxiomReport check_saturation_axioms(const SetModel& model, std::size_t samples, std::uint64_t seed);
AxiomReport check_saturation_axioms(const SaturatedSet& set, std::size_t samples, std::uint64_t seed);

}  // namespace steinitz
