#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "steinitz/algebra.hpp"

// Brute-force counterparts of the closed forms. The enumerations and r_s(b)
// maximization only ever ask membership questions, answered by contains or
// by an explicit representation search.
namespace steinitz::oracle {

struct EnumWindow {
  std::uint64_t prime_bound = 1000;        // denominators only use primes up to this
  std::uint64_t numerator_bound = 64;      // a, or n for natural-type sets
  std::uint64_t denominator_bound = 210;   // b ranges over Omega(base) up to this
};

struct Member {
  PositiveRational ratio;  // relative to the base; n/1 for natural-type sets
  SteinitzNumber value;
};

// Sweep of the defining condition a <= r b (a < r b) over the window,
// deduplicated by reduced ratio in sweep order. Every member is re-checked
// with contains; a mismatch throws std::logic_error.
std::vector<Member> enumerate_members(const SaturatedSet& set, const EnumWindow& window);

struct BruteMax {
  bool above_bound = false;
  BigInt value = 0;  // meaningful when !above_bound

  friend bool operator==(const BruteMax&, const BruteMax&) = default;
};

// Largest i <= i_bound with i * (t / b) in S, scanning every i.
BruteMax r_sub_brute(const SaturatedSet& set, const SteinitzNumber& t, std::uint64_t b, std::uint64_t i_bound);

// Scan limit: (floor(r_t) + 2) b + 8 with r_t the density at t, so a correct
// r_t(b) <= r_t b stays well inside and a wrong closed form cannot hide.
// Segments [1..n] use n b + 2, N and infinite type 4 b + 8.
std::uint64_t scan_bound(const SaturatedSet& set, const SteinitzNumber& t, std::uint64_t b);

// Pairs (b, c) with b | c, both in Omega(t) and at most `ceiling`.
std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_pairs(const SteinitzNumber& t, std::uint64_t ceiling);

// One line of a report: `PASS|FAIL <check> <witness>`.
struct CheckLine {
  bool pass = true;
  std::string check;
  std::string witness;
};

struct Report {
  std::vector<CheckLine> lines;

  void add(bool pass, std::string check, std::string witness);
  void append(const Report& other);
  bool passed() const;
  std::size_t failures() const;
  std::string text() const;
  std::string json() const;
};

// r_s(b) values from r_sub_brute at a fixed member t, memoized per b.
class BruteTable {
 public:
  BruteTable(SaturatedSet set, SteinitzNumber t);
  const BruteMax& at(std::uint64_t b);
  const SaturatedSet& set() const noexcept { return set_; }
  const SteinitzNumber& point() const noexcept { return t_; }

 private:
  SaturatedSet set_;
  SteinitzNumber t_;
  std::map<std::uint64_t, BruteMax> cache_;
};

// For each pair (b, c) with brute values R(b), R(c):
//   (1) R(b)/b <= R(c)/c
//   (2) floor(R(c) / (c/b)) <= R(b)
//   (3) floor(R(c) / (c/b)) == R(b)
//   (4) R(c)/c < R(b)/b + 1/b
// Infinite type (above bound) pairs are skipped and counted as such.
Report check_inequality_suite(const SaturatedSet& set, const SteinitzNumber& t,
                              const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs);
Report check_inequality_suite(BruteTable& table, const std::string& name,
                              const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs);

// R(b) <= r b <= R(b) + 1 for every b, with r the density stored at base t,
// and |R(b)/b - r| <= 1/b.
Report check_density_sandwich(BruteTable& table, const std::string& name, const QuadraticNumber& r,
                              const std::vector<std::uint64_t>& bs);

// n_{i+1} = m_i n_i + z_i.
struct FiniteMatrixChain {
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> multiplicities;
  std::vector<std::uint64_t> paddings;
};

void validate_finite_chain(const FiniteMatrixChain& chain);

struct RankRow {
  std::size_t stage = 0;  // 0-based stage of the seed idempotent
  std::uint64_t rank = 0;
  std::vector<std::uint64_t> simulated;    // ranks at stages stage..last
  std::vector<std::uint64_t> closed_form;  // rank * partial products of m
};

// Embeds diagonal idempotents x -> diag(x, ..., x, 0_z) stage by stage and
// counts the ones. Throws std::invalid_argument for a rank outside [1, n_i].
std::vector<RankRow> simulate_finite_chain(const FiniteMatrixChain& chain,
                                           const std::vector<std::pair<std::size_t, std::uint64_t>>& seeds);

// st(eM_n(F)e) over all diagonal idempotents e != 0, ascending and distinct.
std::vector<std::uint64_t> matrix_spectrum_by_ranks(std::uint64_t n);

// Representation t = (a/b) s with b in Omega(s) and a <= r b (a < r b),
// searched over b = b0 p^k for an infinite-exponent prime p of s.
struct Representation {
  BigInt a;
  BigInt b;
};

std::optional<Representation> contains_by_representation(const QuadraticNumber& r, const SteinitzNumber& base,
                                                         bool strict, const SteinitzNumber& t, unsigned max_k = 64);

// Axioms (1)-(3) on members drawn from enumerate_members, plus r_sub against
// r_sub_brute at random (t, b).
Report saturation_fuzz(const SaturatedSet& set, std::size_t trials, std::uint64_t seed);
Report saturation_fuzz(const SetModel& model, std::size_t trials, std::uint64_t seed);

// S(r, s) written raw over s with an infinite exponent against S(inf, s):
// cross-membership on `samples` members each way (via representation search
// for the raw side), and formal inequality of the two descriptors.
Report collapse_probe(const QuadraticNumber& r, const SteinitzNumber& base, std::size_t samples, std::uint64_t seed);

struct CorpusEntry {
  std::string name;
  SaturatedSet set;
};

std::vector<CorpusEntry> standard_corpus();

// Suites behind `check`.
Report saturation_suite(std::uint64_t seed, std::size_t samples);
Report inequality_suite(std::uint64_t bound);
Report roundtrip_suite(std::uint64_t seed);

}  // namespace steinitz::oracle
