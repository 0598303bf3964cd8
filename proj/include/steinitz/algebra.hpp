#pragma once

#include <optional>
#include <vector>

#include "steinitz/saturated_set.hpp"

namespace steinitz {

// One stage M_k(A_s) of an increasing chain of corners.
struct ChainStage {
  BigInt outer_size;
  SteinitzNumber inner;

  friend bool operator==(const ChainStage&, const ChainStage&) = default;
};

// Stages (k_i, s_i) with s_i = q_i * s_{i+1}; consecutive stages embed as
// north-west corners, which needs k_i * q_i <= k_{i+1}.
struct ChainPresentation {
  std::vector<ChainStage> stages;
  std::vector<BigInt> quotients;
  std::optional<TailRule> tail;

  friend bool operator==(const ChainPresentation&, const ChainPresentation&) = default;
};

// Throws std::invalid_argument describing the first broken invariant.
void validate_chain(const ChainPresentation& chain);

// A countable-dimensional locally matrix algebra, known through its spectrum.
struct AlgebraDescriptor {
  SaturatedSet spectrum;
  std::optional<ChainPresentation> witness;
  // Normalization replaced S(1, s) by S(inf, s) because s has an infinite exponent.
  bool collapsed = false;
  // st(A) as constructed. Survives the collapse, where the spectrum alone
  // no longer has a largest element.
  std::optional<SteinitzNumber> declared_st;
};

// Descriptor for a given spectrum; st is the largest member if there is one.
AlgebraDescriptor algebra_with_spectrum(const SaturatedSet& spectrum);

AlgebraDescriptor spec_matrix(const BigInt& n);
// Spectrum of a unital algebra with st = s: [1..s] or S(1, s).
AlgebraDescriptor spec_unital(const SteinitzNumber& s);

// st(A), or nullopt when A is not unital and no st was declared.
std::optional<SteinitzNumber> steinitz_number_of(const AlgebraDescriptor& a);

// M_inf(A) for unital A. Throws std::domain_error otherwise.
AlgebraDescriptor m_infinity(const AlgebraDescriptor& a);
// M_n(A) for unital A.
AlgebraDescriptor matrix_over(const AlgebraDescriptor& a, const BigInt& n);
// eAe for an idempotent of relative rank q = a/b: needs a <= b, b in Omega(st).
AlgebraDescriptor corner(const AlgebraDescriptor& a, const PositiveRational& q);

bool is_unital(const AlgebraDescriptor& a);
bool isomorphic(const AlgebraDescriptor& a, const AlgebraDescriptor& b);
// B embeds in A as an approximative corner.
bool embeds_as_approximative_corner(const AlgebraDescriptor& b, const AlgebraDescriptor& a);

// b_i = prod over the first i primes p of p^min(v_p(base), i).
std::vector<BigInt> default_divisor_chain(const SteinitzNumber& base, std::size_t stages);

// Chain of corners whose union has spectrum S. Throws std::invalid_argument
// for a divisor chain that is not ascending under divisibility or leaves Omega(base).
ChainPresentation realize(const SaturatedSet& set, const std::optional<std::vector<BigInt>>& divisor_chain = std::nullopt,
                          std::size_t stages = 4);

SaturatedSet spectrum_of_chain(const ChainPresentation& chain);

// Ranks r1 < r2 in M_n with current = (r1/n) scale and target = (r2/n) scale.
struct CornerMatch {
  BigInt n;
  BigInt r1;
  BigInt r2;
  SteinitzNumber scale;
};

std::optional<CornerMatch> match_corner(const AlgebraDescriptor& a, const SteinitzNumber& current,
                                        const SteinitzNumber& target);

// Ascending st-values lying in both spectra and dominating both chains stage by stage.
struct IsomorphismCertificate {
  std::vector<SteinitzNumber> steps;
};

std::optional<IsomorphismCertificate> interleave(const ChainPresentation& a, const ChainPresentation& b);
bool check_certificate(const IsomorphismCertificate& certificate, const ChainPresentation& a,
                       const ChainPresentation& b);

}  // namespace steinitz
