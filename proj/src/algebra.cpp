#include "steinitz/algebra.hpp"

#include <stdexcept>

namespace steinitz {

namespace {

SteinitzNumber stage_st(const ChainStage& stage) { return mul_natural(stage.inner, stage.outer_size); }

const SteinitzNumber& require_st(const std::optional<SteinitzNumber>& st, const AlgebraDescriptor& a) {
  if (!st) throw std::domain_error("algebra with spectrum " + a.spectrum.str() + " is not unital");
  return *st;
}

// Larger of two rationally connected numbers.
const SteinitzNumber& larger(const SteinitzNumber& a, const SteinitzNumber& b) {
  return compare_connected(a, b) < 0 ? b : a;
}

}  // namespace

void validate_chain(const ChainPresentation& chain) {
  if (chain.stages.empty()) throw std::invalid_argument("chain has no stages");
  if (chain.quotients.size() + 1 != chain.stages.size()) {
    throw std::invalid_argument("chain with " + std::to_string(chain.stages.size()) + " stages needs " +
                                std::to_string(chain.stages.size() - 1) + " quotients");
  }
  for (std::size_t i = 0; i < chain.stages.size(); ++i) {
    if (chain.stages[i].outer_size < 1) throw std::invalid_argument("stage " + std::to_string(i + 1) + " has k < 1");
  }
  for (std::size_t i = 0; i + 1 < chain.stages.size(); ++i) {
    const ChainStage& here = chain.stages[i];
    const ChainStage& next = chain.stages[i + 1];
    const BigInt& q = chain.quotients[i];
    std::string at = "stage " + std::to_string(i + 1);
    if (q < 1) throw std::invalid_argument(at + ": quotient must be positive");
    if (mul_natural(next.inner, q) != here.inner) {
      throw std::invalid_argument(at + ": s_i != q_i * s_{i+1}");
    }
    if (here.outer_size * q > next.outer_size) {
      throw std::invalid_argument(at + ": k_i * q_i > k_{i+1}");
    }
  }
}

AlgebraDescriptor algebra_with_spectrum(const SaturatedSet& spectrum) {
  return {spectrum, std::nullopt, false, max_element(spectrum)};
}

AlgebraDescriptor spec_matrix(const BigInt& n) {
  return {SaturatedSet::segment(n), std::nullopt, false, SteinitzNumber::from_natural(n)};
}

AlgebraDescriptor spec_unital(const SteinitzNumber& s) {
  if (auto n = s.as_natural()) return spec_matrix(*n);
  SaturatedSet spectrum = SaturatedSet::finite_type(DensityBound::rational(1), s, false);
  return {spectrum, std::nullopt, collapses_to_infinite_type(s), s};
}

std::optional<SteinitzNumber> steinitz_number_of(const AlgebraDescriptor& a) {
  if (a.declared_st) return a.declared_st;
  return max_element(a.spectrum);
}

AlgebraDescriptor m_infinity(const AlgebraDescriptor& a) {
  const SteinitzNumber s = require_st(steinitz_number_of(a), a);
  return {SaturatedSet::infinite_type(s), std::nullopt, false, std::nullopt};
}

AlgebraDescriptor matrix_over(const AlgebraDescriptor& a, const BigInt& n) {
  if (n < 1) throw std::domain_error("matrix size must be positive");
  const SteinitzNumber s = require_st(steinitz_number_of(a), a);
  if (n == 1) return a;
  return spec_unital(mul_natural(s, n));
}

AlgebraDescriptor corner(const AlgebraDescriptor& a, const PositiveRational& q) {
  const SteinitzNumber s = require_st(steinitz_number_of(a), a);
  if (q.num() > q.den()) throw std::domain_error("relative rank " + q.str() + " exceeds 1");
  if (!omega_contains(s, q.den())) {
    throw std::domain_error(q.den().str() + " is not in Omega(" + format(s) + ")");
  }
  if (q.is_integer()) return a;
  return spec_unital(scale(s, q));
}

bool is_unital(const AlgebraDescriptor& a) { return max_element(a.spectrum).has_value(); }

bool isomorphic(const AlgebraDescriptor& a, const AlgebraDescriptor& b) { return equals_formal(a.spectrum, b.spectrum); }

bool embeds_as_approximative_corner(const AlgebraDescriptor& b, const AlgebraDescriptor& a) {
  Inclusion inc = compare_inclusion(b.spectrum, a.spectrum);
  return inc == Inclusion::Equal || inc == Inclusion::LeftInRight;
}

std::vector<BigInt> default_divisor_chain(const SteinitzNumber& base, std::size_t stages) {
  std::vector<BigInt> chain;
  for (std::size_t i = 1; i <= stages; ++i) {
    BigInt b = 1;
    for (std::size_t j = 0; j < i; ++j) {
      Prime p = nth_prime(j);
      Exponent e = min(base.valuation(p), Exponent(BigInt(i)));
      b *= power(p, e.value());
    }
    chain.push_back(b);
  }
  return chain;
}

ChainPresentation realize(const SaturatedSet& set, const std::optional<std::vector<BigInt>>& divisor_chain,
                          std::size_t stages) {
  if (stages < 1) throw std::invalid_argument("realize needs at least one stage");
  ChainPresentation chain;
  switch (set.kind()) {
    case SetKind::Segment:
      chain.stages.push_back({set.segment_size(), SteinitzNumber()});
      return chain;
    case SetKind::AllNaturals:
    case SetKind::InfiniteType: {
      // M_inf(A_s) as the union of M_i(A_s).
      SteinitzNumber s = set.kind() == SetKind::AllNaturals ? SteinitzNumber() : set.base();
      for (std::size_t i = 1; i <= stages; ++i) {
        chain.stages.push_back({BigInt(i), s});
        if (i > 1) chain.quotients.push_back(1);
      }
      chain.tail = TailRule::unbounded();
      return chain;
    }
    case SetKind::FiniteType:
      break;
  }

  // The construction starts from a member s of S.
  const SteinitzNumber s = reference_member(set);
  std::vector<BigInt> bs = divisor_chain ? *divisor_chain : default_divisor_chain(s, stages);
  if (bs.empty()) throw std::invalid_argument("divisor chain is empty");
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (bs[i] < 1 || !omega_contains(s, bs[i])) {
      throw std::invalid_argument("divisor " + bs[i].str() + " is not in Omega(" + format(s) + ")");
    }
    if (i > 0 && bs[i] % bs[i - 1] != 0) {
      throw std::invalid_argument("divisor chain is not ascending: " + bs[i - 1].str() + " does not divide " +
                                  bs[i].str());
    }
  }
  // A_i = M_{r_s(b_i)}(A_{s/b_i}).
  for (std::size_t i = 0; i < bs.size(); ++i) {
    ExtendedNatural k = r_sub(set, s, bs[i]);
    chain.stages.push_back({k.value(), divide_by(s, bs[i])});
    if (i > 0) chain.quotients.push_back(bs[i] / bs[i - 1]);
  }
  DensityBound r = density(set, stage_st(chain.stages.front()));
  chain.tail = set.is_strict() ? TailRule::approached(r) : TailRule::attained(r);
  return chain;
}

SaturatedSet spectrum_of_chain(const ChainPresentation& chain) {
  validate_chain(chain);
  std::vector<SaturatedSet> prefix;
  prefix.reserve(chain.stages.size());
  for (const ChainStage& stage : chain.stages) prefix.push_back(spec_unital(stage_st(stage)).spectrum);
  SaturatedSet u = union_chain(prefix, chain.tail);
  // Report the union at the first inner Steinitz number s_1, a member.
  const SteinitzNumber& s1 = chain.stages.front().inner;
  if (u.kind() == SetKind::InfiniteType) return SaturatedSet::infinite_type(s1);
  if (u.kind() == SetKind::FiniteType) return SaturatedSet::finite_type(rebase(u, s1).density, s1, u.is_strict());
  return u;
}

std::optional<CornerMatch> match_corner(const AlgebraDescriptor& a, const SteinitzNumber& current,
                                        const SteinitzNumber& target) {
  if (!contains(a.spectrum, current) || !contains(a.spectrum, target)) return std::nullopt;
  PositiveRational q = canonical_ratio(current, target);  // target / current
  if (q.num() <= q.den()) return std::nullopt;
  // current = (d/c) target with c in Omega(target): ranks d < c inside M_c.
  return CornerMatch{q.num(), q.den(), q.num(), target};
}

std::optional<IsomorphismCertificate> interleave(const ChainPresentation& a, const ChainPresentation& b) {
  if (!equals_formal(spectrum_of_chain(a), spectrum_of_chain(b))) return std::nullopt;
  IsomorphismCertificate cert;
  std::size_t n = std::max(a.stages.size(), b.stages.size());
  for (std::size_t j = 0; j < n; ++j) {
    SteinitzNumber sa = stage_st(a.stages[std::min(j, a.stages.size() - 1)]);
    SteinitzNumber sb = stage_st(b.stages[std::min(j, b.stages.size() - 1)]);
    SteinitzNumber t = larger(sa, sb);
    if (!cert.steps.empty()) t = larger(cert.steps.back(), t);
    cert.steps.push_back(std::move(t));
  }
  return cert;
}

bool check_certificate(const IsomorphismCertificate& certificate, const ChainPresentation& a,
                       const ChainPresentation& b) {
  if (certificate.steps.size() < std::max(a.stages.size(), b.stages.size())) return false;
  SaturatedSet spec_a = spectrum_of_chain(a);
  SaturatedSet spec_b = spectrum_of_chain(b);
  for (std::size_t j = 0; j < certificate.steps.size(); ++j) {
    const SteinitzNumber& t = certificate.steps[j];
    if (!contains(spec_a, t) || !contains(spec_b, t)) return false;
    if (j > 0 && compare_connected(certificate.steps[j - 1], t) > 0) return false;
    for (const ChainPresentation* c : {&a, &b}) {
      SteinitzNumber st = stage_st(c->stages[std::min(j, c->stages.size() - 1)]);
      if (!rationally_connected(st, t) || compare_connected(st, t) > 0) return false;
    }
  }
  return true;
}

}  // namespace steinitz
