#include "steinitz/saturated_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace steinitz {

namespace {

// Unnormalized S(r, s) over a base with an infinite exponent: extensionally S(inf, s).
bool behaves_as_infinite_type(const SaturatedSet& set) {
  if (set.kind() == SetKind::InfiniteType) return true;
  return set.kind() == SetKind::FiniteType && !set.is_normalized() && collapses_to_infinite_type(set.base());
}

// Stored bound measured at t, ignoring collapse.
QuadraticNumber formal_density_at(const SaturatedSet& set, const SteinitzNumber& t) {
  FactoredRatio q = canonical_ratio_factored(set.base(), t);  // t = q * base
  return set.bound().scaled(q.denominator(), q.numerator());
}

struct Level {
  std::optional<QuadraticNumber> density;  // nullopt: infinite type
  bool strict = false;
};

Level level_at(const SaturatedSet& set, const SteinitzNumber& t) {
  if (behaves_as_infinite_type(set)) return {std::nullopt, false};
  return {formal_density_at(set, t), set.is_strict()};
}

int compare_levels(const Level& a, const Level& b) {
  if (!a.density || !b.density) {
    if (!a.density && !b.density) return 0;
    return a.density ? -1 : 1;
  }
  auto c = *a.density <=> *b.density;
  if (c < 0) return -1;
  if (c > 0) return 1;
  // Same density: S+(r, s) is the smaller set.
  if (a.strict == b.strict) return 0;
  return a.strict ? -1 : 1;
}

void require_member(const SaturatedSet& set, const SteinitzNumber& t) {
  if (!contains(set, t)) throw std::domain_error(format(t) + " is not a member of " + set.str());
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

bool collapses_to_infinite_type(const SteinitzNumber& base) { return base.is_infinite() && !base.is_infinity_free(); }

SaturatedSet SaturatedSet::segment(const BigInt& n) {
  if (n < 1) throw std::domain_error("segment [1..n] needs n >= 1");
  SaturatedSet s;
  s.kind_ = SetKind::Segment;
  s.size_ = n;
  return s;
}

SaturatedSet SaturatedSet::all_naturals() { return SaturatedSet(); }

SaturatedSet SaturatedSet::infinite_type(const SteinitzNumber& base) {
  if (base.is_natural()) return all_naturals();
  SaturatedSet s;
  s.kind_ = SetKind::InfiniteType;
  s.base_ = base;
  return s;
}

SaturatedSet SaturatedSet::finite_type(const DensityBound& r, const SteinitzNumber& base, bool strict) {
  if (r.is_infinite()) return infinite_type(base);
  if (base.is_natural()) {
    throw std::domain_error("S(r, s) needs an infinite Steinitz number, got " + format(base));
  }
  if (collapses_to_infinite_type(base)) return infinite_type(base);
  const QuadraticNumber& value = r.value();
  if (strict) {
    // S+(r, s) == S(r, s) unless r = u/v with v in Omega(s).
    strict = value.is_rational() && omega_contains(base, value.denominator());
  }
  SaturatedSet s;
  s.kind_ = SetKind::FiniteType;
  s.base_ = base;
  s.bound_ = value;
  s.strict_ = strict;
  return s;
}

SaturatedSet SaturatedSet::unnormalized_finite_type(const QuadraticNumber& r, const SteinitzNumber& base, bool strict) {
  if (r.sign() <= 0) throw std::domain_error("density must be positive");
  SaturatedSet s;
  s.kind_ = SetKind::FiniteType;
  s.base_ = base;
  s.bound_ = r;
  s.strict_ = strict;
  s.normalized_ = false;
  return s;
}

const BigInt& SaturatedSet::segment_size() const {
  if (kind_ != SetKind::Segment) throw std::logic_error("segment_size() of " + str());
  return size_;
}

const SteinitzNumber& SaturatedSet::base() const {
  if (is_natural_type()) throw std::logic_error("base() of " + str());
  return base_;
}

const QuadraticNumber& SaturatedSet::bound() const {
  if (kind_ != SetKind::FiniteType) throw std::logic_error("bound() of " + str());
  return bound_;
}

bool SaturatedSet::is_strict() const { return kind_ == SetKind::FiniteType && strict_; }

std::string SaturatedSet::str() const {
  switch (kind_) {
    case SetKind::Segment:
      return "[1.." + size_.str() + "]";
    case SetKind::AllNaturals:
      return "N";
    case SetKind::InfiniteType:
      return "S(inf, " + format(base_) + ")";
    case SetKind::FiniteType:
      return std::string(strict_ ? "S+(" : "S(") + bound_.str() + ", " + format(base_) + ")";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Membership and measurements

bool contains(const SaturatedSet& set, const SteinitzNumber& t) {
  switch (set.kind()) {
    case SetKind::Segment: {
      auto n = t.as_natural();
      return n && *n <= set.segment_size();
    }
    case SetKind::AllNaturals:
      return t.is_natural();
    case SetKind::InfiniteType:
      return rationally_connected(set.base(), t);
    case SetKind::FiniteType: {
      if (!rationally_connected(set.base(), t)) return false;
      if (behaves_as_infinite_type(set)) return true;
      // t = (a/b) base with a/b in lowest terms; b lies in Omega(base)
      // automatically, so membership is the bound a <= r b (a < r b).
      FactoredRatio q = canonical_ratio_factored(set.base(), t);
      auto c = QuadraticNumber::rational(q.numerator(), q.denominator()) <=> set.bound();
      return set.is_strict() ? c < 0 : c <= 0;
    }
  }
  return false;
}

std::optional<QuadraticNumber> density_at(const SaturatedSet& set, const SteinitzNumber& t) {
  if (set.is_natural_type()) throw std::domain_error("natural-type set " + set.str() + " has no density");
  if (!rationally_connected(set.base(), t)) {
    throw std::domain_error(format(t) + " is not rationally connected to the base of " + set.str());
  }
  return level_at(set, t).density;
}

Rebased rebase(const SaturatedSet& set, const SteinitzNumber& t) {
  if (set.is_natural_type()) throw std::domain_error("natural-type set " + set.str() + " has no base");
  require_member(set, t);
  auto d = density_at(set, t);
  if (!d) return {DensityBound::infinity(), false};
  return {DensityBound(*d), set.is_strict()};
}

ExtendedNatural r_sub(const SaturatedSet& set, const SteinitzNumber& t, const BigInt& b) {
  require_member(set, t);
  if (!omega_contains(t, b)) throw std::domain_error(b.str() + " is not in Omega(" + format(t) + ")");
  switch (set.kind()) {
    case SetKind::Segment:
      // i * t / b <= n.
      return floor_div(set.segment_size() * b, *t.as_natural());
    case SetKind::AllNaturals:
    case SetKind::InfiniteType:
      return ExtendedNatural::infinity();
    case SetKind::FiniteType: {
      if (behaves_as_infinite_type(set)) return ExtendedNatural::infinity();
      QuadraticNumber rb = formal_density_at(set, t).scaled(b, 1);
      // r b is an integer exactly when r = u/v is rational and v | b.
      if (rb.is_integer()) return set.is_strict() ? rb.numerator() - 1 : rb.numerator();
      return rb.floor();
    }
  }
  return {};
}

DensityBound density(const SaturatedSet& set, const SteinitzNumber& t) {
  require_member(set, t);
  if (t.is_natural()) throw std::domain_error("density is defined at infinite Steinitz numbers only");
  return rebase(set, t).density;
}

SteinitzNumber reference_member(const SaturatedSet& set) {
  if (set.is_natural_type()) return SteinitzNumber();
  if (contains(set, set.base())) return set.base();
  Prime p = 2;
  while (!omega_contains(set.base(), BigInt(p))) p = next_prime(p);
  return divide_by(set.base(), p);
}

std::optional<SteinitzNumber> max_element(const SaturatedSet& set) {
  if (set.kind() == SetKind::Segment) return SteinitzNumber::from_natural(set.segment_size());
  if (set.kind() != SetKind::FiniteType || behaves_as_infinite_type(set)) return std::nullopt;
  if (set.is_strict() || !set.bound().is_rational()) return std::nullopt;
  const QuadraticNumber& r = set.bound();
  if (!omega_contains(set.base(), r.denominator())) return std::nullopt;
  return scale(set.base(), PositiveRational(r.numerator(), r.denominator()));
}

// ---------------------------------------------------------------------------
// Comparison

bool equals_formal(const SaturatedSet& a, const SaturatedSet& b) {
  if (a.kind() != b.kind() || a.is_normalized() != b.is_normalized()) return false;
  switch (a.kind()) {
    case SetKind::Segment:
      return a.segment_size() == b.segment_size();
    case SetKind::AllNaturals:
      return true;
    case SetKind::InfiniteType:
      return rationally_connected(a.base(), b.base());
    case SetKind::FiniteType:
      if (!rationally_connected(a.base(), b.base())) return false;
      return a.is_strict() == b.is_strict() && formal_density_at(b, a.base()) == a.bound();
  }
  return false;
}

std::string to_string(Inclusion inclusion) {
  switch (inclusion) {
    case Inclusion::Disjoint:
      return "disjoint";
    case Inclusion::Equal:
      return "equal";
    case Inclusion::LeftInRight:
      return "left-in-right";
    case Inclusion::RightInLeft:
      return "right-in-left";
  }
  return {};
}

Inclusion compare_inclusion(const SaturatedSet& a, const SaturatedSet& b) {
  if (a.is_natural_type() != b.is_natural_type()) return Inclusion::Disjoint;
  int c;
  if (a.is_natural_type()) {
    // Segments and N all contain 1, so they are nested.
    if (a.kind() == SetKind::AllNaturals || b.kind() == SetKind::AllNaturals) {
      c = (a.kind() == b.kind()) ? 0 : (a.kind() == SetKind::AllNaturals ? 1 : -1);
    } else {
      c = a.segment_size().compare(b.segment_size());
    }
  } else {
    // Within one rational-connectivity class every set contains s / b for
    // all large b in Omega(s), so the sets meet and are ordered by level.
    if (!rationally_connected(a.base(), b.base())) return Inclusion::Disjoint;
    const SteinitzNumber& s = a.base();
    c = compare_levels(level_at(a, s), level_at(b, s));
  }
  if (c == 0) return Inclusion::Equal;
  return c < 0 ? Inclusion::LeftInRight : Inclusion::RightInLeft;
}

ExtensionalComparison compare_extensional(const SaturatedSet& a, const SaturatedSet& b, std::size_t samples,
                                          std::uint64_t seed) {
  SetModel ma = model_of(a);
  SetModel mb = model_of(b);
  std::mt19937_64 rng(seed);
  ExtensionalComparison out{true, 0, std::nullopt};
  for (std::size_t i = 0; i < samples; ++i) {
    SteinitzNumber t = ma.draw(rng);
    ++out.checked;
    if (!mb.contains(t)) return {false, out.checked, t};
    SteinitzNumber u = mb.draw(rng);
    ++out.checked;
    if (!ma.contains(u)) return {false, out.checked, u};
  }
  return out;
}

bool equals_extensional(const SaturatedSet& a, const SaturatedSet& b, std::size_t samples, std::uint64_t seed) {
  return compare_extensional(a, b, samples, seed).agree;
}

// ---------------------------------------------------------------------------
// Chains

SaturatedSet union_chain(std::span<const SaturatedSet> prefix, const std::optional<TailRule>& tail) {
  if (prefix.empty()) throw std::invalid_argument("union of an empty chain");
  for (std::size_t i = 1; i < prefix.size(); ++i) {
    Inclusion inc = compare_inclusion(prefix[i - 1], prefix[i]);
    if (inc != Inclusion::Equal && inc != Inclusion::LeftInRight) {
      throw std::invalid_argument("chain is not ascending at position " + std::to_string(i) + ": " +
                                  prefix[i - 1].str() + " vs " + prefix[i].str());
    }
  }
  if (!tail) return prefix.back();

  const SaturatedSet& front = prefix.front();
  if (tail->kind == TailRule::Kind::Unbounded) {
    if (front.is_natural_type()) return SaturatedSet::all_naturals();
    return SaturatedSet::infinite_type(front.base());
  }
  if (front.is_natural_type()) throw std::invalid_argument("a density tail needs infinite Steinitz numbers");
  if (!tail->density || tail->density->is_infinite()) {
    throw std::invalid_argument("attained/approached tail needs a finite density");
  }
  const QuadraticNumber& r = tail->density->value();
  bool strict = tail->kind == TailRule::Kind::ApproachedDensity;
  for (const SaturatedSet& s : prefix) {
    Level level = level_at(s, front.base());
    if (!level.density || *level.density > r) {
      throw std::invalid_argument("tail density " + r.str() + " is below " + s.str());
    }
    // A closed stage at the limit density means the bound is attained.
    if (*level.density == r && !level.strict) strict = false;
  }
  return SaturatedSet::finite_type(*tail->density, front.base(), strict);
}

// ---------------------------------------------------------------------------
// Sampling and the saturation axioms

SetModel model_of(const SaturatedSet& set, std::uint64_t divisor_ceiling) {
  SetModel model;
  model.name = set.str();
  model.contains = [set](const SteinitzNumber& t) { return contains(set, t); };
  if (set.is_natural_type()) {
    std::uint64_t top = 1000;
    if (set.kind() == SetKind::Segment) top = to_u64(std::min(set.segment_size(), BigInt(1) << 20));
    model.draw = [top](std::mt19937_64& rng) {
      std::uniform_int_distribution<std::uint64_t> pick(1, top);
      return SteinitzNumber::from_natural(pick(rng));
    };
    return model;
  }
  std::vector<std::uint64_t> omega = enumerate_omega(set.base(), divisor_ceiling);
  bool unbounded = behaves_as_infinite_type(set);
  model.draw = [set, omega, unbounded](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick_b(0, omega.size() - 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::uint64_t b = omega[pick_b(rng)];
      std::uint64_t a_max = unbounded ? 3 * b + 1 : to_u64(set.bound().scaled(b, 1).floor()) + 1;
      std::uniform_int_distribution<std::uint64_t> pick_a(1, std::max<std::uint64_t>(a_max, 1));
      SteinitzNumber t = scale(set.base(), PositiveRational(pick_a(rng), b));
      if (contains(set, t)) return t;
    }
    throw std::runtime_error("could not sample a member of " + set.str());
  };
  return model;
}

SetModel literal_model(std::string name, std::vector<SteinitzNumber> members) {
  if (members.empty()) throw std::invalid_argument("literal set must be nonempty");
  SetModel model;
  model.name = std::move(name);
  model.contains = [members](const SteinitzNumber& t) {
    return std::find(members.begin(), members.end(), t) != members.end();
  };
  model.draw = [members](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    return members[pick(rng)];
  };
  return model;
}

AxiomReport check_saturation_axioms(const SetModel& model, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AxiomReport report;
  auto fail = [&report](int axiom, std::string witness) {
    report.passed = false;
    report.failed_axiom = axiom;
    report.witness = std::move(witness);
    return report;
  };
  // Checks i * s in S for 2 <= i < n, given s, n s in S.
  auto interpolate = [&](const SteinitzNumber& s, const BigInt& n) -> std::optional<std::string> {
    for (BigInt i = 2; i < n && i <= 4096; ++i) {
      if (!model.contains(mul_natural(s, i))) {
        return "s=" + format(s) + " n=" + n.str() + " i=" + i.str();
      }
    }
    return std::nullopt;
  };

  for (std::size_t k = 0; k < samples; ++k) {
    ++report.samples;
    SteinitzNumber t = model.draw(rng);
    SteinitzNumber u = model.draw(rng);

    if (!rationally_connected(t, u)) return fail(1, "s1=" + format(t) + " s2=" + format(u));

    std::vector<std::uint64_t> divisors = enumerate_omega(t, 210);
    std::uniform_int_distribution<std::size_t> pick_b(0, divisors.size() - 1);
    std::uint64_t b = divisors[pick_b(rng)];
    SteinitzNumber quotient = divide_by(t, b);
    if (!model.contains(quotient)) {
      return fail(2, "s2=" + format(t) + " b=" + std::to_string(b) + " s1=" + format(quotient));
    }

    // Integer ratio between two sampled members.
    int order = compare_connected(t, u);
    if (order != 0) {
      const SteinitzNumber& lo = order < 0 ? t : u;
      const SteinitzNumber& hi = order < 0 ? u : t;
      PositiveRational q = canonical_ratio(lo, hi);
      if (q.is_integer()) {
        if (auto w = interpolate(lo, q.num())) return fail(3, *w);
      }
    }
    // Random multiple of a sampled member.
    std::uniform_int_distribution<int> pick_n(2, 12);
    BigInt n = pick_n(rng);
    if (model.contains(mul_natural(t, n))) {
      if (auto w = interpolate(t, n)) return fail(3, *w);
    }
  }
  return report;
}

AxiomReport check_saturation_axioms(const SaturatedSet& set, std::size_t samples, std::uint64_t seed) {
  return check_saturation_axioms(model_of(set), samples, seed);
}

}  // namespace steinitz
