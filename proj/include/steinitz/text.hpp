#pragma once

#include <string>
#include <string_view>

#include "steinitz/algebra.hpp"

namespace steinitz {

// Steinitz expressions. A run of terms `p^e` and `P^e` reads exactly like
// parse_steinitz, except that bases may be composite (`12^2`) and repeated
// primes add up. Runs combine with `*` and `/`, and parentheses hold
// rational multipliers: `(1/2)*P^1`, `(3)*2^inf`, `P^1*2^3/6`. The result has
// to be a Steinitz number. Throws ParseError or std::domain_error.
SteinitzNumber eval_steinitz(std::string_view text);

// `u`, `u/v`, `(x+y*sqrt(d))/z`, `sqrt(d)` or `inf`.
DensityBound parse_density(std::string_view text);

struct ParsedSet {
  SaturatedSet set;
  // Written as S(r, s) or S+(r, s) with finite r, normalized to S(inf, s).
  bool collapsed = false;
  // Largest member of the set as written, when the collapse hid it.
  std::optional<SteinitzNumber> written_max;
};

// `[1..n]`, `N`, `S(inf, s)`, `S(r, s)` or `S+(r, s)`, normalized.
ParsedSet parse_set_detailed(std::string_view text);
SaturatedSet parse_set(std::string_view text);

// `alg(<set>)`. A bare set is accepted as well.
AlgebraDescriptor parse_algebra(std::string_view text);
std::string format_algebra(const AlgebraDescriptor& a);

// {"stages":[{"k":..,"s":"..","q":..},...],"tail":{"rule":"attained|approached|unbounded","r":".."}}
// `q` is the quotient towards the next stage and is omitted on the last one.
std::string format_chain(const ChainPresentation& chain);
ChainPresentation parse_chain(std::string_view text);

std::string format_certificate(const IsomorphismCertificate& certificate);

}  // namespace steinitz
