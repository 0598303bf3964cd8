#include "steinitz/text.hpp"

#include <json.hpp>

#include "cursor.hpp"

namespace steinitz {

namespace {

using detail::Cursor;
using Json = nlohmann::ordered_json;

// s * q, with the finite part kept as an exact ratio until the end.
struct Value {
  SteinitzNumber s;
  FactoredRatio q;
};

Exponent read_exponent(Cursor& cur) {
  if (!cur.accept('^')) return Exponent(1);
  if (cur.accept("inf")) return Exponent::infinity();
  return Exponent(cur.read_natural("exponent (digits or 'inf')"));
}

bool at_term(Cursor& cur) { return cur.at_digit() || cur.peek() == 'P'; }

Value parse_expr(Cursor& cur);

Value parse_run(Cursor& cur) {
  std::optional<Exponent> default_exponent;
  SteinitzNumber::ExponentMap listed;
  while (true) {
    std::size_t start = cur.pos();
    if (cur.accept('P')) {
      if (default_exponent) cur.fail_at(start, "term", "duplicate 'P' term");
      default_exponent = read_exponent(cur);
    } else {
      BigInt n = cur.read_natural("integer or 'P'");
      if (n == 0) cur.fail_at(start, "positive integer");
      Exponent e = read_exponent(cur);
      std::vector<std::pair<Prime, BigInt>> factors;
      try {
        factors = factorize(n);
      } catch (const std::domain_error& ex) {
        cur.fail_at(start, "factorable integer", ex.what());
      }
      for (auto& [p, k] : factors) {
        Exponent add = e.is_infinite() ? Exponent::infinity() : Exponent(k * e.value());
        auto it = listed.find(p);
        if (it == listed.end()) {
          listed.emplace(p, add);
        } else {
          it->second = it->second + add;
        }
      }
    }
    // A '*' continues the run only when another term follows.
    Cursor probe = cur;
    if (!probe.accept('*') || !at_term(probe)) break;
    cur = probe;
  }
  SteinitzNumber s(default_exponent.value_or(Exponent()), std::move(listed));
  if (!s.is_natural()) return {std::move(s), FactoredRatio()};
  FactoredRatio::ExponentMap finite;
  for (const auto& [p, e] : s.exceptions()) finite.emplace(p, e.value());
  return {SteinitzNumber(), FactoredRatio(std::move(finite))};
}

Value parse_item(Cursor& cur) {
  if (cur.accept('(')) {
    Value v = parse_expr(cur);
    cur.expect(')', "')'");
    return v;
  }
  if (at_term(cur)) return parse_run(cur);
  cur.fail("'(', integer or 'P'");
}

Value parse_expr(Cursor& cur) {
  Value v = parse_item(cur);
  while (true) {
    if (cur.accept('*')) {
      Value w = parse_item(cur);
      v.s = v.s * w.s;
      v.q = v.q * w.q;
    } else if (cur.accept('/')) {
      std::size_t start = cur.pos();
      Value w = parse_item(cur);
      if (w.s != SteinitzNumber()) cur.fail_at(start, "rational divisor", "cannot divide by an infinite Steinitz number");
      v.q = v.q * w.q.inverse();
    } else {
      return v;
    }
  }
}

SteinitzNumber finish(const Value& v) { return scale(v.s, v.q); }

SteinitzNumber read_steinitz(Cursor& cur) { return finish(parse_expr(cur)); }

DensityBound read_density(Cursor& cur) {
  if (cur.accept("inf")) return DensityBound::infinity();
  if (cur.accept("sqrt")) {
    cur.expect('(', "'('");
    BigInt d = cur.read_natural("radicand");
    cur.expect(')', "')'");
    return DensityBound(QuadraticNumber::surd(0, 1, d, 1));
  }
  if (cur.accept('(')) {
    bool negative = cur.accept('-');
    BigInt x = cur.read_natural("integer");
    if (negative) x = -x;
    cur.expect('+', "'+'");
    BigInt y = cur.read_natural("coefficient");
    cur.expect('*', "'*'");
    cur.expect("sqrt", "'sqrt'");
    cur.expect('(', "'('");
    BigInt d = cur.read_natural("radicand");
    cur.expect(')', "')'");
    cur.expect(')', "')'");
    cur.expect('/', "'/'");
    std::size_t at = cur.pos();
    BigInt z = cur.read_natural("denominator");
    if (d == 0 || z == 0) cur.fail_at(at, "nonzero radicand and denominator");
    return DensityBound(QuadraticNumber::surd(x, y, d, z));
  }
  BigInt u = cur.read_natural("density (u, u/v, (x+y*sqrt(d))/z or inf)");
  BigInt v = 1;
  if (cur.accept('/')) {
    std::size_t at = cur.pos();
    v = cur.read_natural("denominator");
    if (v == 0) cur.fail_at(at, "nonzero denominator");
  }
  return DensityBound::rational(u, v);
}

ParsedSet read_set(Cursor& cur) {
  if (cur.accept('[')) {
    cur.expect('1', "'1'");
    cur.expect("..", "'..'");
    std::size_t at = cur.pos();
    BigInt n = cur.read_natural("segment size");
    if (n == 0) cur.fail_at(at, "positive segment size");
    cur.expect(']', "']'");
    return {SaturatedSet::segment(n), false, std::nullopt};
  }
  if (cur.accept('N')) return {SaturatedSet::all_naturals(), false, std::nullopt};
  cur.expect('S', "'[1..n]', 'N', 'S(' or 'S+('");
  bool strict = cur.accept('+');
  cur.expect('(', "'('");
  DensityBound r = read_density(cur);
  cur.expect(',', "','");
  std::size_t at = cur.pos();
  SteinitzNumber base = read_steinitz(cur);
  cur.expect(')', "')'");
  if (!r.is_infinite() && base.is_natural()) {
    cur.fail_at(at, "infinite Steinitz number", "S(r, s) needs s infinite, got " + format(base));
  }
  ParsedSet out{SaturatedSet::finite_type(r, base, strict), false, std::nullopt};
  if (!r.is_infinite() && collapses_to_infinite_type(base)) {
    out.collapsed = true;
    // S(u/v, s) with v in Omega(s) as written still has (u/v) s on top.
    const QuadraticNumber& v = r.value();
    if (!strict && v.is_rational() && omega_contains(base, v.denominator())) {
      out.written_max = scale(base, PositiveRational(v.numerator(), v.denominator()));
    }
  }
  return out;
}

template <typename F>
auto parse_whole(std::string_view text, F read) {
  Cursor cur(text);
  auto out = read(cur);
  cur.expect_end();
  return out;
}

Json big_to_json(const BigInt& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

BigInt big_from_json(const Json& j, const std::string& field) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw std::invalid_argument("chain field '" + field + "' must be a nonnegative integer");
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("chain is missing '") + name + "'");
  return j.at(name);
}

}  // namespace

SteinitzNumber eval_steinitz(std::string_view text) { return parse_whole(text, read_steinitz); }

DensityBound parse_density(std::string_view text) { return parse_whole(text, read_density); }

ParsedSet parse_set_detailed(std::string_view text) { return parse_whole(text, read_set); }

SaturatedSet parse_set(std::string_view text) { return parse_set_detailed(text).set; }

AlgebraDescriptor parse_algebra(std::string_view text) {
  ParsedSet parsed = parse_whole(text, [](Cursor& cur) {
    bool wrapped = cur.accept("alg");
    if (wrapped) cur.expect('(', "'('");
    ParsedSet p = read_set(cur);
    if (wrapped) cur.expect(')', "')'");
    return p;
  });
  AlgebraDescriptor a = algebra_with_spectrum(parsed.set);
  a.collapsed = parsed.collapsed;
  if (parsed.written_max) a.declared_st = parsed.written_max;
  return a;
}

std::string format_algebra(const AlgebraDescriptor& a) { return "alg(" + a.spectrum.str() + ")"; }

std::string format_chain(const ChainPresentation& chain) {
  Json stages = Json::array();
  for (std::size_t i = 0; i < chain.stages.size(); ++i) {
    Json stage;
    stage["k"] = big_to_json(chain.stages[i].outer_size);
    stage["s"] = format(chain.stages[i].inner);
    if (i < chain.quotients.size()) stage["q"] = big_to_json(chain.quotients[i]);
    stages.push_back(std::move(stage));
  }
  Json out;
  out["stages"] = std::move(stages);
  if (!chain.tail) {
    out["tail"] = nullptr;
  } else {
    Json tail;
    switch (chain.tail->kind) {
      case TailRule::Kind::AttainedDensity:
        tail["rule"] = "attained";
        break;
      case TailRule::Kind::ApproachedDensity:
        tail["rule"] = "approached";
        break;
      case TailRule::Kind::Unbounded:
        tail["rule"] = "unbounded";
        break;
    }
    if (chain.tail->density) tail["r"] = chain.tail->density->str();
    out["tail"] = std::move(tail);
  }
  return out.dump();
}

ChainPresentation parse_chain(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "chain JSON", e.what());
  }
  ChainPresentation chain;
  const Json& stages = field(j, "stages");
  if (!stages.is_array()) throw std::invalid_argument("chain 'stages' must be an array");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const Json& st = stages[i];
    const Json& s = field(st, "s");
    if (!s.is_string()) throw std::invalid_argument("chain field 's' must be a string");
    chain.stages.push_back({big_from_json(field(st, "k"), "k"), eval_steinitz(s.get<std::string>())});
    if (i + 1 < stages.size()) chain.quotients.push_back(big_from_json(field(st, "q"), "q"));
  }
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const Json& tail = j.at("tail");
    std::string rule = field(tail, "rule").get<std::string>();
    if (rule == "unbounded") {
      chain.tail = TailRule::unbounded();
    } else if (rule == "attained" || rule == "approached") {
      DensityBound r = parse_density(field(tail, "r").get<std::string>());
      chain.tail = rule == "attained" ? TailRule::attained(r) : TailRule::approached(r);
    } else {
      throw std::invalid_argument("unknown tail rule '" + rule + "'");
    }
  }
  validate_chain(chain);
  return chain;
}

std::string format_certificate(const IsomorphismCertificate& certificate) {
  Json steps = Json::array();
  for (const SteinitzNumber& t : certificate.steps) steps.push_back(format(t));
  return Json{{"steps", std::move(steps)}}.dump();
}

}  // namespace steinitz
