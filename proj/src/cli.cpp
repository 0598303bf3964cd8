#include "steinitz/cli.hpp"

#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "steinitz/errors.hpp"
#include "steinitz/oracle.hpp"
#include "steinitz/text.hpp"

namespace steinitz::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Printer {
  std::ostream& out;
  bool json = false;
  std::string command;

  void emit(const Json& result) const {
    if (json) {
      Json j;
      j["command"] = command;
      j["result"] = result;
      out << j.dump() << '\n';
    } else if (result.is_null()) {
      out << "none\n";
    } else if (result.is_string()) {
      out << result.get<std::string>() << '\n';
    } else {
      out << result.dump() << '\n';
    }
  }

  int decision(bool value) const {
    emit(value);
    return value ? kTrue : kFalse;
  }

  int value(const std::string& text) const {
    emit(text);
    return kTrue;
  }
};

std::string kind_name(const SaturatedSet& s) {
  switch (s.kind()) {
    case SetKind::Segment:
      return "segment";
    case SetKind::AllNaturals:
      return "all-naturals";
    case SetKind::InfiniteType:
      return "infinite-type";
    case SetKind::FiniteType:
      return s.is_strict() ? "finite-type-strict" : "finite-type";
  }
  return {};
}

BigInt positive_integer(const std::string& text, const std::string& what) {
  std::size_t start = text.find_first_not_of(' ');
  std::size_t end = text.find_last_not_of(' ');
  std::string digits = start == std::string::npos ? "" : text.substr(start, end - start + 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw steinitz::ParseError(0, what);
  }
  BigInt n = parse_bigint(digits);
  if (n < 1) throw steinitz::ParseError(0, what, "must be positive");
  return n;
}

PositiveRational parse_ratio(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return PositiveRational(positive_integer(text, "positive integer"));
  return PositiveRational(positive_integer(text.substr(0, slash), "numerator"),
                          positive_integer(text.substr(slash + 1), "denominator"));
}

std::vector<BigInt> parse_divisors(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(positive_integer(item, "divisor list 'b1,b2,...'"));
  return out;
}

Json report_json(const oracle::Report& r) { return Json::parse(r.json()); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steinitz numbers, saturated sets and spectra of locally matrix algebras", "steinitz"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::function<int(const Printer&)> action;
  std::string command;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->parse_complete_callback([&command, parent, name] { command = parent->get_name() + " " + name; });
    return sub;
  };
  std::string a1, a2, a3;

  // num
  CLI::App* num = app.add_subcommand("num", "Steinitz number expressions")->require_subcommand(1);
  leaf(num, "eval", "Evaluate an expression such as (1/2)*P^1")->add_option("expr", a1)->required();
  num->get_subcommand("eval")->callback([&] {
    action = [&](const Printer& p) { return p.value(format(eval_steinitz(a1))); };
  });
  leaf(num, "format", "Canonical form of a literal such as 3^2*2^inf")->add_option("literal", a1)->required();
  num->get_subcommand("format")->callback([&] {
    action = [&](const Printer& p) { return p.value(format(parse_steinitz(a1))); };
  });

  // set
  CLI::App* set = app.add_subcommand("set", "Saturated sets")->require_subcommand(1);
  {
    CLI::App* c = leaf(set, "member", "Is t in S?");
    c->add_option("set", a1)->required();
    c->add_option("t", a2)->required();
    c->callback([&] {
      action = [&](const Printer& p) { return p.decision(contains(parse_set(a1), eval_steinitz(a2))); };
    });
  }
  bool extensional = false;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  {
    CLI::App* c = leaf(set, "eq", "Equality of two sets");
    c->add_option("left", a1)->required();
    c->add_option("right", a2)->required();
    c->add_flag("--extensional", extensional, "Compare sampled members instead of descriptors");
    c->add_option("--samples", samples, "Members drawn from each side")->capture_default_str();
    c->add_option("--seed", seed, "Sampler seed")->capture_default_str();
    c->callback([&] {
      action = [&](const Printer& p) {
        SaturatedSet l = parse_set(a1);
        SaturatedSet r = parse_set(a2);
        return p.decision(extensional ? equals_extensional(l, r, samples, seed) : equals_formal(l, r));
      };
    });
  }
  {
    CLI::App* c = leaf(set, "subset", "Is the left set contained in the right one?");
    c->add_option("left", a1)->required();
    c->add_option("right", a2)->required();
    c->callback([&] {
      action = [&](const Printer& p) {
        Inclusion inc = compare_inclusion(parse_set(a1), parse_set(a2));
        return p.decision(inc == Inclusion::Equal || inc == Inclusion::LeftInRight);
      };
    });
  }
  {
    CLI::App* c = leaf(set, "rsub", "r_t(b) = max { i : i t / b in S }");
    c->add_option("set", a1)->required();
    c->add_option("t", a2)->required();
    c->add_option("b", a3)->required();
    c->callback([&] {
      action = [&](const Printer& p) {
        return p.value(r_sub(parse_set(a1), eval_steinitz(a2), positive_integer(a3, "positive integer b")).str());
      };
    });
  }
  {
    CLI::App* c = leaf(set, "density", "Density of S at a member t");
    c->add_option("set", a1)->required();
    c->add_option("t", a2)->required();
    c->callback([&] {
      action = [&](const Printer& p) { return p.value(density(parse_set(a1), eval_steinitz(a2)).str()); };
    });
  }
  {
    CLI::App* c = leaf(set, "max", "Largest member, or none");
    c->add_option("set", a1)->required();
    c->callback([&] {
      action = [&](const Printer& p) {
        auto m = max_element(parse_set(a1));
        if (!m) {
          p.emit(nullptr);
          return int(kFalse);
        }
        return p.value(format(*m));
      };
    });
  }
  {
    CLI::App* c = leaf(set, "classify", "Canonical form and kind, or the inclusion verdict for two sets");
    c->add_option("set", a1)->required();
    c->add_option("other", a2);
    c->callback([&] {
      action = [&](const Printer& p) {
        SaturatedSet s = parse_set(a1);
        if (!a2.empty()) return p.value(to_string(compare_inclusion(s, parse_set(a2))));
        if (p.json) {
          p.emit(Json{{"form", s.str()}, {"kind", kind_name(s)}});
          return int(kTrue);
        }
        return p.value(s.str() + " " + kind_name(s));
      };
    });
  }

  // alg
  CLI::App* alg = app.add_subcommand("alg", "Locally matrix algebras via their spectra")->require_subcommand(1);
  {
    CLI::App* c = leaf(alg, "unital", "Is the algebra unital?");
    c->add_option("algebra", a1)->required();
    c->callback([&] { action = [&](const Printer& p) { return p.decision(is_unital(parse_algebra(a1))); }; });
  }
  {
    CLI::App* c = leaf(alg, "iso", "Are the two algebras isomorphic?");
    c->add_option("a", a1)->required();
    c->add_option("b", a2)->required();
    c->callback([&] {
      action = [&](const Printer& p) { return p.decision(isomorphic(parse_algebra(a1), parse_algebra(a2))); };
    });
  }
  {
    CLI::App* c = leaf(alg, "embed", "Does B embed in A as an approximative corner?");
    c->add_option("b", a1)->required();
    c->add_option("a", a2)->required();
    c->callback([&] {
      action = [&](const Printer& p) {
        return p.decision(embeds_as_approximative_corner(parse_algebra(a1), parse_algebra(a2)));
      };
    });
  }
  {
    CLI::App* c = leaf(alg, "spectrum", "Spectrum of an algebra or of a chain given as JSON");
    c->add_option("algebra-or-chain", a1)->required();
    c->callback([&] {
      action = [&](const Printer& p) {
        bool is_chain = a1.find_first_not_of(" \t") != std::string::npos && a1[a1.find_first_not_of(" \t")] == '{';
        SaturatedSet s = is_chain ? spectrum_of_chain(parse_chain(a1)) : parse_algebra(a1).spectrum;
        return p.value(s.str());
      };
    });
  }
  std::string divisors;
  std::size_t stages = 4;
  {
    CLI::App* c = leaf(alg, "realize", "Chain of corners with the given spectrum");
    c->add_option("algebra", a1)->required();
    c->add_option("--divisors", divisors, "Divisor chain b1,b2,... of the base");
    c->add_option("--stages", stages, "Stages of the default divisor chain")->capture_default_str();
    c->callback([&] {
      action = [&](const Printer& p) {
        std::optional<std::vector<BigInt>> chain;
        if (!divisors.empty()) chain = parse_divisors(divisors);
        ChainPresentation c = realize(parse_algebra(a1).spectrum, chain, stages);
        if (p.json) {
          p.emit(Json::parse(format_chain(c)));
          return int(kTrue);
        }
        return p.value(format_chain(c));
      };
    });
  }
  {
    CLI::App* c = leaf(alg, "minf", "M_inf(A) for unital A");
    c->add_option("algebra", a1)->required();
    c->callback([&] { action = [&](const Printer& p) { return p.value(format_algebra(m_infinity(parse_algebra(a1)))); }; });
  }
  {
    CLI::App* c = leaf(alg, "matover", "M_n(A) for unital A");
    c->add_option("algebra", a1)->required();
    c->add_option("n", a2)->required();
    c->callback([&] {
      action = [&](const Printer& p) {
        return p.value(format_algebra(matrix_over(parse_algebra(a1), positive_integer(a2, "positive integer n"))));
      };
    });
  }
  {
    CLI::App* c = leaf(alg, "corner", "eAe for an idempotent of relative rank a/b");
    c->add_option("algebra", a1)->required();
    c->add_option("rank", a2)->required();
    c->callback([&] {
      action = [&](const Printer& p) { return p.value(format_algebra(corner(parse_algebra(a1), parse_ratio(a2)))); };
    });
  }

  // check
  CLI::App* check = app.add_subcommand("check", "Brute-force verification suites")->require_subcommand(1);
  std::uint64_t check_seed = 1;
  std::uint64_t bound = 210;
  for (const char* name : {"all", "saturation", "inequalities", "roundtrip"}) {
    CLI::App* c = leaf(check, name, std::string("Run the ") + name + " suite");
    c->add_option("--seed", check_seed, "Sampler seed")->capture_default_str();
    c->add_option("--bound", bound, "Divisor ceiling for r_s(b) checks")->capture_default_str();
    std::string suite = name;
    c->callback([&, suite] {
      action = [&, suite](const Printer& p) {
        oracle::Report r;
        if (suite == "all" || suite == "saturation") r.append(oracle::saturation_suite(check_seed, 1000));
        if (suite == "all" || suite == "inequalities") r.append(oracle::inequality_suite(bound));
        if (suite == "all" || suite == "roundtrip") r.append(oracle::roundtrip_suite(check_seed));
        if (p.json) {
          p.emit(report_json(r));
        } else {
          p.out << r.text();
        }
        return r.passed() ? int(kTrue) : int(kCheckFailure);
      };
    });
  }

  std::vector<std::string> argv_store{"steinitz"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  if (!action) return kInputError;

  Printer printer{out, json, command};
  try {
    return action(printer);
  } catch (const std::invalid_argument& e) {  // includes ParseError
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace steinitz::cli
