// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <chrono>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "golden_replay.hpp"
#include "steinitz/cli.hpp"
#include "steinitz/oracle.hpp"
#include "steinitz/text.hpp"

using namespace steinitz;
using namespace steinitz::oracle;

namespace {

constexpr std::uint64_t kBound = 210;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<CorpusEntry> corpus() { return standard_corpus(); }

// Brute tables shared by criteria 1-3, filled during criterion 1.
std::map<std::string, std::unique_ptr<BruteTable>> tables;

// A member t with 210 in Omega(t) where possible, so convergence can be read
// off at b = 210. S+(1, s) excludes s itself; s/11 is used there.
SteinitzNumber test_point(const SaturatedSet& set) {
  SteinitzNumber t = reference_member(set);
  if (set.is_natural_type() || omega_contains(t, kBound)) return t;
  for (Prime p = 11; p < 100; p = next_prime(p)) {
    if (!omega_contains(set.base(), p)) continue;
    SteinitzNumber u = divide_by(set.base(), p);
    if (contains(set, u) && omega_contains(u, kBound)) return u;
  }
  return t;
}

BruteTable& table_for(const CorpusEntry& e) {
  auto& slot = tables[e.name];
  if (!slot) slot = std::make_unique<BruteTable>(e.set, test_point(e.set));
  return *slot;
}

Outcome rsub_matches_brute() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::size_t compared = 0;
  std::vector<CorpusEntry> sets = corpus();
  if (sets.size() < 12) o.fail("corpus has only " + std::to_string(sets.size()) + " sets");
  for (const CorpusEntry& e : sets) {
    BruteTable& table = table_for(e);
    for (std::uint64_t b : enumerate_omega(table.point(), kBound)) {
      ExtendedNatural closed = r_sub(e.set, table.point(), b);
      const BruteMax& brute = table.at(b);
      bool agree = closed.is_infinite() ? brute.above_bound : (!brute.above_bound && closed.value() == brute.value);
      if (!agree) o.fail(e.name + " b=" + std::to_string(b) + " closed=" + closed.str());
      ++compared;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << sets.size() << " sets, " << compared << " (set, b) pairs, " << secs << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome inequality_ladder() {
  Outcome o;
  std::size_t lines = 0;
  for (const CorpusEntry& e : corpus()) {
    if (e.set.kind() == SetKind::InfiniteType || e.set.kind() == SetKind::AllNaturals) continue;
    BruteTable& table = table_for(e);
    Report r = check_inequality_suite(table, e.name, divisor_pairs(table.point(), kBound));
    for (const CheckLine& l : r.lines) {
      ++lines;
      if (!l.pass) o.fail(l.check + " " + l.witness);
    }
  }
  if (o.pass) o.detail = std::to_string(lines) + " ladder checks over all divisor pairs <= 210";
  return o;
}

Outcome density_sandwich() {
  Outcome o;
  std::size_t sets = 0;
  for (const CorpusEntry& e : corpus()) {
    if (e.set.kind() != SetKind::FiniteType) continue;
    BruteTable& table = table_for(e);
    std::vector<std::uint64_t> bs = enumerate_omega(table.point(), kBound);
    if (bs.back() != kBound) o.fail(e.name + " has no b = 210 to test convergence");
    Report r = check_density_sandwich(table, e.name, *density_at(e.set, table.point()), bs);
    for (const CheckLine& l : r.lines) {
      if (!l.pass) o.fail(l.check + " " + l.witness);
    }
    ++sets;
  }
  if (o.pass) o.detail = std::to_string(sets) + " finite-type sets, convergence at b=210";
  return o;
}

Outcome saturation_axioms() {
  Outcome o;
  for (const CorpusEntry& e : corpus()) {
    AxiomReport r = check_saturation_axioms(e.set, 1000, 2024);
    if (!r.passed) o.fail(e.name + " axiom " + std::to_string(r.failed_axiom) + " " + r.witness);
  }
  SteinitzNumber one;
  AxiomReport broken = check_saturation_axioms(literal_model("{1, 3}", {one, SteinitzNumber::from_natural(3)}), 1000, 2024);
  if (broken.passed) o.fail("broken literal {1, 3} passed");
  if (broken.witness.empty()) o.fail("broken literal failed without a witness");
  if (o.pass) o.detail = "1000 samples per set; {1, 3} fails axiom " + std::to_string(broken.failed_axiom) + " at " + broken.witness;
  return o;
}

Outcome classification() {
  Outcome o;
  std::vector<CorpusEntry> sets = corpus();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    SetModel mi = model_of(sets[i].set);
    for (std::size_t j = 0; j < sets.size(); ++j) {
      SetModel mj = model_of(sets[j].set);
      Inclusion verdict = compare_inclusion(sets[i].set, sets[j].set);
      bool left_in = verdict == Inclusion::Equal || verdict == Inclusion::LeftInRight;
      bool right_in = verdict == Inclusion::Equal || verdict == Inclusion::RightInLeft;
      std::mt19937_64 rng(1000 * i + j);
      for (int k = 0; k < 1000; ++k) {
        SteinitzNumber a = mi.draw(rng);
        SteinitzNumber b = mj.draw(rng);
        bool a_in = mj.contains(a);
        bool b_in = mi.contains(b);
        std::string where = sets[i].name + " vs " + sets[j].name + " (" + to_string(verdict) + ") ";
        if (verdict == Inclusion::Disjoint && (a_in || b_in)) o.fail(where + "common member");
        if (left_in && !a_in) o.fail(where + format(a) + " only on the left");
        if (right_in && !b_in) o.fail(where + format(b) + " only on the right");
      }
      ++pairs;
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " ordered pairs, 1000 draws each";
  return o;
}

Outcome realization() {
  Outcome o;
  std::size_t stages = 0;
  for (const CorpusEntry& e : corpus()) {
    ChainPresentation c = realize(e.set);
    for (std::size_t i = 0; i + 1 < c.stages.size(); ++i) {
      if (c.stages[i].outer_size * c.quotients[i] > c.stages[i + 1].outer_size) o.fail(e.name + " corner inequality");
    }
    stages += c.stages.size();
    SaturatedSet back = spectrum_of_chain(c);
    if (!equals_formal(back, e.set)) o.fail(e.name + " came back as " + back.str());
    SaturatedSet again = spectrum_of_chain(parse_chain(format_chain(c)));
    if (!equals_formal(again, e.set)) o.fail(e.name + " lost in chain text");
  }
  if (o.pass) o.detail = std::to_string(stages) + " realized stages";
  return o;
}

std::vector<AlgebraDescriptor> descriptors() {
  std::vector<AlgebraDescriptor> out;
  for (const CorpusEntry& e : corpus()) out.push_back(algebra_with_spectrum(e.set));
  for (const char* st : {"P^1", "2^3*P^1", "2^2*3", "7"}) out.push_back(spec_unital(eval_steinitz(st)));
  out.push_back(m_infinity(spec_matrix(1)));
  out.push_back(m_infinity(spec_unital(eval_steinitz("P^1"))));
  out.push_back(corner(spec_unital(eval_steinitz("P^1")), PositiveRational(1, 2)));
  out.push_back(matrix_over(spec_unital(eval_steinitz("P^1")), 3));
  return out;
}

Outcome decision_coherence() {
  Outcome o;
  std::vector<AlgebraDescriptor> ds = descriptors();
  std::size_t iso = 0;
  for (const auto& a : ds) {
    for (const auto& b : ds) {
      bool i = isomorphic(a, b);
      bool mutual = embeds_as_approximative_corner(a, b) && embeds_as_approximative_corner(b, a);
      if (i != mutual) o.fail(format_algebra(a) + " vs " + format_algebra(b));
      iso += i;
    }
  }
  if (o.pass) o.detail = std::to_string(ds.size() * ds.size()) + " pairs, " + std::to_string(iso) + " isomorphic";
  return o;
}

Outcome unitality() {
  Outcome o;
  std::size_t unital = 0;
  for (const AlgebraDescriptor& a : descriptors()) {
    bool has_max = max_element(a.spectrum).has_value();
    if (is_unital(a) != has_max) o.fail(format_algebra(a));
    if (!has_max) continue;
    ++unital;
    for (int n = 1; n <= 20; ++n) {
      AlgebraDescriptor back = corner(matrix_over(a, n), PositiveRational(1, n));
      if (!isomorphic(back, a)) o.fail(format_algebra(a) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = std::to_string(unital) + " unital descriptors, n = 1..20";
  return o;
}

Outcome collapse() {
  Outcome o;
  std::size_t probes = 0;
  for (const char* base : {"2^inf", "2^inf*3", "3^inf*P^1"}) {
    for (auto r : {QuadraticNumber::rational(1), QuadraticNumber::rational(3, 2), QuadraticNumber::surd(0, 1, 2, 1)}) {
      Report rep = collapse_probe(r, eval_steinitz(base), 100, 5);
      for (const CheckLine& l : rep.lines) {
        if (!l.pass) o.fail(l.check + " " + l.witness);
      }
      ++probes;
    }
  }
  if (o.pass) o.detail = std::to_string(probes) + " raw S(r, s) agree extensionally with S(inf, s), formally distinct";
  return o;
}

Outcome finite_chains() {
  Outcome o;
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    FiniteMatrixChain c;
    std::uniform_int_distribution<std::uint64_t> first(1, 12), stages(2, 8), mult(1, 4), pad(0, 3);
    c.sizes.push_back(first(rng));
    std::size_t target = stages(rng);
    while (c.sizes.size() < target) {
      std::uint64_t m = mult(rng), z = pad(rng);
      std::uint64_t next = m * c.sizes.back() + z;
      if (next > 2000) break;
      c.multiplicities.push_back(m);
      c.paddings.push_back(z);
      c.sizes.push_back(next);
    }
    std::vector<std::pair<std::size_t, std::uint64_t>> seeds;
    for (std::size_t i = 0; i < c.sizes.size(); ++i) {
      std::uniform_int_distribution<std::uint64_t> rank(1, c.sizes[i]);
      seeds.emplace_back(i, rank(rng));
    }
    for (const RankRow& row : simulate_finite_chain(c, seeds)) {
      if (row.simulated != row.closed_form) o.fail("chain " + std::to_string(trial) + " stage " + std::to_string(row.stage));
    }
  }
  for (std::uint64_t n = 1; n <= 50; ++n) {
    std::vector<std::uint64_t> ranks = matrix_spectrum_by_ranks(n);
    std::vector<std::uint64_t> expected(n);
    for (std::uint64_t k = 0; k < n; ++k) expected[k] = k + 1;
    if (ranks != expected) o.fail("Spec(M_" + std::to_string(n) + ")");
    if (!equals_formal(spec_matrix(n).spectrum, SaturatedSet::segment(n))) o.fail("specMatrix " + std::to_string(n));
  }
  if (o.pass) o.detail = "100 random chains, n = 1..50";
  return o;
}

Outcome cli_golden() {
  Outcome o;
  std::vector<golden::Case> cases = golden::load_golden(std::string(GOLDEN_DIR) + "/cli.txt");
  std::map<int, std::size_t> codes;
  for (const golden::Case& c : cases) {
    std::ostringstream out, err;
    int code = cli::run(c.args, out, err);
    if (out.str() != c.out || err.str() != c.err || code != c.exit_code) o.fail("`" + c.line + "`");
    ++codes[code];
  }
  // every exit code except check failure has to be exercised by the transcript
  for (int code : {0, 1, 2}) {
    if (codes[code] == 0) o.fail("no case exits " + std::to_string(code));
  }
  std::ostringstream out, err;
  if (cli::run({"check", "roundtrip"}, out, err) != 0) o.fail("check roundtrip did not exit 0");
  if (o.pass) o.detail = std::to_string(cases.size()) + " byte-exact transcripts";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"r_sub closed form equals brute force", rsub_matches_brute},
      {"inequality ladder", inequality_ladder},
      {"density sandwich and convergence", density_sandwich},
      {"saturation axioms", saturation_axioms},
      {"classification trichotomy", classification},
      {"realization roundtrip", realization},
      {"isomorphism iff mutual embedding", decision_coherence},
      {"unitality", unitality},
      {"collapse evidence", collapse},
      {"finite-chain oracle", finite_chains},
      {"CLI golden suite", cli_golden},
  };
  int failures = 0;
  int index = 1;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index++ << " " << c.name << ": " << o.detail << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
