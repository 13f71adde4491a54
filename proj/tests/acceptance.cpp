// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "inrl/axioms.hpp"
#include "inrl/congruence.hpp"
#include "inrl/decomposition.hpp"
#include "inrl/derived.hpp"
#include "inrl/errors.hpp"
#include "inrl/generators.hpp"
#include "inrl/gluing.hpp"
#include "inrl/io.hpp"
#include "inrl/isomorphism.hpp"
#include "inrl/partition.hpp"
#include "inrl/properties.hpp"
#include "oracles.hpp"

using namespace inrl;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Collects failures; the first few are kept for the summary line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + notes_.str()};
  }

 private:
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::set<std::string> names_of(const FiniteInRL& alg, const std::vector<Elem>& xs) {
  std::set<std::string> out;
  for (Elem x : xs) out.insert(alg.name(x));
  return out;
}

std::vector<FiniteInRL> corpus_members() { return fixtures::corpus6().algebras; }

FiniteInRL with_cell(const FiniteInRL& alg, int table, std::size_t cell, Elem value) {
  std::vector<Elem> join(alg.join_table().begin(), alg.join_table().end());
  std::vector<Elem> fusion(alg.fusion_table().begin(), alg.fusion_table().end());
  std::vector<Elem> neg(alg.neg_table().begin(), alg.neg_table().end());
  (table == 0 ? join : table == 1 ? fusion : neg)[cell] = value;
  return FiniteInRL({alg.names().begin(), alg.names().end()}, join, fusion, neg, alg.one());
}

Outcome fixture_validation() {
  const auto start = Clock::now();
  Tally t;
  const auto a1 = fixtures::a1();
  t.expect(validate(a1).ok(), "A_1 fails an axiom");
  const std::size_t n = a1.size();
  std::size_t mutants = 0;
  for (int table = 0; table < 3; ++table) {
    const std::size_t cells = table == 2 ? n : n * n;
    const auto original = table == 0 ? a1.join_table() : table == 1 ? a1.fusion_table() : a1.neg_table();
    for (std::size_t cell = 0; cell < cells; ++cell)
      for (Elem v = 0; v < n; ++v) {
        if (v == original[cell]) continue;
        ++mutants;
        t.expect(!validate(with_cell(a1, table, cell, v)).ok(), "undetected mutation");
      }
  }
  const double s = seconds_since(start);
  t.expect(s < 1.0, "took " + std::to_string(s) + " s");
  return t.done(std::to_string(mutants) + " mutants detected in " + std::to_string(s) + " s");
}

Outcome partition_reproduction() {
  Tally t;
  const auto a1 = fixtures::a1();
  const auto p = partition(a1);
  std::set<std::set<std::string>> blocks;
  std::set<std::string> bottoms;
  for (const auto& b : p.blocks) {
    blocks.insert(names_of(a1, b.elements));
    bottoms.insert(a1.name(b.bottom));
  }
  const std::set<std::set<std::string>> expected{
      {"bot", "top", "a", "-a"}, {"b", "-b", "c", "-c"}, {"0", "1"}};
  t.expect(blocks == expected, "blocks differ");
  t.expect(bottoms == std::set<std::string>{"bot", "-c", "0"}, "bottoms differ");
  t.expect(names_of(a1, p.skeleton) == bottoms, "skeleton differs");
  return t.done("3 blocks, bottoms bot, -c, 0");
}

Outcome negative_witnesses() {
  Tally t;
  const auto a1 = fixtures::a1();
  t.expect(!is_lattice_distributive(a1).holds, "A_1 reported distributive");
  const auto sl = is_semilinear(a1);
  t.expect(!sl.holds && sl.witness && names_of(a1, *sl.witness) == std::set<std::string>{"a", "-b"} &&
               a1.name((*sl.witness)[0]) == "a",
           "semilinearity witness is not (a, -b)");
  const auto p = partition(a1);
  const Elem top = a1.at("top"), a = a1.at("a"), nc = a1.at("-c");
  t.expect(p.same_block(top, a), "top and a in different blocks");
  t.expect(!p.same_block(a1.join(nc, top), a1.join(nc, a)), "-c v top and -c v a share a block");
  const auto compat = block_equivalence_compatibility(a1, p);
  t.expect(!compat.passed("compatible-with-join"), "join compatibility not refuted");
  t.expect(compat.passed("compatible-with-fusion") && compat.passed("compatible-with-neg"),
           "fusion or negation compatibility refuted");
  return t.done("not distributive; semilinear fails at (a, -b); top ~ a but -c v top !~ -c v a");
}

Outcome gluing_golden() {
  Tally t;
  const auto sched = an_schedule(1);
  const auto inner = glue(resolve(block_algebra(0), block_algebra(1), sched.steps[0])).result;
  const auto a1 = glue(resolve(inner, boolean_algebra(1), sched.steps[1])).result;
  t.expect(isomorphic(a1, fixtures::a1()), "B_0 + B_1 + 2 is not A_1");
  const auto spec = fixtures::five_block_spec();
  t.expect(validate_gluing(spec).ok(), "five-block spec invalid");
  const auto five = glue(spec);
  t.expect(five.result.size() == 24, "five-block size " + std::to_string(five.result.size()));
  t.expect(validate(five.result).ok(), "five-block result fails an axiom");
  t.expect(verify_glued(spec, five).ok(), "five-block construction facts fail");
  return t.done("A_1 reproduced; the five-block spec glues to 24 valid elements");
}

Outcome round_trip() {
  const auto start = Clock::now();
  Tally t;
  auto algs = corpus_members();
  for (std::size_t n = 0; n <= 5; ++n) algs.push_back(build_an(n));
  for (const auto& alg : algs) {
    const auto tree = decompose(alg);
    for (const auto& l : leaves(tree)) t.expect(is_boolean(l), "non-Boolean leaf");
    t.expect(isomorphic(reassemble(tree), alg), "round trip fails at size " + std::to_string(alg.size()));
  }
  const double s = seconds_since(start);
  t.expect(s < 120.0, "took " + std::to_string(s) + " s");
  return t.done(std::to_string(algs.size()) + " algebras in " + std::to_string(s) + " s");
}

Outcome congruence_theorem() {
  Tally t;
  std::size_t naive_checked = 0;
  for (const auto& alg : corpus_members()) {
    const auto lat = congruence_lattice(alg);
    t.expect(lat.size() == negative_cone(alg).size(), "count differs from |A-|");
    t.expect(verify_anti_isomorphism(alg, lat).ok(), "not anti-isomorphic");
    if (alg.size() > 5) continue;
    ++naive_checked;
    std::set<std::vector<std::size_t>> ours;
    for (const auto& c : lat.congruences) ours.insert(oracle::normalize(c.class_of));
    const auto naive = oracle::congruences(alg);
    t.expect(ours == std::set<std::vector<std::size_t>>(naive.begin(), naive.end()),
             "naive enumerator disagrees at size " + std::to_string(alg.size()));
  }
  return t.done(std::to_string(corpus_members().size()) + " algebras; " + std::to_string(naive_checked) +
                " cross-checked against all partitions");
}

Outcome distributive_semilattice() {
  Tally t;
  for (const auto& alg : corpus_members())
    t.expect(is_distributive_semilattice(alg).holds, "fails at size " + std::to_string(alg.size()));
  for (std::size_t n = 0; n <= 6; ++n)
    t.expect(is_distributive_semilattice(build_an(n)).holds, "fails for A_" + std::to_string(n));
  return t.done("corpus and A_0..A_6");
}

Outcome non_local_finiteness() {
  Tally t;
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto an = build_an(n);
    const std::string tag = "A_" + std::to_string(n);
    t.expect(an.size() == 4 * n + 6, tag + " has " + std::to_string(an.size()) + " elements");
    t.expect(validate(an).ok(), tag + " fails an axiom");
    const std::vector<Elem> seed{an.at("x_0")};
    t.expect(subalgebra_generated(an, seed).size() == an.size(), tag + " not generated by x_0");
  }
  return t.done("|A_n| = 4n + 6 and x_0 generates, n <= 6");
}

Outcome lemma_suites() {
  Tally t;
  std::size_t clauses = 0;
  auto absorb = [&](const Report& r, const std::string& where) {
    for (const auto& c : r.checks()) {
      ++clauses;
      t.expect(c.passed, where + ": " + c.name);
    }
  };
  for (const auto& alg : corpus_members()) {
    const std::string where = "size " + std::to_string(alg.size());
    absorb(verify_elementary_properties(alg), where);
    absorb(verify_partition(alg, partition(alg)), where);
    const auto compat = block_equivalence_compatibility(alg, partition(alg));
    t.expect(compat.passed("compatible-with-fusion") && compat.passed("compatible-with-neg"),
             where + ": block equivalence");
    absorb(verify_congruence_lemmas(alg), where);
    for (Elem a : negative_cone(alg)) absorb(verify_cone_lemmas(alg, a), where);
    for (Elem c : find_atoms(alg)) absorb(verify_split(alg, split(alg, c)), where);
  }
  return t.done(std::to_string(clauses) + " clause evaluations, none failing");
}

Outcome oracle_agreement() {
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n)
    t.expect(oracle::enumerate(n).size() == fixtures::corpus6().of_size(n).size(),
             "counts differ at size " + std::to_string(n));
  std::vector<std::string> texts{read_text(fixtures::path("a1.rlat")), read_text(fixtures::path("five_block.rlat"))};
  for (const auto& alg : corpus_members()) texts.push_back(emit_algebra(alg));
  for (const auto& text : texts) t.expect(emit_algebra(parse_algebra(text)) == text, "emit is not byte-stable");
  return t.done("counts agree at sizes 1..4; " + std::to_string(texts.size()) + " files byte-stable");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixture validation", fixture_validation},
      {"partition reproduction", partition_reproduction},
      {"negative witnesses", negative_witnesses},
      {"gluing golden test", gluing_golden},
      {"decompose/reassemble round trip", round_trip},
      {"congruence theorem", congruence_theorem},
      {"distributive monoidal semilattice", distributive_semilattice},
      {"non-local-finiteness witness", non_local_finiteness},
      {"lemma suites", lemma_suites},
      {"oracle agreement", oracle_agreement},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed;
}
