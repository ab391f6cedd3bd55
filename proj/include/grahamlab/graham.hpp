#pragma once

// Orchestration: Graham sequences of trees, equivalence-class censuses, and
// the PTE caterpillar families that realize a controlled split.
//
// build_family turns every member of a W family into a caterpillar (parts
// as leg counts, spacing 2(k+1)) and verifies the advertised behavior: all
// members share |L^j| for j <= k, then separate at level k+1 into an exact
// arithmetic progression whose step is the leading coefficient of f_{k+1}
// times the first power-sum defect at level k+1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grahamlab/caterpillar.hpp"
#include "grahamlab/graph.hpp"
#include "grahamlab/pte.hpp"
#include "grahamlab/treegen.hpp"
#include "grahamlab/util.hpp"
#include "grahamlab/weights.hpp"

namespace grahamlab {

enum class SeqMethod { Auto, Direct, Shadow };

inline SeqMethod parse_seq_method(const std::string& s) {
  if (s == "auto") return SeqMethod::Auto;
  if (s == "direct") return SeqMethod::Direct;
  if (s == "shadow") return SeqMethod::Shadow;
  throw std::invalid_argument("unknown method '" + s + "' (want auto|direct|shadow)");
}

inline GrahamSequence shadow_sizes(const Graph& tree, int depth, const WtTable& table) {
  GrahamSequence seq;
  seq.terms.reserve(depth + 1);
  for (int j = 0; j <= depth; ++j) seq.terms.push_back(lk_size_via_shadows(tree, j, table));
  return seq;
}

// Direct iteration while it fits under the ceilings, shadow decomposition
// once it does not.  The shadow route needs a weight table covering the
// depth; one is built on demand when none is supplied.
inline GrahamSequence graham_sequence(const Graph& tree, int depth,
                                      SeqMethod method = SeqMethod::Auto,
                                      const WtTable* table = nullptr,
                                      const ResourceLimits& limits = {}) {
  if (!is_tree(tree)) throw std::invalid_argument("graham_sequence: input is not a tree");
  if (depth < 0) throw std::invalid_argument("graham_sequence: negative depth");
  auto with_table = [&](auto&& fn) {
    if (table && table->covers(depth, tree.vertex_count)) return fn(*table);
    WtTable own = build_wt_table(depth, depth + 1, limits);
    return fn(own);
  };
  switch (method) {
    case SeqMethod::Direct:
      return iterated_sizes(tree, depth, limits);
    case SeqMethod::Shadow:
      return with_table([&](const WtTable& t) { return shadow_sizes(tree, depth, t); });
    case SeqMethod::Auto:
    default:
      try {
        GrahamSequence direct = iterated_sizes(tree, depth, limits);
#ifndef NDEBUG
        if (depth <= 3 && tree.vertex_count <= 10) {
          GrahamSequence check =
              with_table([&](const WtTable& t) { return shadow_sizes(tree, depth, t); });
          if (!(check == direct)) throw std::logic_error("graham_sequence: methods disagree");
        }
#endif
        return direct;
      } catch (const resource_limit_error&) {
        return with_table([&](const WtTable& t) { return shadow_sizes(tree, depth, t); });
      }
  }
}

struct ClassReport {
  int n = 0;
  int depth = 0;
  std::size_t tree_count = 0;
  std::size_t class_count = 0;
  // Trees sharing a sequence, one group per collision, codes sorted.
  std::vector<std::vector<TreeCode>> collisions;
};

inline ClassReport graham_classes(int n, int depth, int parallelism = 1,
                                  const ResourceLimits& limits = {}) {
  ClassReport rep;
  rep.n = n;
  rep.depth = depth;
  std::vector<Graph> trees = enumerate_trees(n);
  rep.tree_count = trees.size();
  std::vector<GrahamSequence> seqs = parallel_map(trees.size(), parallelism, [&](std::size_t i) {
    return graham_sequence(trees[i], depth, SeqMethod::Auto, nullptr, limits);
  });
  std::map<std::vector<Int>, std::vector<TreeCode>> groups;
  for (std::size_t i = 0; i < trees.size(); ++i)
    groups[seqs[i].terms].push_back(canonical_code(trees[i]));
  rep.class_count = groups.size();
  for (auto& [terms, codes] : groups)
    if (codes.size() > 1) {
      std::sort(codes.begin(), codes.end());
      rep.collisions.push_back(codes);
    }
  std::sort(rep.collisions.begin(), rep.collisions.end());
  return rep;
}

inline nlohmann::ordered_json class_report_to_json(const ClassReport& rep) {
  nlohmann::ordered_json collisions = nlohmann::ordered_json::array();
  for (const auto& group : rep.collisions) {
    nlohmann::ordered_json g = nlohmann::ordered_json::array();
    for (const auto& code : group) g.push_back(code.hex());
    collisions.push_back(g);
  }
  return {{"n", rep.n},
          {"depth", rep.depth},
          {"tree_count", rep.tree_count},
          {"class_count", rep.class_count},
          {"collisions", collisions}};
}

struct FamilySpec {
  int k = 2;
  int sigma = 1;
  int spacing = 0;  // 0 means the default 2(k+1)
  int pad = 0;
  std::optional<Int> target_vertex_count;  // pad is raised to reach this
};

struct FamilyMember {
  int r = 0, s = 0, t = 0;
  CaterpillarSpec cat;
  Int vertex_count;
  GrahamSequence seq;
};

struct FamilyReport {
  int k = 0;
  int sigma = 0;
  int spacing = 0;
  int pad = 0;
  std::vector<FamilyMember> members;
  bool equal_vertex_count = false;
  bool prefix_agreement = false;   // |L^j| equal across members for j <= k
  bool split_distinct = false;     // |L^{k+1}| pairwise distinct
  bool arithmetic_progression = false;
  Int observed_step;               // consecutive difference of |L^{k+1}|
  Int expected_step;               // -lead(f_{k+1}) * defect(k+1)
  bool verified = false;
  std::string failure;
};

inline FamilyReport build_family(const FamilySpec& spec, int parallelism = 1,
                                 const ResourceLimits& limits = {}) {
  if (spec.k < 2 || spec.k > 3)
    throw std::invalid_argument("build_family: k must be 2 or 3 at desk scale");
  if (spec.sigma < 0) throw std::invalid_argument("build_family: negative sigma");
  if (spec.sigma > 3) throw std::invalid_argument("build_family: sigma must be <= 3 at desk scale");
  FamilyReport rep;
  rep.k = spec.k;
  rep.sigma = spec.sigma;
  rep.spacing = spec.spacing == 0 ? 2 * (spec.k + 1) : spec.spacing;
  if (rep.spacing < 2 * (spec.k + 1))
    throw std::invalid_argument("build_family: spacing below 2(k+1)");
  rep.pad = spec.pad;

  auto fam = w_family(spec.k, spec.sigma);
  std::vector<CaterpillarSpec> cats;
  cats.reserve(fam.size());
  for (const auto& m : fam) {
    CaterpillarSpec cat;
    cat.m = rep.spacing;
    cat.pad = rep.pad;
    for (const auto& part : m.comp.parts) cat.parts.push_back(static_cast<int>(part));
    cats.push_back(std::move(cat));
  }
  if (spec.target_vertex_count) {
    Int base = cats.front().vertex_count();
    Int extra = *spec.target_vertex_count - base;
    if (extra < 0)
      throw std::invalid_argument("build_family: target vertex count below the base size " +
                                  base.str());
    rep.pad = spec.pad + static_cast<int>(extra);
    for (auto& cat : cats) cat.pad = rep.pad;
  }

  int depth = spec.k + 1;
  auto seqs = parallel_map(cats.size(), parallelism, [&](std::size_t i) {
    return graham_sequence(caterpillar_graph(cats[i]), depth, SeqMethod::Auto, nullptr, limits);
  });
  for (std::size_t i = 0; i < fam.size(); ++i)
    rep.members.push_back(FamilyMember{fam[i].r, fam[i].s, fam[i].t, cats[i],
                                       cats[i].vertex_count(), seqs[i]});

  auto fail = [&](const std::string& why) {
    rep.verified = false;
    rep.failure = why;
    return rep;
  };

  rep.equal_vertex_count = true;
  for (const auto& m : rep.members)
    rep.equal_vertex_count = rep.equal_vertex_count && m.vertex_count == rep.members[0].vertex_count;
  if (!rep.equal_vertex_count) return fail("vertex counts differ across members");

  rep.prefix_agreement = true;
  for (int j = 0; j <= spec.k; ++j)
    for (const auto& m : rep.members)
      rep.prefix_agreement =
          rep.prefix_agreement && m.seq.terms[j] == rep.members[0].seq.terms[j];
  if (!rep.prefix_agreement) return fail("sequences diverge at or below level k");

  std::vector<Int> split;
  for (const auto& m : rep.members) split.push_back(m.seq.terms[depth]);
  std::vector<Int> sorted_split = split;
  std::sort(sorted_split.begin(), sorted_split.end());
  rep.split_distinct =
      std::adjacent_find(sorted_split.begin(), sorted_split.end()) == sorted_split.end();
  if (!rep.split_distinct) return fail("level k+1 values are not pairwise distinct");

  // Expected step: each chain move swaps a T_{k+1}+c block for T_bar_{k+1}+c,
  // changing sum f_{k+1} by minus the constant difference polynomial.
  Polynomial f_next = f_k_poly(spec.k + 1, direct_star_sizer(limits));
  Rat step_rat = -f_next.leading() * Rat(pte_defect_formula(spec.k + 1));
  if (boost::multiprecision::denominator(step_rat) != 1)
    return fail("predicted step is not an integer");
  rep.expected_step = boost::multiprecision::numerator(step_rat);
  rep.arithmetic_progression = true;  // vacuously for single-member families
  for (std::size_t i = 0; i + 1 < split.size(); ++i)
    rep.arithmetic_progression =
        rep.arithmetic_progression && split[i + 1] - split[i] == rep.expected_step;
  if (split.size() >= 2) rep.observed_step = split[1] - split[0];
  if (!rep.arithmetic_progression)
    return fail("level k+1 values do not follow the predicted arithmetic progression");

  rep.verified = true;
  return rep;
}

inline nlohmann::ordered_json family_report_to_json(const FamilyReport& rep) {
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (const auto& m : rep.members) {
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (int p : m.cat.parts) parts.push_back(p);
    nlohmann::ordered_json seq = nlohmann::ordered_json::array();
    for (const auto& term : m.seq.terms) seq.push_back(term.str());
    members.push_back({{"r", m.r},
                       {"s", m.s},
                       {"t", m.t},
                       {"parts", parts},
                       {"vertex_count", m.vertex_count.str()},
                       {"sequence", seq}});
  }
  std::size_t slots = rep.members.empty() ? 0 : rep.members.front().cat.parts.size();
  return {{"k", rep.k},
          {"sigma", rep.sigma},
          {"spacing", rep.spacing},
          {"pad", rep.pad},
          {"formula_constant", cat_formula_constant(rep.k, slots, rep.pad).str()},
          {"members", members},
          {"checks",
           {{"equal_vertex_count", rep.equal_vertex_count},
            {"prefix_agreement", rep.prefix_agreement},
            {"split_distinct", rep.split_distinct},
            {"arithmetic_progression", rep.arithmetic_progression},
            {"expected_step", rep.expected_step.str()},
            {"observed_step", rep.observed_step.str()}}},
          {"verified", rep.verified}};
}

}  // namespace grahamlab
