#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "bimoore/canonical.hpp"
#include "bimoore/constructions.hpp"
#include "bimoore/enumerate.hpp"
#include "bimoore/metrics.hpp"

using namespace bimoore;

namespace {

std::vector<BipartiteGraph> collect(const EnumSpec& spec, EnumOptions opts = {}) {
  std::vector<BipartiteGraph> out;
  generate(spec, opts, [&](const BipartiteGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

// Oracle: walk every 0/1 matrix with the requested row sums, keep those with
// the right column sums that are connected, and bucket them by canonical key.
std::vector<std::vector<std::uint64_t>> brute_force_classes(const EnumSpec& spec) {
  std::vector<std::uint64_t> row_choices;
  for (std::uint64_t m = 0; m < (1ull << spec.n2); ++m)
    if (__builtin_popcountll(m) == spec.r) row_choices.push_back(m);

  std::map<std::vector<std::uint64_t>, int> buckets;
  std::vector<std::size_t> pick(spec.n1, 0);
  while (true) {
    std::vector<int> colsum(spec.n2, 0);
    for (int i = 0; i < spec.n1; ++i)
      for (int j = 0; j < spec.n2; ++j)
        if (row_choices[pick[i]] >> j & 1) ++colsum[j];
    if (std::all_of(colsum.begin(), colsum.end(),
                    [&](int c) { return c == spec.s; })) {
      BipartiteGraph g(spec.n1, spec.n2);
      for (int i = 0; i < spec.n1; ++i)
        for (int j = 0; j < spec.n2; ++j)
          if (row_choices[pick[i]] >> j & 1) g.set_edge(i, j);
      if (is_connected(g)) ++buckets[canonical_key(g)];
    }
    int i = spec.n1 - 1;
    while (i >= 0 && pick[i] + 1 == row_choices.size()) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  std::vector<std::vector<std::uint64_t>> keys;
  for (const auto& [key, count] : buckets) keys.push_back(key);
  return keys;
}

std::vector<std::vector<std::uint64_t>> keys_of(
    const std::vector<BipartiteGraph>& graphs) {
  std::vector<std::vector<std::uint64_t>> keys;
  for (const auto& g : graphs) keys.push_back(canonical_key(g));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

TEST_CASE("generation matches brute force on small specs") {
  struct Case {
    int n1, n2, r, s;
  };
  for (auto c : {Case{2, 2, 2, 2}, Case{3, 3, 2, 2}, Case{4, 4, 2, 2},
                 Case{3, 4, 4, 3}, Case{4, 3, 3, 4}, Case{2, 3, 3, 2},
                 Case{4, 4, 3, 3}, Case{4, 4, 1, 1}, Case{2, 4, 2, 1},
                 Case{4, 2, 1, 2}, Case{3, 6, 2, 1}, Case{4, 6, 3, 2}}) {
    EnumSpec spec(c.n1, c.n2, c.r, c.s);
    INFO("spec " << c.n1 << "x" << c.n2 << " degrees " << c.r << "," << c.s);
    auto graphs = collect(spec);
    auto expected = brute_force_classes(spec);
    REQUIRE(graphs.size() == expected.size());
    REQUIRE(keys_of(graphs) == expected);
    for (const auto& g : graphs) {
      REQUIRE(is_connected(g));
      REQUIRE(g == canonical_form(g));
      for (int i = 0; i < g.n1(); ++i) REQUIRE(g.row_degree(i) == c.r);
      for (int deg : g.column_degrees()) REQUIRE(deg == c.s);
    }
  }
}

TEST_CASE("degree-2 by degree-1 specs have no connected realizations") {
  REQUIRE(collect(EnumSpec(2, 4, 2, 1)).empty());
  REQUIRE(collect(EnumSpec(4, 4, 1, 1)).empty());
}

TEST_CASE("counts are independent of the thread count") {
  EnumSpec spec(6, 8, 4, 3, 3);
  std::vector<std::vector<std::uint64_t>> base_keys;
  std::uint64_t base_aux = 0;
  for (int threads : {1, 2, 4}) {
    EnumOptions opts;
    opts.threads = threads;
    std::vector<BipartiteGraph> graphs;
    auto res = generate(spec, opts, [&](const BipartiteGraph& g) {
      graphs.push_back(g);
      return detail::packed_diameter(g, 3) == 3;
    });
    INFO("threads=" << threads);
    REQUIRE(res.generated == 18);
    REQUIRE(res.aux == 1);
    REQUIRE_FALSE(res.incomplete);
    auto keys = keys_of(graphs);
    if (threads == 1) {
      base_keys = keys;
      base_aux = res.aux;
    } else {
      REQUIRE(keys == base_keys);
      REQUIRE(res.aux == base_aux);
    }
  }
}

TEST_CASE("work limit interrupts and checkpoints resume") {
  EnumSpec spec(6, 8, 4, 3);
  EnumOptions plain;
  auto full = generate(spec, plain, [](const BipartiteGraph&) { return true; });
  REQUIRE(full.generated == 18);
  REQUIRE_FALSE(full.incomplete);

  // interrupted run: some prefixes complete and land in the checkpoint
  std::ostringstream partial_log;
  EnumOptions limited;
  limited.work_limit = 60;
  limited.checkpoint = &partial_log;
  auto cut = generate(spec, limited, [](const BipartiteGraph&) { return true; });
  REQUIRE(cut.incomplete);
  REQUIRE(cut.nodes <= 60 + 4);  // small overshoot between check and count

  // resuming re-runs only what the checkpoint does not cover
  std::istringstream partial_in(partial_log.str());
  std::ostringstream full_log;
  EnumOptions resume;
  resume.resume = &partial_in;
  resume.checkpoint = &full_log;
  auto resumed = generate(spec, resume, [](const BipartiteGraph&) { return true; });
  REQUIRE(resumed.generated == 18);
  REQUIRE_FALSE(resumed.incomplete);
  REQUIRE((resumed.nodes < full.nodes || partial_log.str().empty()));

  // a complete checkpoint skips every subtree: counts come from the log and
  // the sink never fires (only the cheap prefix collection still runs)
  std::istringstream full_in(full_log.str());
  EnumOptions skip_all;
  skip_all.resume = &full_in;
  int sink_calls = 0;
  auto skipped = generate(spec, skip_all, [&](const BipartiteGraph&) {
    ++sink_calls;
    return true;
  });
  REQUIRE(skipped.generated == 18);
  REQUIRE(sink_calls == 0);
  REQUIRE(skipped.nodes < full.nodes);

  // foreign and non-checkpoint lines are ignored, malformed ones are not
  std::istringstream foreign("# comment\ndone 4 4 2 2 3 3 7 7\n");
  EnumOptions with_foreign;
  with_foreign.resume = &foreign;
  auto unaffected =
      generate(spec, with_foreign, [](const BipartiteGraph&) { return true; });
  REQUIRE(unaffected.generated == 18);
  std::istringstream bad("done 1 2\n");
  EnumOptions with_bad;
  with_bad.resume = &bad;
  REQUIRE_THROWS_AS(
      generate(spec, with_bad, [](const BipartiteGraph&) { return true; }),
      ParseError);
}

TEST_CASE("spec validation") {
  REQUIRE_THROWS_AS(EnumSpec(3, 3, 2, 3), Error);   // margins disagree
  REQUIRE_THROWS_AS(EnumSpec(0, 3, 2, 2), Error);   // empty side
  REQUIRE_THROWS_AS(EnumSpec(2, 3, 4, 2), Error);   // r exceeds n2
  REQUIRE_THROWS_AS(EnumSpec(33, 22, 2, 3), Error);  // n1 guardrail
  REQUIRE_THROWS_AS(EnumSpec(13, 65, 5, 1), Error);  // n2 guardrail
  try {
    EnumSpec(33, 22, 2, 3);
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::too_large);
  }
}

TEST_CASE("packed diameter agrees with the reference metric") {
  std::mt19937 rng(99);
  int connected_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> side(1, 6);
    int n1 = side(rng), n2 = side(rng);
    BipartiteGraph g(n1, n2);
    std::bernoulli_distribution flip(0.45);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j)
        if (flip(rng)) g.set_edge(i, j);
    auto ref = diameter(g);
    int got = detail::packed_diameter(g, n1 + n2);
    if (ref) {
      ++connected_seen;
      REQUIRE(got == *ref);
    } else {
      REQUIRE(got == -1);
    }
  }
  REQUIRE(connected_seen > 50);
  // a cap below the true diameter reports cap + 1
  REQUIRE(detail::packed_diameter(even_cycle(8), 2) == 3);
  REQUIRE(detail::packed_diameter(even_cycle(8), 4) == 4);
}

TEST_CASE("census walks the ladder from the bound downward") {
  EnumOptions opts;
  auto rows = census(4, 3, 3, opts);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].n1 == 6);
  REQUIRE(rows[0].n2 == 8);
  REQUIRE(rows[0].generated == 18);
  REQUIRE(rows[0].with_diameter == 1);
  REQUIRE_FALSE(rows[0].incomplete);
  REQUIRE(rows[0].representatives.size() == 1);
  const auto& rep = rows[0].representatives[0];
  REQUIRE(detail::packed_diameter(rep, 8) == 3);
  REQUIRE(rep == canonical_form(rep));

  // the first rung can be empty; the ladder then descends
  auto deep = census(3, 2, 5, opts);
  REQUIRE(deep.size() == 2);
  REQUIRE(deep[0].n1 == 8);
  REQUIRE(deep[0].n2 == 12);
  REQUIRE(deep[0].generated == 20);
  REQUIRE(deep[0].with_diameter == 0);
  REQUIRE(deep[1].n1 == 6);
  REQUIRE(deep[1].n2 == 9);
  REQUIRE(deep[1].generated == 6);
  REQUIRE(deep[1].with_diameter == 1);

  auto even = census(4, 2, 4, opts);
  REQUIRE(even.size() == 1);
  REQUIRE(even[0].n1 == 8);
  REQUIRE(even[0].n2 == 16);
  REQUIRE(even[0].generated == 204);
  REQUIRE(even[0].with_diameter == 1);

  REQUIRE_THROWS_AS(census(3, 3, 3, opts), Error);  // needs r > s
  REQUIRE_THROWS_AS(census(4, 3, 2, opts), Error);  // needs d >= 3
  REQUIRE_THROWS_AS(census(11, 2, 6, opts), Error); // ladder top beyond guardrail
}

TEST_CASE("an interrupted rung is flagged and the ladder continues") {
  EnumOptions opts;
  opts.work_limit = 100;
  auto rows = census(4, 3, 3, opts);
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[0].incomplete);
  REQUIRE(rows[1].n1 == 3);
  REQUIRE(rows[1].n2 == 4);
  REQUIRE(rows[1].generated == 1);       // K_{3,4}
  REQUIRE(rows[1].with_diameter == 0);   // its diameter is 2
  REQUIRE_FALSE(rows[1].incomplete);
}

TEST_CASE("representatives are pairwise non-isomorphic") {
  EnumOptions opts;
  auto rows = census(5, 3, 3, opts);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].generated == 45);
  REQUIRE(rows[0].with_diameter == 2);
  REQUIRE(rows[0].representatives.size() == 2);
  auto k0 = canonical_key(rows[0].representatives[0]);
  auto k1 = canonical_key(rows[0].representatives[1]);
  REQUIRE(k0 != k1);
  for (const auto& rep : rows[0].representatives) {
    REQUIRE(matches_degrees(rep, 5, 3));
    REQUIRE(detail::packed_diameter(rep, 16) == 3);
  }
}

TEST_CASE("uniqueness verification") {
  EnumOptions opts;
  auto rows = census(4, 3, 3, opts);
  const auto& moore_43 = rows[0].representatives[0];
  REQUIRE(verify_uniqueness(moore_43, EnumSpec(6, 8, 4, 3, 3)));

  // the semi-double of the Heawood graph is the only [6,3;3] extremal graph
  auto sd = semi_double(projective_plane(2), 1);
  REQUIRE(verify_uniqueness(sd, EnumSpec(7, 14, 6, 3, 3)));

  // [5,3;3] has two extremal classes, so neither is unique
  REQUIRE_FALSE(verify_uniqueness(g_prime_r(5), EnumSpec(6, 10, 5, 3, 3)));

  // subdividing K33 gives the only [3,2;4] extremal graph
  auto sk = subdivision(complete_bipartite(3, 3));
  REQUIRE(verify_uniqueness(sk, EnumSpec(6, 9, 3, 2, 4)));

  REQUIRE_THROWS_AS(verify_uniqueness(even_cycle(6), EnumSpec(6, 8, 4, 3, 3)),
                    Error);
  REQUIRE_THROWS_AS(
      verify_uniqueness(complete_bipartite(3, 4), EnumSpec(3, 4, 4, 3, 3)),
      Error);  // diameter is 2, not 3

  EnumOptions tiny;
  tiny.work_limit = 20;
  REQUIRE_THROWS_AS(verify_uniqueness(moore_43, EnumSpec(6, 8, 4, 3, 3), tiny),
                    Error);
  try {
    verify_uniqueness(moore_43, EnumSpec(6, 8, 4, 3, 3), tiny);
  } catch (const Error& e) {
    REQUIRE(e.code() == Errc::work_limit);
  }
}
