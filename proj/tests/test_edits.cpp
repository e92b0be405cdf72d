#include <doctest.h>

#include <random>
#include <stdexcept>

#include "editvote/ballot_io.hpp"
#include "editvote/edits.hpp"
#include "editvote/greedy.hpp"
#include "support/fixtures.hpp"

using namespace editvote;
using namespace editvote::testing;

TEST_CASE("swap boundary exchanges the pair with below counts j and j-1") {
  // In 1>2>3>4>5 the below counts are 4,3,2,1,0; boundary 3 exchanges
  // candidates 2 and 3, boundary 2 exchanges 3 and 4.
  Profile p = ex5();
  const Profile swapped = apply_edit(p, Edit::swap(1, 3));
  CHECK(swapped.ranking(1).order() == std::vector<CandidateId>{1, 3, 2, 4, 5});
  const Profile swapped_low = apply_edit(p, Edit::swap(1, 2));
  CHECK(swapped_low.ranking(1).order() ==
        std::vector<CandidateId>{1, 2, 4, 3, 5});
}

TEST_CASE("swap updates exactly one tally pair") {
  const Profile p = ex5();
  const Profile swapped = apply_edit(p, Edit::swap(1, 4));  // raises 2 past 1
  CHECK(swapped.tally().count(1, 2) == p.tally().count(1, 2) - 1);
  CHECK(swapped.tally().count(2, 1) == p.tally().count(2, 1) + 1);
  CHECK(swapped.tally().count(1, 3) == p.tally().count(1, 3));
}

TEST_CASE("swap is an involution") {
  const Profile p = ex5();
  Profile twice = apply_edit(apply_edit(p, Edit::swap(2, 2)), Edit::swap(2, 2));
  CHECK(twice == p);
}

TEST_CASE("deletion removes one ballot from the tally") {
  const Profile p = ex5();
  const Profile smaller = apply_edit(p, Edit::deletion(1));
  CHECK(smaller.num_voters_live() == 4);
  CHECK(smaller.tally().count(kA, kC) == 3);
  CHECK_FALSE(smaller.is_live(1));
  CHECK(smaller.is_live(2));
}

TEST_CASE("inapplicable edits are rejected eagerly") {
  const Profile p = ex5();
  CHECK_THROWS_AS(apply_edit(p, Edit::swap(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(apply_edit(p, Edit::swap(1, 5)), std::invalid_argument);
  CHECK_THROWS_AS(apply_edit(p, Edit::swap(9, 1)), std::invalid_argument);
  const Profile gone = apply_edit(p, Edit::deletion(2));
  CHECK_THROWS_AS(apply_edit(gone, Edit::deletion(2)), std::invalid_argument);
  CHECK_THROWS_AS(apply_edit(gone, Edit::swap(2, 1)), std::invalid_argument);
}

TEST_CASE("apply_sequence composes left to right and reports the bad index") {
  const Profile p = ex5();
  CHECK(apply_sequence(p, {}) == p);

  // Raising candidate 3 past 2 then 1 in voters 1 and 2 makes it beat every
  // rival under the strict convention.
  const EditSequence raise_c = {Edit::swap(1, 3), Edit::swap(1, 4),
                                Edit::swap(2, 3), Edit::swap(2, 4)};
  const Profile after = apply_sequence(p, raise_c);
  CHECK(after.ranking(1).order() == std::vector<CandidateId>{3, 1, 2, 4, 5});
  CHECK(total_deficit(after.tally(), kC, TieConvention::strict) == 0);
  CHECK(condorcet_winner(after, TieConvention::strict) == kC);

  try {
    apply_sequence(p, {Edit::deletion(1), Edit::deletion(1)});
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("edit 2") != std::string::npos);
  }
}

TEST_CASE("deficit reduction trace on the swap witness") {
  const Profile p = ex5();
  const EditSequence raise_c = {Edit::swap(1, 3), Edit::swap(1, 4),
                                Edit::swap(2, 3), Edit::swap(2, 4)};
  const auto trace =
      deficit_reduction_trace(p, kC, raise_c, TieConvention::strict);
  REQUIRE(trace.size() == 2);
  CHECK(trace[0] == DeficitReduction{2, kC, kA, 4, 2});
  CHECK(trace[1] == DeficitReduction{4, kC, kA, 2, 0});
}

TEST_CASE("deficit reduction trace on deletions") {
  const Profile p = ex5();
  const EditSequence deletions = {Edit::deletion(1), Edit::deletion(2)};
  const auto trace =
      deficit_reduction_trace(p, kD, deletions, TieConvention::strict);
  REQUIRE(trace.size() == 4);
  CHECK(trace[0] == DeficitReduction{1, kD, kB, 2, 1});
  CHECK(trace[1] == DeficitReduction{1, kD, kC, 2, 1});
  CHECK(trace[2] == DeficitReduction{2, kD, kB, 1, 0});
  CHECK(trace[3] == DeficitReduction{2, kD, kC, 1, 0});
}

TEST_CASE("trace is empty when the candidate already wins") {
  const Profile p = build_profile({{2, 1, 3}, {2, 3, 1}, {2, 1, 3}}, 3);
  const auto trace = deficit_reduction_trace(p, 2, {Edit::swap(1, 1)},
                                             TieConvention::strict);
  CHECK(trace.empty());
}

TEST_CASE("condorcet sequence checks") {
  const Profile p = ex5();
  const EditSequence raise_c = {Edit::swap(1, 3), Edit::swap(1, 4),
                                Edit::swap(2, 3), Edit::swap(2, 4)};
  CHECK(is_condorcet_sequence(p, kC, raise_c, TieConvention::strict));
  CHECK(is_condorcet_sequence(p, kD, {Edit::deletion(1), Edit::deletion(2)},
                              TieConvention::strict));
  CHECK_FALSE(is_condorcet_sequence(p, kC, {}, TieConvention::strict));
}

TEST_CASE("witness text round trip") {
  const EditSequence seq = {Edit::swap(1, 3), Edit::deletion(4),
                            Edit::swap(2, 1)};
  const std::string text = witness_to_text(seq);
  CHECK(text == "swap 1 3\ndelete 4\nswap 2 1\n");
  CHECK(witness_from_text(text) == seq);
  CHECK_THROWS_AS(witness_from_text("hoist 1 2\n"), std::invalid_argument);
}

TEST_CASE("trace length over a closing swap sequence is sum of half-deficits") {
  // Each raise past an opponent moves that margin by two, so a sequence that
  // closes every race emits ceil(deficit / 2) events per trailing opponent.
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int m = 2 + seed % 4;
    const int n = 1 + seed % 6;
    const Profile p =
        generate_impartial_culture(m, n, mix_seed(59, m, n, seed));
    for (CandidateId c = 1; c <= m; ++c) {
      const ScoreReport report =
          greedy_score(p, c, Rule::dodgson, TieConvention::strict);
      REQUIRE(report.score.has_value());
      int expected = 0;
      for (CandidateId d = 1; d <= m; ++d) {
        if (d != c) {
          expected += (deficit(p.tally(), c, d, TieConvention::strict) + 1) / 2;
        }
      }
      const auto trace = deficit_reduction_trace(p, c, report.witness,
                                                 TieConvention::strict);
      CHECK(static_cast<int>(trace.size()) == expected);
      for (const DeficitReduction& event : trace) {
        CHECK(event.deficit_before > event.deficit_after);
      }
    }
  }
}

TEST_CASE("incremental tally equals recount under random edit sequences") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 60; ++round) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 2 + static_cast<int>(rng() % 5);
    Profile p = generate_impartial_culture(m, n, rng());
    Profile replay = p;
    EditSequence seq;
    for (int step = 0; step < 12; ++step) {
      const auto live = p.live_voters();
      if (live.empty()) break;
      const VoterId v = live[rng() % live.size()];
      const Edit e = (rng() % 4 == 0)
                         ? Edit::deletion(v)
                         : Edit::swap(v, 1 + static_cast<int>(rng() % (m - 1)));
      apply_edit_in_place(p, e);
      seq.push_back(e);
      CHECK(p.tally() == pairwise_tally(p));
    }
    // Replay determinism: applying the same sequence twice gives equal
    // profiles, and voter counts move only with deletions.
    const Profile a = apply_sequence(replay, seq);
    const Profile b = apply_sequence(replay, seq);
    CHECK(a == b);
    int deletions = 0;
    for (const Edit& e : seq) deletions += e.kind == EditKind::deletion;
    CHECK(a.num_voters_live() == replay.num_voters_live() - deletions);
  }
}
