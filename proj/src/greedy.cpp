#include "editvote/greedy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace editvote {

namespace {

int deficit_of_margin(int margin, TieConvention tc) {
  return std::max(0, margin + (tc == TieConvention::strict ? 1 : 0));
}

// Move selection order: marginal cost, then cost, then voter, then target
// count. Infinite marginal costs sort after every finite one. The same key
// drives the naive scan and the priority queue, so the two engines pick
// identical moves.
struct MoveKey {
  int num = 0;
  int den = 0;
  int cost = 0;
  int voter = 0;
  int target = 0;

  bool operator<(const MoveKey& o) const {
    const bool inf_a = den == 0;
    const bool inf_b = o.den == 0;
    if (inf_a != inf_b) return inf_b;
    if (!inf_a) {
      const long long lhs = static_cast<long long>(num) * o.den;
      const long long rhs = static_cast<long long>(o.num) * den;
      if (lhs != rhs) return lhs < rhs;
    }
    if (cost != o.cost) return cost < o.cost;
    if (voter != o.voter) return voter < o.voter;
    return target < o.target;
  }
};

MoveKey key_of(const Move& mv) {
  return {mv.cost, mv.reductions, mv.cost, mv.voter, mv.target_count};
}

bool move_less(const Move& a, const Move& b) { return key_of(a) < key_of(b); }

// Binary min-heap over dense entry ids with a position index, so arbitrary
// entries can be removed or re-keyed. rebuild() restores the heap property
// after a bulk rewrite of keys.
class IndexedHeap {
 public:
  explicit IndexedHeap(int capacity) : pos_(capacity, -1), keys_(capacity) {}

  bool empty() const { return heap_.empty(); }
  bool contains(int id) const { return pos_[id] >= 0; }
  int top() const { return heap_.front(); }
  const MoveKey& key(int id) const { return keys_[id]; }

  void push(int id, const MoveKey& k) {
    keys_[id] = k;
    pos_[id] = static_cast<int>(heap_.size());
    heap_.push_back(id);
    sift_up(pos_[id]);
  }

  void update(int id, const MoveKey& k) {
    keys_[id] = k;
    sift_up(pos_[id]);
    sift_down(pos_[id]);
  }

  void remove(int id) {
    const int i = pos_[id];
    pos_[id] = -1;
    const int last = heap_.back();
    heap_.pop_back();
    if (i < static_cast<int>(heap_.size())) {
      heap_[i] = last;
      pos_[last] = i;
      sift_up(i);
      sift_down(pos_[last]);
    }
  }

  // Overwrites a key without restoring heap order; callers must rebuild().
  void stage_key(int id, const MoveKey& k) { keys_[id] = k; }

  void rebuild() {
    for (int i = static_cast<int>(heap_.size()) / 2 - 1; i >= 0; --i) {
      sift_down(i);
    }
  }

 private:
  void sift_up(int i) {
    while (i > 0) {
      const int parent = (i - 1) / 2;
      if (!(keys_[heap_[i]] < keys_[heap_[parent]])) break;
      std::swap(heap_[i], heap_[parent]);
      pos_[heap_[i]] = i;
      pos_[heap_[parent]] = parent;
      i = parent;
    }
  }

  void sift_down(int i) {
    const int n = static_cast<int>(heap_.size());
    while (true) {
      int smallest = i;
      for (int child = 2 * i + 1; child <= 2 * i + 2 && child < n; ++child) {
        if (keys_[heap_[child]] < keys_[heap_[smallest]]) smallest = child;
      }
      if (smallest == i) break;
      std::swap(heap_[i], heap_[smallest]);
      pos_[heap_[i]] = i;
      pos_[heap_[smallest]] = smallest;
      i = smallest;
    }
  }

  std::vector<int> heap_;
  std::vector<int> pos_;
  std::vector<MoveKey> keys_;
};

// Working profile plus incremental margin bookkeeping for the scored
// candidate. margin(d) = tally(d, c) - tally(c, d); the run keeps these and
// the total deficit in step with every applied edit.
class RunState {
 public:
  RunState(const Profile& profile, CandidateId c, TieConvention tc)
      : work_(profile), c_(c), tc_(tc) {
    const int m = work_.num_candidates();
    margins_.assign(m + 1, 0);
    positive_.assign(m + 1, 0);
    for (CandidateId d = 1; d <= m; ++d) {
      if (d == c_) continue;
      margins_[d] = work_.tally().margin(d, c_);
      const int def = deficit_of_margin(margins_[d], tc_);
      total_deficit_ += def;
      positive_[d] = def > 0;
    }
  }

  Profile& work() { return work_; }
  CandidateId candidate() const { return c_; }
  int total_deficit() const { return total_deficit_; }
  bool positive(CandidateId d) const { return positive_[d] != 0; }

  // Returns true when the deficit against d crosses zero in either direction.
  bool bump_margin(CandidateId d, int delta) {
    const int before = deficit_of_margin(margins_[d], tc_);
    margins_[d] += delta;
    const int after = deficit_of_margin(margins_[d], tc_);
    total_deficit_ += after - before;
    positive_[d] = after > 0;
    return (before > 0) != (after > 0);
  }

 private:
  Profile work_;
  CandidateId c_;
  TieConvention tc_;
  std::vector<int> margins_;
  std::vector<char> positive_;
  int total_deficit_ = 0;
};

void apply_move(Profile& work, CandidateId c, const Move& mv,
                EditSequence& witness) {
  if (mv.kind == MoveKind::raise) {
    for (int step = 0; step < mv.cost; ++step) {
      const int j = work.ranking(mv.voter).below_count(c) + 1;
      work.apply_swap(mv.voter, j);
      witness.push_back(Edit::swap(mv.voter, j));
    }
  } else {
    work.apply_deletion(mv.voter);
    witness.push_back(Edit::deletion(mv.voter));
  }
}

ScoreReport make_report(CandidateId c, Rule rule, TieConvention tc,
                        Engine engine) {
  ScoreReport report;
  report.candidate = c;
  report.rule = rule;
  report.convention = tc;
  report.engine = engine;
  return report;
}

ScoreReport run_naive(const Profile& profile, CandidateId c, Rule rule,
                      TieConvention tc) {
  ScoreReport report = make_report(c, rule, tc, Engine::naive);
  Profile work = profile;
  while (total_deficit(work.tally(), c, tc) > 0) {
    const std::vector<Move> moves =
        rule == Rule::dodgson ? enumerate_dodgson_moves(work, c, tc)
                              : enumerate_young_moves(work, c, tc);
    const Move* best = nullptr;
    for (const Move& mv : moves) {
      if (best == nullptr || move_less(mv, *best)) best = &mv;
    }
    if (best == nullptr || best->reductions == 0) return report;  // unscorable
    apply_move(work, c, *best, report.witness);
    report.move_log.push_back(
        {*best, marginal_cost(*best), total_deficit(work.tally(), c, tc)});
  }
  report.score = static_cast<int>(report.witness.size());
  return report;
}

// Queue engine for the swap rule. One queue entry per pending raise target:
// entry (v, t) stands for the raise lifting c past the first t candidates of
// its start-of-run above list in voter v, of which consumed[v] have already
// been passed. A raise therefore costs t - consumed[v] swaps. Reduction
// counts come from per-voter prefix sums over the positive-deficit flags;
// whenever a pairwise race closes, every reduction count is stale and the
// whole queue is reprioritized.
ScoreReport run_queue_dodgson(const Profile& profile, CandidateId c,
                              TieConvention tc) {
  ScoreReport report = make_report(c, Rule::dodgson, tc, Engine::queue);
  RunState st(profile, c, tc);
  const int m = profile.num_candidates();
  const int n = profile.num_voters_original();
  const int lane = m - 1;

  if (st.total_deficit() == 0) {
    report.score = 0;
    return report;
  }

  std::vector<std::vector<CandidateId>> above(n + 1);
  std::vector<std::vector<int>> prefix(n + 1);
  std::vector<int> consumed(n + 1, 0);
  IndexedHeap heap(n * lane);

  const auto entry_id = [lane](VoterId v, int t) {
    return (v - 1) * lane + (t - 1);
  };
  const auto rebuild_prefix = [&](VoterId v) {
    auto& pre = prefix[v];
    pre.resize(above[v].size() + 1);
    pre[0] = 0;
    for (size_t i = 0; i < above[v].size(); ++i) {
      pre[i + 1] = pre[i] + (st.positive(above[v][i]) ? 1 : 0);
    }
  };
  const auto entry_key = [&](VoterId v, int t) {
    const int cost = t - consumed[v];
    const int red = prefix[v][t] - prefix[v][consumed[v]];
    return MoveKey{cost, red, cost, v, cost};
  };

  for (VoterId v = 1; v <= n; ++v) {
    if (!st.work().is_live(v)) continue;
    above[v] = st.work().ranking(v).candidates_above(c);
    rebuild_prefix(v);
    for (int t = 1; t <= static_cast<int>(above[v].size()); ++t) {
      heap.push(entry_id(v, t), entry_key(v, t));
    }
  }

  while (st.total_deficit() > 0) {
    if (heap.empty() || heap.key(heap.top()).den == 0) return report;
    const int id = heap.top();
    const VoterId v = id / lane + 1;
    const int t = id % lane + 1;
    const int k = t - consumed[v];
    const Move mv{v, MoveKind::raise, k, k, heap.key(id).den};

    apply_move(st.work(), c, mv, report.witness);
    bool crossed = false;
    for (int i = consumed[v]; i < t; ++i) {
      crossed |= st.bump_margin(above[v][i], -2);
    }
    for (int tt = consumed[v] + 1; tt <= t; ++tt) {
      heap.remove(entry_id(v, tt));
    }
    consumed[v] = t;
    report.move_log.push_back({mv, marginal_cost(mv), st.total_deficit()});

    if (crossed) {
      for (VoterId w = 1; w <= n; ++w) {
        if (above[w].empty()) continue;
        rebuild_prefix(w);
        for (int tt = consumed[w] + 1; tt <= static_cast<int>(above[w].size());
             ++tt) {
          heap.stage_key(entry_id(w, tt), entry_key(w, tt));
        }
      }
      heap.rebuild();
    } else {
      for (int tt = t + 1; tt <= static_cast<int>(above[v].size()); ++tt) {
        heap.update(entry_id(v, tt), entry_key(v, tt));
      }
    }
  }
  report.score = static_cast<int>(report.witness.size());
  return report;
}

// Queue engine for the deletion rule: one entry per live voter. Deletions
// never reorder ballots, so each voter's above set is fixed; only the
// positive-deficit flags move. Any crossing in either direction invalidates
// reduction counts queue-wide.
ScoreReport run_queue_young(const Profile& profile, CandidateId c,
                            TieConvention tc) {
  ScoreReport report = make_report(c, Rule::young, tc, Engine::queue);
  RunState st(profile, c, tc);
  const int m = profile.num_candidates();
  const int n = profile.num_voters_original();

  if (st.total_deficit() == 0) {
    report.score = 0;
    return report;
  }

  std::vector<std::vector<CandidateId>> above(n + 1);
  IndexedHeap heap(n);
  const auto voter_key = [&](VoterId v) {
    int red = 0;
    for (const CandidateId d : above[v]) {
      if (st.positive(d)) ++red;
    }
    return MoveKey{1, red, 1, v, 0};
  };

  for (VoterId v = 1; v <= n; ++v) {
    if (!st.work().is_live(v)) continue;
    above[v] = st.work().ranking(v).candidates_above(c);
    heap.push(v - 1, voter_key(v));
  }

  while (st.total_deficit() > 0) {
    if (heap.empty() || heap.key(heap.top()).den == 0) return report;
    const VoterId v = heap.top() + 1;
    const Move mv{v, MoveKind::deletion, 0, 1, heap.key(v - 1).den};

    // Capture the per-opponent margin deltas before the ballot goes away.
    const Ranking& r = st.work().ranking(v);
    std::vector<int> deltas(m + 1, 0);
    for (CandidateId d = 1; d <= m; ++d) {
      if (d != c) deltas[d] = r.ranks_above(d, c) ? -1 : +1;
    }
    apply_move(st.work(), c, mv, report.witness);
    bool crossed = false;
    for (CandidateId d = 1; d <= m; ++d) {
      if (d != c) crossed |= st.bump_margin(d, deltas[d]);
    }
    heap.remove(v - 1);
    report.move_log.push_back({mv, marginal_cost(mv), st.total_deficit()});

    if (crossed) {
      for (VoterId w = 1; w <= n; ++w) {
        if (heap.contains(w - 1)) heap.stage_key(w - 1, voter_key(w));
      }
      heap.rebuild();
    }
  }
  report.score = static_cast<int>(report.witness.size());
  return report;
}

}  // namespace

MarginalCost marginal_cost(const Move& move) {
  return {move.cost, move.reductions};
}

std::vector<Move> enumerate_dodgson_moves(const Profile& profile, CandidateId c,
                                          TieConvention tc) {
  std::vector<Move> moves;
  const TallyMatrix& tally = profile.tally();
  for (VoterId v = 1; v <= profile.num_voters_original(); ++v) {
    if (!profile.is_live(v)) continue;
    const std::vector<CandidateId> above =
        profile.ranking(v).candidates_above(c);
    int reductions = 0;
    for (int k = 1; k <= static_cast<int>(above.size()); ++k) {
      if (deficit(tally, c, above[k - 1], tc) > 0) ++reductions;
      moves.push_back({v, MoveKind::raise, k, k, reductions});
    }
  }
  return moves;
}

std::vector<Move> enumerate_young_moves(const Profile& profile, CandidateId c,
                                        TieConvention tc) {
  std::vector<Move> moves;
  const TallyMatrix& tally = profile.tally();
  for (VoterId v = 1; v <= profile.num_voters_original(); ++v) {
    if (!profile.is_live(v)) continue;
    int reductions = 0;
    for (const CandidateId d : profile.ranking(v).candidates_above(c)) {
      if (deficit(tally, c, d, tc) > 0) ++reductions;
    }
    moves.push_back({v, MoveKind::deletion, 0, 1, reductions});
  }
  return moves;
}

ScoreReport greedy_score(const Profile& profile, CandidateId c, Rule rule,
                         TieConvention tc, Engine engine) {
  if (c < 1 || c > profile.num_candidates()) {
    throw std::invalid_argument("candidate " + std::to_string(c) +
                                " out of range 1.." +
                                std::to_string(profile.num_candidates()));
  }
  if (engine == Engine::naive) return run_naive(profile, c, rule, tc);
  return rule == Rule::dodgson ? run_queue_dodgson(profile, c, tc)
                               : run_queue_young(profile, c, tc);
}

std::string score_report_text(const ScoreReport& report) {
  std::ostringstream out;
  out << "candidate " << report.candidate << '\n';
  out << "rule " << to_string(report.rule) << '\n';
  out << "convention " << to_string(report.convention) << '\n';
  if (report.score.has_value()) {
    out << "score " << *report.score << '\n';
  } else {
    out << "score UNSCORABLE\n";
  }
  out << "witness " << report.witness.size() << '\n';
  out << witness_to_text(report.witness);
  out << "moves " << report.move_log.size() << '\n';
  for (const MoveLogEntry& entry : report.move_log) {
    out << "voter " << entry.move.voter << ' '
        << (entry.move.kind == MoveKind::raise ? "raise" : "delete")
        << " cost " << entry.move.cost << " reductions "
        << entry.move.reductions << " deficit " << entry.total_deficit_after
        << '\n';
  }
  return out.str();
}

}  // namespace editvote
