#pragma once

// Finite automata over Σ = {*, 1, ..., d} (letter 0 is the star) and the
// automaton of standard words of a monomial submodule.

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "repstab/errors.hpp"
#include "repstab/exact.hpp"
#include "repstab/groebner.hpp"
#include "repstab/words.hpp"

namespace repstab {

struct Nfa {
  int letters = 0;
  int start = 0;
  std::vector<std::vector<std::vector<int>>> delta;  // delta[state][letter] = successors
  std::vector<bool> accepting;

  [[nodiscard]] std::size_t size() const { return delta.size(); }
};

/// Deterministic and total.
struct Dfa {
  int letters = 0;
  int start = 0;
  std::vector<std::vector<int>> delta;  // delta[state][letter]
  std::vector<bool> accepting;

  [[nodiscard]] std::size_t size() const { return delta.size(); }

  [[nodiscard]] bool accepts(const Word& w) const {
    int q = start;
    for (auto c : w.letters()) q = delta[q][c];
    return accepting[q];
  }
};

/// Accepts the words that contain `u` as a subsequence: state i means the
/// first i letters of u have been matched; every state loops on every
/// letter.
inline Nfa subsequence_nfa(const Word& u, int letters) {
  Nfa a;
  a.letters = letters;
  const int len = static_cast<int>(u.size());
  a.delta.assign(len + 1, std::vector<std::vector<int>>(letters));
  a.accepting.assign(len + 1, false);
  a.accepting[len] = true;
  for (int q = 0; q <= len; ++q)
    for (int c = 0; c < letters; ++c) {
      a.delta[q][c].push_back(q);
      if (q < len && u[q] == c) a.delta[q][c].push_back(q + 1);
    }
  return a;
}

/// Subset construction restricted to reachable subsets.
inline Dfa determinize(const Nfa& a) {
  Dfa out;
  out.letters = a.letters;
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto [it, inserted] = ids.try_emplace(s, static_cast<int>(subsets.size()));
    if (inserted) subsets.push_back(s);
    return it->second;
  };
  out.start = intern({a.start});
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    std::vector<int> row(a.letters);
    for (int c = 0; c < a.letters; ++c) {
      std::vector<int> next;
      for (int q : subsets[k])
        next.insert(next.end(), a.delta[q][c].begin(), a.delta[q][c].end());
      row[c] = intern(std::move(next));
    }
    out.delta.push_back(std::move(row));
  }
  for (const auto& s : subsets)
    out.accepting.push_back(std::any_of(s.begin(), s.end(), [&](int q) { return a.accepting[q]; }));
  return out;
}

/// Moore partition refinement after dropping unreachable states. State
/// numbering follows first visit in breadth-first order, so the result is
/// canonical.
inline Dfa minimize(const Dfa& a) {
  std::vector<int> reach_order;
  std::vector<bool> seen(a.size(), false);
  std::queue<int> bfs;
  bfs.push(a.start);
  seen[a.start] = true;
  while (!bfs.empty()) {
    int q = bfs.front();
    bfs.pop();
    reach_order.push_back(q);
    for (int c = 0; c < a.letters; ++c)
      if (!seen[a.delta[q][c]]) {
        seen[a.delta[q][c]] = true;
        bfs.push(a.delta[q][c]);
      }
  }
  std::vector<int> cls(a.size(), 0);
  for (int q : reach_order) cls[q] = a.accepting[q] ? 1 : 0;
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(a.size(), 0);
    for (int q : reach_order) {
      std::vector<int> sig{cls[q]};
      for (int c = 0; c < a.letters; ++c) sig.push_back(cls[a.delta[q][c]]);
      auto [it, inserted] = sig_ids.try_emplace(sig, static_cast<int>(sig_ids.size()));
      next[q] = it->second;
    }
    cls = std::move(next);
    if (sig_ids.size() == classes) break;
    classes = sig_ids.size();
  }
  // Renumber classes by breadth-first discovery from the start state.
  std::map<int, int> renum;
  std::vector<int> rep;
  std::queue<int> order;
  renum.emplace(cls[a.start], 0);
  rep.push_back(a.start);
  order.push(a.start);
  while (!order.empty()) {
    int q = order.front();
    order.pop();
    for (int c = 0; c < a.letters; ++c) {
      int t = a.delta[q][c];
      if (renum.try_emplace(cls[t], static_cast<int>(rep.size())).second) {
        rep.push_back(t);
        order.push(t);
      }
    }
  }
  Dfa out;
  out.letters = a.letters;
  out.start = 0;
  for (int q : rep) {
    std::vector<int> row(a.letters);
    for (int c = 0; c < a.letters; ++c) row[c] = renum.at(cls[a.delta[q][c]]);
    out.delta.push_back(std::move(row));
    out.accepting.push_back(a.accepting[q]);
  }
  return out;
}

inline Dfa all_words_dfa(int letters) {
  Dfa a;
  a.letters = letters;
  a.delta.assign(1, std::vector<int>(letters, 0));
  a.accepting = {true};
  return a;
}

struct StandardWordAutomaton {
  Dfa dfa;                     // minimized
  std::size_t product_states;  // reachable product states before minimization
};

/// Accepts exactly the words with n stars that contain no generator word as
/// a subsequence. Built from one determinized subsequence automaton per
/// generator, run in parallel with a star counter saturating at n + 1; a
/// product state accepts when no component accepts and the counter is n.
inline StandardWordAutomaton standard_word_automaton(const MonomialSubmodule& sub) {
  const int letters = sub.colors() + 1;
  const int cap = sub.n() + 1;
  std::vector<Dfa> parts;
  for (const auto& w : sub.generator_words()) parts.push_back(determinize(subsequence_nfa(w, letters)));
  Dfa prod;
  prod.letters = letters;
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> tuples;
  auto intern = [&](std::vector<int> t) {
    auto [it, inserted] = ids.try_emplace(t, static_cast<int>(tuples.size()));
    if (inserted) tuples.push_back(std::move(t));
    return it->second;
  };
  std::vector<int> init;
  for (const auto& p : parts) init.push_back(p.start);
  init.push_back(0);
  prod.start = intern(init);
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    std::vector<int> row(letters);
    for (int c = 0; c < letters; ++c) {
      std::vector<int> t = tuples[k];
      for (std::size_t i = 0; i < parts.size(); ++i) t[i] = parts[i].delta[t[i]][c];
      if (c == Word::star) t.back() = std::min(t.back() + 1, cap);
      row[c] = intern(std::move(t));
    }
    prod.delta.push_back(std::move(row));
  }
  for (const auto& t : tuples) {
    bool contains = false;
    for (std::size_t i = 0; i < parts.size(); ++i) contains = contains || parts[i].accepting[t[i]];
    prod.accepting.push_back(!contains && t.back() == sub.n());
  }
  return {minimize(prod), prod.size()};
}

/// Number of accepted words of each length 0..max_len.
inline std::vector<Integer> count_by_length(const Dfa& a, int max_len) {
  std::vector<Integer> at(a.size(), 0);
  at[a.start] = 1;
  std::vector<Integer> counts;
  for (int len = 0; len <= max_len; ++len) {
    Integer total = 0;
    for (std::size_t q = 0; q < a.size(); ++q)
      if (a.accepting[q]) total += at[q];
    counts.push_back(total);
    if (len == max_len) break;
    std::vector<Integer> next(a.size(), 0);
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (sgn(at[q]) == 0) continue;
      for (int c = 0; c < a.letters; ++c) next[a.delta[q][c]] += at[q];
    }
    at = std::move(next);
  }
  return counts;
}

}  // namespace repstab
