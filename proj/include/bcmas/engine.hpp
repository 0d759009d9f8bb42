#pragma once

// Stable models of LogicProgram: reduct, least model, the stability test and
// a backtracking enumerator. The enumerator only prunes with consequences
// every stable model satisfies (it is a model of the program, read
// classically, and each true atom has a rule with a true body); every
// complete assignment it reaches is confirmed with is_stable.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcmas/error.hpp"
#include "bcmas/program.hpp"

namespace bcmas {

// Sorted, duplicate-free atom ids taken true.
using Interpretation = std::vector<AtomId>;
using ModelSet = std::vector<Interpretation>;

inline constexpr std::uint64_t default_max_candidates = std::uint64_t{1} << 26;

// Honors BCMAS_MAX_CANDIDATES when set to a positive integer.
inline std::uint64_t max_candidates_from_env() {
  if (const char* v = std::getenv("BCMAS_MAX_CANDIDATES")) {
    char* end = nullptr;
    auto n = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && n > 0) return n;
  }
  return default_max_candidates;
}

struct EngineOptions {
  std::uint64_t max_candidates = default_max_candidates;
  bool naive = false;
  std::size_t naive_atom_limit = 26;
  std::size_t max_models = 0;  // 0 = all
  // Atoms fixed before search.
  std::map<AtomId, bool> assumptions;
};

inline LogicProgram reduct(const LogicProgram& p, const Interpretation& x) {
  std::vector<bool> in(p.size(), false);
  for (auto a : x) in.at(a) = true;
  LogicProgram out = p;
  out.rules.clear();
  for (const auto& r : p.rules) {
    bool keep = std::none_of(r.naf.begin(), r.naf.end(), [&](AtomId a) { return in[a]; }) &&
                std::all_of(r.nnaf.begin(), r.nnaf.end(), [&](AtomId a) { return in[a]; });
    if (keep) out.rules.push_back({r.head, r.pos, {}, {}});
  }
  return out;
}

// Constraints are ignored; they are not part of the fixpoint.
inline Interpretation least_model(const LogicProgram& p) {
  std::vector<bool> in(p.size(), false);
  for (const auto& r : p.rules)
    if (!r.is_positive()) throw ModelError("least_model needs a positive program");
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : p.rules) {
      if (!r.head || in[*r.head]) continue;
      if (std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return in[a]; })) {
        in[*r.head] = true;
        changed = true;
      }
    }
  }
  Interpretation out;
  for (AtomId a = 0; a < p.size(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

namespace detail {

inline bool body_true(const Rule& r, const std::vector<bool>& in) {
  for (auto a : r.pos)
    if (!in[a]) return false;
  for (auto a : r.naf)
    if (in[a]) return false;
  for (auto a : r.nnaf)
    if (!in[a]) return false;
  return true;
}

// Stability on a bitset, without building the reduct explicitly.
inline bool is_stable_bits(const LogicProgram& p, const std::vector<bool>& in) {
  for (const auto& r : p.rules)
    if (body_true(r, in) && (!r.head || !in[*r.head])) return false;
  std::vector<bool> lm(p.size(), false);
  std::vector<const Rule*> active;
  for (const auto& r : p.rules) {
    if (!r.head) continue;
    bool keep = std::none_of(r.naf.begin(), r.naf.end(), [&](AtomId a) { return in[a]; }) &&
                std::all_of(r.nnaf.begin(), r.nnaf.end(), [&](AtomId a) { return in[a]; });
    if (keep) active.push_back(&r);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule* r : active) {
      if (lm[*r->head]) continue;
      if (std::all_of(r->pos.begin(), r->pos.end(), [&](AtomId a) { return lm[a]; })) {
        lm[*r->head] = true;
        changed = true;
      }
    }
  }
  return lm == in;
}

}  // namespace detail

inline bool is_stable(const LogicProgram& p, const Interpretation& x) {
  std::vector<bool> in(p.size(), false);
  for (auto a : x) in.at(a) = true;
  return detail::is_stable_bits(p, in);
}

namespace detail {

class Search {
 public:
  Search(const LogicProgram& p, const EngineOptions& opts,
         const std::function<bool(const Interpretation&)>& on_model)
      : p_(p), opts_(opts), on_model_(on_model), val_(p.size(), unknown), heads_(p.size()), occurs_(p.size()) {
    for (std::size_t r = 0; r < p.rules.size(); ++r) {
      const Rule& rule = p.rules[r];
      Compiled c;
      c.head = rule.head ? static_cast<int>(*rule.head) : -1;
      for (auto a : rule.pos) c.body.push_back({a, true});
      for (auto a : rule.naf) c.body.push_back({a, false});
      for (auto a : rule.nnaf) c.body.push_back({a, true});
      for (const auto& [a, v] : c.body) occurs_[a].push_back(r);
      if (rule.head) heads_[*rule.head].push_back(r);
      rules_.push_back(std::move(c));
    }
    order_ = branch_order();
  }

  void run() {
    for (const auto& [a, v] : opts_.assumptions) {
      if (a >= p_.size()) throw ModelError("assumption on unknown atom");
      if (!assign(a, v)) return;
    }
    for (std::size_t r = 0; r < rules_.size(); ++r) queue_rule(r);
    for (AtomId a = 0; a < p_.size(); ++a) queue_.push_back(a);
    if (!propagate()) return;
    dfs();
  }

  std::uint64_t candidates() const { return count_; }

 private:
  static constexpr std::int8_t unknown = -1;

  struct Compiled {
    int head = -1;
    std::vector<std::pair<AtomId, bool>> body;  // literal holds iff atom == value
  };

  // Time-0 exactly-one atoms, then actions by time, then everything else.
  std::vector<AtomId> branch_order() const {
    std::vector<AtomId> order;
    std::vector<bool> seen(p_.size(), false);
    auto push = [&](AtomId a) {
      if (!seen[a]) {
        seen[a] = true;
        order.push_back(a);
      }
    };
    for (auto [t, f] : p_.exactly_one_groups)
      if (p_.atom(t).time == 0) {
        push(t);
        push(f);
      }
    std::vector<AtomId> acts;
    for (AtomId a = 0; a < p_.size(); ++a)
      if (p_.atom(a).action && p_.atom(a).literal.positive) acts.push_back(a);
    std::stable_sort(acts.begin(), acts.end(), [&](AtomId x, AtomId y) { return p_.atom(x).time < p_.atom(y).time; });
    for (auto a : acts) push(a);
    for (AtomId a = 0; a < p_.size(); ++a) push(a);
    return order;
  }

  bool assign(AtomId a, bool v) {
    std::int8_t want = v ? 1 : 0;
    if (val_[a] == want) return true;
    if (val_[a] != unknown) return false;
    val_[a] = want;
    trail_.push_back(a);
    queue_.push_back(a);
    return true;
  }

  void queue_rule(std::size_t r) { rule_queue_.push_back(r); }

  // Returns false on conflict.
  bool check_rule(std::size_t r) {
    const Compiled& c = rules_[r];
    std::size_t open = 0;
    const std::pair<AtomId, bool>* last = nullptr;
    for (const auto& lit : c.body) {
      std::int8_t v = val_[lit.first];
      if (v == unknown) {
        ++open;
        last = &lit;
      } else if ((v == 1) != lit.second) {
        return true;  // body false
      }
    }
    bool head_false = c.head < 0 || val_[c.head] == 0;
    if (open == 0) return c.head < 0 ? false : assign(c.head, true);
    if (head_false && open == 1) return assign(last->first, !last->second);
    return true;
  }

  bool blocked(std::size_t r) const {
    for (const auto& [a, v] : rules_[r].body)
      if (val_[a] != unknown && (val_[a] == 1) != v) return true;
    return false;
  }

  bool check_support(AtomId h) {
    if (val_[h] == 0) return true;
    std::size_t live = 0, which = 0;
    for (auto r : heads_[h])
      if (!blocked(r)) {
        ++live;
        which = r;
      }
    if (live == 0) return assign(h, false);
    if (live == 1 && val_[h] == 1)
      for (const auto& [a, v] : rules_[which].body)
        if (!assign(a, v)) return false;
    return true;
  }

  bool propagate() {
    while (!queue_.empty() || !rule_queue_.empty()) {
      if (!rule_queue_.empty()) {
        std::size_t r = rule_queue_.back();
        rule_queue_.pop_back();
        if (!check_rule(r)) return fail();
        continue;
      }
      AtomId a = queue_.back();
      queue_.pop_back();
      for (auto r : heads_[a])
        if (!check_rule(r)) return fail();
      for (auto r : occurs_[a]) {
        if (!check_rule(r)) return fail();
        if (rules_[r].head >= 0 && !check_support(static_cast<AtomId>(rules_[r].head))) return fail();
      }
      if (!check_support(a)) return fail();
    }
    return true;
  }

  bool fail() {
    queue_.clear();
    rule_queue_.clear();
    return false;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      val_[trail_.back()] = unknown;
      trail_.pop_back();
    }
  }

  void tick() {
    if (++count_ > opts_.max_candidates)
      throw ResourceLimit("search exceeded " + std::to_string(opts_.max_candidates) +
                          " candidates; raise --max-candidates or BCMAS_MAX_CANDIDATES");
  }

  // Returns false once enough models have been found.
  bool dfs() {
    tick();
    std::optional<AtomId> pick;
    for (auto a : order_)
      if (val_[a] == unknown) {
        pick = a;
        break;
      }
    if (!pick) {
      std::vector<bool> in(p_.size());
      for (AtomId a = 0; a < p_.size(); ++a) in[a] = val_[a] == 1;
      if (!is_stable_bits(p_, in)) return true;
      Interpretation x;
      for (AtomId a = 0; a < p_.size(); ++a)
        if (in[a]) x.push_back(a);
      return on_model_(x);
    }
    for (bool v : {false, true}) {
      std::size_t mark = trail_.size();
      if (assign(*pick, v) && propagate())
        if (!dfs()) return false;
      undo(mark);
    }
    return true;
  }

  const LogicProgram& p_;
  const EngineOptions& opts_;
  const std::function<bool(const Interpretation&)>& on_model_;
  std::vector<std::int8_t> val_;
  std::vector<Compiled> rules_;
  std::vector<std::vector<std::size_t>> heads_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<AtomId> order_;
  std::vector<AtomId> trail_;
  std::vector<AtomId> queue_;
  std::vector<std::size_t> rule_queue_;
  std::uint64_t count_ = 0;
};

inline void enumerate_naive(const LogicProgram& p, const EngineOptions& opts,
                            const std::function<bool(const Interpretation&)>& on_model) {
  const std::size_t n = p.size();
  if (n > opts.naive_atom_limit)
    throw ResourceLimit("naive enumeration over " + std::to_string(n) + " atoms exceeds the limit of " +
                        std::to_string(opts.naive_atom_limit));
  const std::uint64_t total = std::uint64_t{1} << n;
  if (total > opts.max_candidates)
    throw ResourceLimit("naive enumeration needs " + std::to_string(total) + " candidates; cap is " +
                        std::to_string(opts.max_candidates));
  std::vector<bool> in(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) {
      in[a] = (mask >> a) & 1;
      auto it = opts.assumptions.find(static_cast<AtomId>(a));
      if (it != opts.assumptions.end() && it->second != in[a]) ok = false;
    }
    if (!ok || !is_stable_bits(p, in)) continue;
    Interpretation x;
    for (AtomId a = 0; a < n; ++a)
      if (in[a]) x.push_back(a);
    if (!on_model(x)) return;
  }
}

}  // namespace detail

// Streams stable models to `on_model` until it returns false. Order is the
// search order, not canonical.
inline void for_each_model(const LogicProgram& p, const EngineOptions& opts,
                           const std::function<bool(const Interpretation&)>& on_model) {
  if (opts.naive) {
    detail::enumerate_naive(p, opts, on_model);
    return;
  }
  detail::Search s(p, opts, on_model);
  s.run();
}

inline ModelSet enumerate(const LogicProgram& p, const EngineOptions& opts = {}) {
  ModelSet out;
  for_each_model(p, opts, [&](const Interpretation& x) {
    out.push_back(x);
    return opts.max_models == 0 || out.size() < opts.max_models;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::string> model_names(const LogicProgram& p, const Interpretation& x) {
  std::vector<std::string> out;
  for (auto a : x) out.push_back(p.name(a));
  return out;
}

inline nlohmann::json models_to_json(const LogicProgram& p, const ModelSet& models) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : models) out.push_back(model_names(p, m));
  return out;
}

inline std::string models_to_text(const LogicProgram& p, const ModelSet& models) {
  std::string out;
  for (std::size_t i = 0; i < models.size(); ++i) {
    out += "Model " + std::to_string(i + 1) + ":";
    for (const auto& n : model_names(p, models[i])) out += " " + n;
    out += "\n";
  }
  out += "Models: " + std::to_string(models.size()) + "\n";
  return out;
}

}  // namespace bcmas
