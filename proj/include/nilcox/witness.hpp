#pragma once
/// @file witness.hpp
/// @brief Truncated witness modules certifying infinite-dimensionality.
///
/// A witness recipe is a finite labeled graph: families of basis vectors
/// and edges "generator g sends family X to family Y", some of which
/// increment the replica index. Materialized at truncation depth R, the
/// labels are (family, r) for r <= R; an action that would pass replica R
/// lands on a boundary marker, and relation checks skip any (label,
/// relation) pair whose evaluation touches the boundary, which keeps the
/// verification sound on a finite table. Generator words reaching
/// (first family, r) from (first family, 1) for every r certify that the
/// augmentation ideal is not nilpotent up to depth R.

#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcox/coxeter_matrix.hpp"
#include "nilcox/errors.hpp"

namespace nilcox {

struct WitnessEdge {
  std::string from;
  int generator = 0;
  std::string to;
  bool increment = false;
};

struct WitnessRecipe {
  std::string case_tag;
  std::vector<std::string> families;
  std::vector<WitnessEdge> edges;
};

struct WitnessLabel {
  int family = 0; // index into the module's family list
  int replica = 1;

  bool operator==(const WitnessLabel&) const = default;
  bool operator<(const WitnessLabel& rhs) const {
    if (replica != rhs.replica) return replica < rhs.replica;
    return family < rhs.family;
  }
};

/// A recipe materialized at truncation depth R.
class WitnessModule {
public:
  struct Action {
    enum class Kind { Zero, Boundary, Label };
    Kind kind = Kind::Zero;
    WitnessLabel target;

    static Action zero() { return Action{}; }
    static Action boundary() { return Action{Kind::Boundary, {}}; }
    static Action label(WitnessLabel l) { return Action{Kind::Label, l}; }
  };

  WitnessModule(WitnessRecipe recipe, int depth)
      : recipe_(std::move(recipe)), depth_(depth) {
    if (depth_ < 2) throw DomainError("truncation depth must be at least 2");
    if (recipe_.families.empty())
      throw DomainError("witness recipe needs at least one family");
    for (std::size_t i = 0; i < recipe_.families.size(); ++i) {
      if (!family_index_.emplace(recipe_.families[i], static_cast<int>(i)).second)
        throw DomainError("duplicate family name in witness recipe");
    }
    for (const auto& edge : recipe_.edges) {
      const auto from = family_index_.find(edge.from);
      const auto to = family_index_.find(edge.to);
      if (from == family_index_.end() || to == family_index_.end())
        throw DomainError("witness edge references an unknown family");
      if (edge.generator < 1)
        throw DomainError("witness edge generator must be positive");
      const auto key = std::make_pair(from->second, edge.generator);
      if (!edges_.emplace(key, std::make_pair(to->second, edge.increment)).second)
        throw DomainError("conflicting witness edges for one (family, generator)");
    }
  }

  const WitnessRecipe& recipe() const { return recipe_; }
  const std::string& case_tag() const { return recipe_.case_tag; }
  int truncation_depth() const { return depth_; }
  const std::vector<std::string>& families() const { return recipe_.families; }
  int family_count() const { return static_cast<int>(recipe_.families.size()); }

  /// Labels in replica-major order: (F1,1), (F2,1), ..., (F1,2), ...
  std::vector<WitnessLabel> basis_labels() const {
    std::vector<WitnessLabel> out;
    for (int r = 1; r <= depth_; ++r)
      for (int f = 0; f < family_count(); ++f)
        out.push_back(WitnessLabel{f, r});
    return out;
  }

  std::string label_name(const WitnessLabel& l) const {
    return recipe_.families[static_cast<std::size_t>(l.family)] + "_" +
           std::to_string(l.replica);
  }

  /// One generator applied to one label.
  Action act(int generator, const WitnessLabel& x) const {
    const auto it = edges_.find(std::make_pair(x.family, generator));
    if (it == edges_.end()) return Action::zero();
    const int target_replica = x.replica + (it->second.second ? 1 : 0);
    if (target_replica > depth_) return Action::boundary();
    return Action::label(WitnessLabel{it->second.first, target_replica});
  }

  /// A word of generators applied right-to-left; Boundary is reported as
  /// soon as any step touches it, Zero absorbs.
  Action act_word(const std::vector<int>& word, const WitnessLabel& x) const {
    Action cur = Action::label(x);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (cur.kind != Action::Kind::Label) return cur;
      cur = act(*it, cur.target);
    }
    return cur;
  }

private:
  WitnessRecipe recipe_;
  int depth_;
  std::map<std::string, int> family_index_;
  std::map<std::pair<int, int>, std::pair<int, bool>> edges_;
};

/// Outcome of checking every defining relation of M on a witness module.
struct WitnessVerification {
  bool relations_ok = false;
  std::vector<std::string> violations;
  long long checked_pairs = 0;
  long long skipped_pairs = 0;
  /// reach_words[r-1] sends (first family, 1) to (first family, r), written
  /// in operator order (leftmost letter applied last).
  std::vector<std::vector<int>> reach_words;
  bool all_replicas_reached = false;

  bool ok() const { return relations_ok && all_replicas_reached; }
};

/// Checks every braid relation (finite bonds, m = 2 included) and every
/// order relation of M as operators on all labels, skipping pairs whose
/// evaluation touches the truncation boundary, then finds generator words
/// reaching each replica of the first family.
inline WitnessVerification verify_witness(const CoxeterMatrix& M,
                                          const WitnessModule& module) {
  WitnessVerification report;
  report.relations_ok = true;

  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;
  for (int i = 1; i <= M.size(); ++i) {
    for (int j = i + 1; j <= M.size(); ++j) {
      const int m = M.bond(i, j);
      if (m == kInfiniteBond) continue;
      std::vector<int> lhs, rhs;
      for (int t = 0; t < m; ++t) {
        lhs.push_back(t % 2 == 0 ? i : j);
        rhs.push_back(t % 2 == 0 ? j : i);
      }
      relations.emplace_back(std::move(lhs), std::move(rhs));
    }
  }
  for (int g = 1; g <= M.size(); ++g)
    relations.emplace_back(
        std::vector<int>(static_cast<std::size_t>(M.order(g)), g),
        std::vector<int>{});

  using Action = WitnessModule::Action;
  for (const auto& x : module.basis_labels()) {
    for (const auto& [lhs, rhs] : relations) {
      const Action a = module.act_word(lhs, x);
      const Action b = rhs.empty() ? Action::zero() : module.act_word(rhs, x);
      if (a.kind == Action::Kind::Boundary || b.kind == Action::Kind::Boundary) {
        ++report.skipped_pairs;
        continue;
      }
      ++report.checked_pairs;
      const bool equal =
          a.kind == b.kind &&
          (a.kind != Action::Kind::Label || a.target == b.target);
      if (!equal) {
        report.relations_ok = false;
        std::string word_text;
        for (int l : lhs) word_text += std::to_string(l) + " ";
        report.violations.push_back("relation [" + word_text +
                                    "...] fails on label " +
                                    module.label_name(x));
      }
    }
  }

  std::map<WitnessLabel, std::vector<int>> word_to;
  const WitnessLabel start{0, 1};
  word_to.emplace(start, std::vector<int>{});
  std::deque<WitnessLabel> queue{start};
  while (!queue.empty()) {
    const WitnessLabel x = queue.front();
    queue.pop_front();
    for (int g = 1; g <= M.size(); ++g) {
      const Action a = module.act(g, x);
      if (a.kind != Action::Kind::Label) continue;
      if (word_to.count(a.target)) continue;
      std::vector<int> word{g};
      const auto& base = word_to.at(x);
      word.insert(word.end(), base.begin(), base.end());
      word_to.emplace(a.target, std::move(word));
      queue.push_back(a.target);
    }
  }

  report.all_replicas_reached = true;
  for (int r = 1; r <= module.truncation_depth(); ++r) {
    const auto it = word_to.find(WitnessLabel{0, r});
    if (it == word_to.end()) {
      report.all_replicas_reached = false;
      report.reach_words.push_back({});
      continue;
    }
    report.reach_words.push_back(it->second);
  }
  return report;
}

} // namespace nilcox
