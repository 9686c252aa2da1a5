#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqsched/core.hpp"

namespace seqsched {

// Permutation of the jobs; position d holds the job that moves d-th.
class PlayerOrder {
 public:
  PlayerOrder() = default;
  explicit PlayerOrder(std::vector<int> jobs) : jobs_(std::move(jobs)) {
    std::vector<bool> seen(jobs_.size(), false);
    for (int j : jobs_) {
      if (j < 0 || j >= static_cast<int>(jobs_.size()) || seen[j]) {
        throw std::invalid_argument("player order is not a permutation");
      }
      seen[j] = true;
    }
  }
  static PlayerOrder identity(int n) {
    std::vector<int> v(n);
    for (int j = 0; j < n; ++j) v[j] = j;
    return PlayerOrder(std::move(v));
  }
  // "1,5,2,3,4" (1-based).
  static PlayerOrder parse(std::string_view text) {
    std::vector<int> v;
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) throw std::invalid_argument("empty entry in player order");
      const Rational r = Rational::parse(tok);
      if (!r.is_integer() || r.num() < 1) {
        throw std::invalid_argument("bad player index '" + tok + "'");
      }
      v.push_back(static_cast<int>(r.num()) - 1);
      tok.clear();
    };
    for (char c : text) {
      if (c == ',') {
        flush();
      } else if (c != ' ') {
        tok += c;
      }
    }
    if (!tok.empty() || !v.empty()) flush();
    return PlayerOrder(std::move(v));
  }

  int size() const { return static_cast<int>(jobs_.size()); }
  int operator[](int d) const { return jobs_[d]; }
  const std::vector<int>& jobs() const { return jobs_; }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t d = 0; d < jobs_.size(); ++d) {
      if (d) out += ',';
      out += "J" + std::to_string(jobs_[d] + 1);
    }
    return out + ")";
  }

  friend bool operator==(const PlayerOrder&, const PlayerOrder&) = default;

 private:
  std::vector<int> jobs_;
};

// Complete m-ary decision tree. Internal nodes carry the moving job; child c
// of a node is the subtree after that job picks machine c. Node ids are
// dense indices; leaves have player() == kLeaf.
class AdaptiveTree {
 public:
  static constexpr int kLeaf = -1;

  AdaptiveTree(int jobs, int machines) : jobs_(jobs), machines_(machines) {
    if (machines < 1) throw std::invalid_argument("tree needs m >= 1");
  }

  int add_leaf() {
    player_.push_back(kLeaf);
    children_.insert(children_.end(), machines_, -1);
    return static_cast<int>(player_.size()) - 1;
  }

  int add_node(int player, std::span<const int> children) {
    if (static_cast<int>(children.size()) != machines_) {
      throw std::invalid_argument("internal node needs exactly m children");
    }
    for (int c : children) {
      if (c < 0 || c >= node_count()) throw std::invalid_argument("unknown child node");
    }
    player_.push_back(player);
    children_.insert(children_.end(), children.begin(), children.end());
    return static_cast<int>(player_.size()) - 1;
  }

  void set_root(int node) { root_ = node; }

  // Fixed-order tree, nodes numbered in level order: child c of node k is
  // node k*m + c + 1.
  static AdaptiveTree from_order(const PlayerOrder& order, int machines) {
    AdaptiveTree t(order.size(), machines);
    const int n = order.size();
    std::uint64_t count = 0;
    for (int d = 0; d <= n; ++d) {
      count += saturating_pow(static_cast<std::uint64_t>(machines), d);
      if (count > (std::uint64_t{1} << 26)) throw BudgetExceeded("order tree too large");
    }
    t.player_.assign(count, kLeaf);
    t.children_.assign(count * machines, -1);
    std::uint64_t level_start = 0;
    std::uint64_t level_size = 1;
    for (int d = 0; d < n; ++d) {
      for (std::uint64_t k = level_start; k < level_start + level_size; ++k) {
        t.player_[k] = order[d];
        for (int c = 0; c < machines; ++c) {
          t.children_[k * machines + c] = static_cast<int>(k * machines + c + 1);
        }
      }
      level_start += level_size;
      level_size *= machines;
    }
    t.root_ = 0;
    return t;
  }

  int jobs() const { return jobs_; }
  int machines() const { return machines_; }
  int root() const { return root_; }
  int node_count() const { return static_cast<int>(player_.size()); }
  int player(int node) const { return player_[node]; }
  bool is_leaf(int node) const { return player_[node] == kLeaf; }
  int child(int node, int machine) const { return children_[static_cast<std::size_t>(node) * machines_ + machine]; }

  int internal_count() const {
    return static_cast<int>(std::count_if(player_.begin(), player_.end(),
                                          [](int p) { return p != kLeaf; }));
  }

  // Every root-to-leaf path names each job exactly once and every internal
  // node has m children.
  void validate() const {
    if (root_ < 0 || root_ >= node_count()) throw std::invalid_argument("tree has no root");
    std::vector<bool> used(jobs_, false);
    auto walk = [&](auto&& self, int node, int depth) -> void {
      if (is_leaf(node)) {
        if (depth != jobs_) {
          throw std::invalid_argument("leaf at depth " + std::to_string(depth) + ", expected " +
                                      std::to_string(jobs_));
        }
        return;
      }
      const int p = player(node);
      if (p < 0 || p >= jobs_) throw std::invalid_argument("node names unknown job");
      if (used[p]) {
        throw std::invalid_argument("job J" + std::to_string(p + 1) + " repeated on a path");
      }
      used[p] = true;
      for (int c = 0; c < machines_; ++c) {
        const int ch = child(node, c);
        if (ch < 0) throw std::invalid_argument("internal node missing a child");
        self(self, ch, depth + 1);
      }
      used[p] = false;
    };
    walk(walk, root_, 0);
  }

  // Parenthesized preorder: "J1(J2(.,.),J3(.,.))"; "." is a leaf.
  std::string to_string() const {
    std::string out;
    auto walk = [&](auto&& self, int node) -> void {
      if (is_leaf(node)) {
        out += '.';
        return;
      }
      out += "J" + std::to_string(player(node) + 1) + "(";
      for (int c = 0; c < machines_; ++c) {
        if (c) out += ',';
        self(self, child(node, c));
      }
      out += ')';
    };
    walk(walk, root_);
    return out;
  }

  // Inverse of to_string().
  static AdaptiveTree parse(std::string_view text, int jobs, int machines) {
    AdaptiveTree t(jobs, machines);
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto expect = [&](char c) {
      skip();
      if (pos >= text.size() || text[pos] != c) {
        throw std::invalid_argument(std::string("tree notation: expected '") + c + "' at offset " +
                                    std::to_string(pos));
      }
      ++pos;
    };
    auto node = [&](auto&& self) -> int {
      skip();
      if (pos < text.size() && text[pos] == '.') {
        ++pos;
        return t.add_leaf();
      }
      expect('J');
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (start == pos) throw std::invalid_argument("tree notation: missing job number");
      const int p = std::stoi(std::string(text.substr(start, pos - start))) - 1;
      expect('(');
      std::vector<int> kids;
      for (int c = 0; c < machines; ++c) {
        if (c) expect(',');
        kids.push_back(self(self));
      }
      expect(')');
      return t.add_node(p, kids);
    };
    t.root_ = node(node);
    skip();
    if (pos != text.size()) throw std::invalid_argument("tree notation: trailing characters");
    t.validate();
    return t;
  }

 private:
  int jobs_;
  int machines_;
  int root_ = -1;
  std::vector<int> player_;
  std::vector<int> children_;
};

}  // namespace seqsched
