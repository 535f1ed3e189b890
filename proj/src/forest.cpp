#include "qbmap/forest.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qbmap {

namespace {

// Length of the preorder child-count encoding of the tree starting at `first`,
// or 0 when the sequence ends before the tree is complete.
std::size_t tree_extent(std::span<const int> counts, std::size_t first) {
  long open = 1;
  for (std::size_t i = first; i < counts.size(); ++i) {
    if (counts[i] < 0) throw std::invalid_argument("negative child count");
    open += counts[i] - 1;
    if (open == 0) return i - first + 1;
  }
  return 0;
}

}  // namespace

ForestShape::ForestShape(int sigma, std::vector<int> child_counts)
    : sigma_(sigma), child_counts_(std::move(child_counts)) {
  if (sigma_ < 1) throw std::invalid_argument("forest needs at least one tree");
  const std::size_t total = child_counts_.size();
  roots_.reserve(static_cast<std::size_t>(sigma_) + 1);
  parent_.assign(total, -1);
  depth_.assign(total, 0);
  tree_of_.assign(total, 0);

  std::size_t pos = 0;
  std::vector<VertexId> stack;      // vertices with children still to attach
  std::vector<int> remaining;
  for (int t = 0; t < sigma_; ++t) {
    if (pos >= total) throw std::invalid_argument("fewer trees than sigma");
    const std::size_t extent = tree_extent(child_counts_, pos);
    if (extent == 0) throw std::invalid_argument("tree " + std::to_string(t) + " is truncated");
    roots_.push_back(static_cast<VertexId>(pos));
    for (std::size_t i = pos; i < pos + extent; ++i) {
      const auto v = static_cast<VertexId>(i);
      tree_of_[i] = t;
      if (!stack.empty()) {
        const VertexId p = stack.back();
        parent_[i] = p;
        depth_[i] = depth_[static_cast<std::size_t>(p)] + 1;
        if (--remaining.back() == 0) {
          stack.pop_back();
          remaining.pop_back();
        }
      }
      if (child_counts_[i] > 0) {
        stack.push_back(v);
        remaining.push_back(child_counts_[i]);
      }
    }
    pos += extent;
  }
  if (pos != total) throw std::invalid_argument("child counts extend past the last tree");
  roots_.push_back(static_cast<VertexId>(total));
}

ForestShape ForestShape::from_trees(const std::vector<std::vector<int>>& trees) {
  std::vector<int> flat;
  for (const auto& t : trees) {
    if (t.empty()) throw std::invalid_argument("empty tree encoding");
    const std::size_t extent = tree_extent(t, 0);
    if (extent != t.size()) throw std::invalid_argument("invalid preorder child-count sequence");
    flat.insert(flat.end(), t.begin(), t.end());
  }
  return ForestShape(static_cast<int>(trees.size()), std::move(flat));
}

ForestShape ForestShape::from_preorder(int sigma, std::vector<int> child_counts) {
  return ForestShape(sigma, std::move(child_counts));
}

ForestShape ForestShape::bare(int sigma) {
  return ForestShape(sigma, std::vector<int>(static_cast<std::size_t>(sigma > 0 ? sigma : 0), 0));
}

std::span<const int> ForestShape::tree(int t) const {
  const auto b = static_cast<std::size_t>(roots_.at(static_cast<std::size_t>(t)));
  const auto e = static_cast<std::size_t>(roots_.at(static_cast<std::size_t>(t) + 1));
  return std::span<const int>(child_counts_).subspan(b, e - b);
}

int ForestShape::tree_size(int t) const {
  return roots_.at(static_cast<std::size_t>(t) + 1) - roots_.at(static_cast<std::size_t>(t));
}

int ForestShape::tree_of(VertexId v) const {
  if (v == phantom()) return sigma_;
  return tree_of_.at(static_cast<std::size_t>(v));
}

std::vector<std::vector<int>> ForestShape::to_trees() const {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(sigma_));
  for (int t = 0; t < sigma_; ++t) {
    const auto s = tree(t);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

WellLabeledForest::WellLabeledForest(ForestShape shape, std::vector<Label> labels)
    : shape_(std::move(shape)), labels_(std::move(labels)) {
  if (labels_.size() != static_cast<std::size_t>(shape_.vertex_count()))
    throw std::invalid_argument("label count does not match vertex count");
  for (VertexId v = 0; v < shape_.vertex_count(); ++v) {
    const VertexId p = shape_.parent(v);
    if (p < 0) {
      if (label(v) != 0) throw std::invalid_argument("floor vertex with nonzero label");
    } else if (std::abs(label(v) - label(p)) > 1) {
      throw std::invalid_argument("labels differ by more than one along a tree edge");
    }
  }
}

}  // namespace qbmap
