#include "qbmap/contour.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qbmap {

std::vector<VertexId> facial_sequence(const ForestShape& shape) {
  std::vector<VertexId> seq;
  seq.reserve(static_cast<std::size_t>(shape.corner_count()) + 1);
  std::vector<VertexId> stack;
  std::vector<int> left;
  VertexId next_id = 0;
  for (int t = 0; t < shape.tree_count(); ++t) {
    const VertexId root = next_id++;
    seq.push_back(root);
    stack.push_back(root);
    left.push_back(shape.child_count(root));
    while (!stack.empty()) {
      if (left.back() > 0) {
        --left.back();
        const VertexId child = next_id++;
        seq.push_back(child);
        stack.push_back(child);
        left.push_back(shape.child_count(child));
      } else {
        stack.pop_back();
        left.pop_back();
        if (!stack.empty()) seq.push_back(stack.back());
      }
    }
  }
  seq.push_back(shape.phantom());
  return seq;
}

std::vector<int> ContourPair::running_min() const {
  std::vector<int> m(C.size());
  int cur = C.empty() ? 0 : C.front();
  for (std::size_t i = 0; i < C.size(); ++i) {
    cur = std::min(cur, C[i]);
    m[i] = cur;
  }
  return m;
}

ContourPair contour_pair(const WellLabeledForest& wlf) {
  const ForestShape& shape = wlf.shape();
  const auto seq = facial_sequence(shape);
  const int sigma = shape.tree_count();
  ContourPair cp;
  cp.C.reserve(seq.size());
  cp.L.reserve(seq.size());
  for (VertexId v : seq) {
    if (v == shape.phantom()) {
      cp.C.push_back(0);
      cp.L.push_back(0);
    } else {
      cp.C.push_back(shape.depth(v) + sigma - shape.tree_of(v));
      cp.L.push_back(wlf.label(v));
    }
  }
  return cp;
}

WellLabeledForest forest_from_contour(const ContourPair& cp) {
  const auto& C = cp.C;
  const auto& L = cp.L;
  if (C.size() != L.size() || C.size() < 2) throw std::invalid_argument("contour pair size mismatch");
  const int sigma = C.front();
  if (sigma < 1 || C.back() != 0) throw std::invalid_argument("contour must run from sigma to 0");
  if (L.front() != 0) throw std::invalid_argument("first floor vertex must have label 0");

  std::vector<int> counts{0};
  std::vector<int> labels{0};
  std::vector<int> parent{-1};
  int cur = 0;
  int trees = 1;
  const std::size_t last = C.size() - 1;
  for (std::size_t i = 0; i < last; ++i) {
    const int step = C[i + 1] - C[i];
    if (step == 1) {
      const int child = static_cast<int>(counts.size());
      ++counts[static_cast<std::size_t>(cur)];
      counts.push_back(0);
      parent.push_back(cur);
      if (std::abs(L[i + 1] - labels[static_cast<std::size_t>(cur)]) > 1)
        throw std::invalid_argument("label jump along a tree edge");
      labels.push_back(L[i + 1]);
      cur = child;
    } else if (step == -1) {
      const int p = parent[static_cast<std::size_t>(cur)];
      if (p >= 0) {
        cur = p;
        if (L[i + 1] != labels[static_cast<std::size_t>(cur)])
          throw std::invalid_argument("spatial contour disagrees on a revisited vertex");
      } else if (i + 1 == last) {
        if (L[i + 1] != 0) throw std::invalid_argument("phantom floor vertex must have label 0");
      } else {
        if (L[i + 1] != 0) throw std::invalid_argument("floor vertex with nonzero label");
        cur = static_cast<int>(counts.size());
        counts.push_back(0);
        parent.push_back(-1);
        labels.push_back(0);
        ++trees;
      }
    } else {
      throw std::invalid_argument("contour steps must be +1 or -1");
    }
  }
  if (trees != sigma || parent[static_cast<std::size_t>(cur)] != -1)
    throw std::invalid_argument("contour does not close after sigma trees");
  return WellLabeledForest(ForestShape::from_preorder(sigma, std::move(counts)), std::move(labels));
}

int oldest_ancestor(const ContourPair& cp, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= cp.C.size()) throw std::out_of_range("contour index out of range");
  int m = cp.C.front();
  for (int k = 1; k <= i; ++k) m = std::min(m, cp.C[static_cast<std::size_t>(k)]);
  return cp.sigma() - m + 1;
}

std::vector<int> ShiftedLabelSequence::normalized() const {
  std::vector<int> out(values.begin(), values.end() - 1);
  for (int& x : out) x = x - min_value + 1;
  return out;
}

std::vector<int> shifted_vertex_labels(const WellLabeledForest& wlf, const Bridge& b) {
  const ForestShape& shape = wlf.shape();
  if (shape.tree_count() != b.sigma()) throw std::invalid_argument("forest and bridge disagree on sigma");
  std::vector<int> out(static_cast<std::size_t>(shape.vertex_count()) + 1);
  for (VertexId v = 0; v < shape.vertex_count(); ++v)
    out[static_cast<std::size_t>(v)] = wlf.label(v) + b[shape.tree_of(v)];
  out.back() = b.end();
  return out;
}

ShiftedLabelSequence shifted_labels(const WellLabeledForest& wlf, const Bridge& b) {
  const auto per_vertex = shifted_vertex_labels(wlf, b);
  const auto seq = facial_sequence(wlf.shape());
  ShiftedLabelSequence out;
  out.values.reserve(seq.size());
  for (VertexId v : seq) out.values.push_back(per_vertex[static_cast<std::size_t>(v)]);
  out.min_value = *std::min_element(out.values.begin(), out.values.end() - 1);
  return out;
}

std::vector<int> successors(const std::vector<int>& lt) {
  const int K = static_cast<int>(lt.size());
  std::vector<int> succ(lt.size(), kPointed);
  if (K == 0) return succ;
  const int top = *std::max_element(lt.begin(), lt.end());
  std::vector<int> next_at(static_cast<std::size_t>(top) + 2, -1);
  for (int idx = 2 * K - 1; idx >= 0; --idx) {
    const int j = idx % K;
    const int l = lt[static_cast<std::size_t>(j)];
    if (l < 1) throw std::invalid_argument("normalized labels must be positive");
    if (idx < K && l > 1) {
      succ[static_cast<std::size_t>(j)] = next_at[static_cast<std::size_t>(l - 1)];
      if (succ[static_cast<std::size_t>(j)] < 0) throw std::invalid_argument("label sequence has no successor");
    }
    next_at[static_cast<std::size_t>(l)] = j;
  }
  return succ;
}

int successor(const std::vector<int>& lt, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= lt.size()) throw std::out_of_range("corner index out of range");
  const int K = static_cast<int>(lt.size());
  const int want = lt[static_cast<std::size_t>(i)] - 1;
  if (want < 1) return kPointed;
  for (int s = 1; s < K; ++s) {
    const int k = (i + s) % K;
    if (lt[static_cast<std::size_t>(k)] == want) return k;
  }
  throw std::invalid_argument("label sequence has no successor");
}

}  // namespace qbmap
