#include "qbmap/enumerate.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "qbmap/bdg.hpp"
#include "qbmap/contour.hpp"

namespace qbmap {

namespace {

void cap(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("enumeration cap exceeded for ") + what);
}

}  // namespace

void for_each_bridge(int sigma, const std::function<void(const Bridge&)>& fn) {
  if (sigma < 1) throw std::invalid_argument("need sigma >= 1");
  cap(sigma <= kMaxBridgeSigma, "bridges");
  // Steps s_k >= -1, partial sums, final value <= 0; depth-first keeps the order lexicographic.
  std::vector<int> v(static_cast<std::size_t>(sigma) + 1, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k > sigma) {
      if (v.back() <= 0) fn(Bridge(v));
      return;
    }
    const int prev = v[static_cast<std::size_t>(k - 1)];
    // Every step is >= -1, so values beyond (sigma - k) above 0 cannot return.
    for (int x = prev - 1; x <= sigma - k; ++x) {
      v[static_cast<std::size_t>(k)] = x;
      rec(k + 1);
    }
  };
  rec(1);
}

std::vector<Bridge> enumerate_bridges(int sigma) {
  std::vector<Bridge> out;
  for_each_bridge(sigma, [&](const Bridge& b) { out.push_back(b); });
  return out;
}

std::vector<ForestShape> enumerate_forest_shapes(int n, int sigma) {
  if (n < 0 || sigma < 1) throw std::invalid_argument("need n >= 0 and sigma >= 1");
  cap(2 * n + sigma <= kMaxForestSize, "forests");
  const int K = 2 * n + sigma;
  std::vector<ForestShape> out;
  ContourPair cp;
  cp.C.assign(static_cast<std::size_t>(K) + 1, 0);
  cp.L.assign(static_cast<std::size_t>(K) + 1, 0);
  cp.C[0] = sigma;
  std::function<void(int, int)> rec = [&](int i, int ups) {
    const int h = cp.C[static_cast<std::size_t>(i)];
    if (i == K) {
      if (h == 0) out.push_back(forest_from_contour(cp).shape());
      return;
    }
    // Down first, staying strictly positive until the last step.
    if (h - 1 > 0 || (h == 1 && i + 1 == K)) {
      cp.C[static_cast<std::size_t>(i) + 1] = h - 1;
      rec(i + 1, ups);
    }
    if (ups < n) {
      cp.C[static_cast<std::size_t>(i) + 1] = h + 1;
      rec(i + 1, ups + 1);
    }
  };
  rec(0, 0);
  return out;
}

void for_each_forest(int n, int sigma, const std::function<void(const WellLabeledForest&)>& fn) {
  for (const ForestShape& shape : enumerate_forest_shapes(n, sigma)) {
    std::vector<VertexId> edges;  // non-floor vertices in preorder
    for (VertexId v = 0; v < shape.vertex_count(); ++v)
      if (!shape.is_floor(v)) edges.push_back(v);
    std::vector<int> inc(edges.size(), -1);
    std::vector<Label> labels(static_cast<std::size_t>(shape.vertex_count()), 0);
    for (;;) {
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const VertexId v = edges[e];
        labels[static_cast<std::size_t>(v)] = labels[static_cast<std::size_t>(shape.parent(v))] + inc[e];
      }
      fn(WellLabeledForest(shape, labels));
      std::size_t k = inc.size();
      while (k > 0 && inc[k - 1] == 1) inc[--k] = -1;
      if (k == 0) break;
      ++inc[k - 1];
    }
  }
}

std::vector<WellLabeledForest> enumerate_forests(int n, int sigma) {
  std::vector<WellLabeledForest> out;
  for_each_forest(n, sigma, [&](const WellLabeledForest& f) { out.push_back(f); });
  return out;
}

std::vector<EnumeratedMap> enumerate_quadrangulations(int n, int sigma) {
  if (n < 0 || sigma < 1) throw std::invalid_argument("need n >= 0 and sigma >= 1");
  cap(2 * n + sigma <= kMaxQuadrangulationSize, "quadrangulations");
  const auto bridges = enumerate_bridges(sigma);
  std::map<CanonicalCode, std::size_t> index;
  std::vector<EnumeratedMap> found;
  for_each_forest(n, sigma, [&](const WellLabeledForest& f) {
    for (const Bridge& b : bridges) {
      PointedBoundaryMap pm = bdg_forward(f, b);
      CanonicalCode code = canonical_code(pm.map);
      auto [it, fresh] = index.emplace(code, found.size());
      if (fresh) found.push_back(EnumeratedMap{std::move(code), std::move(pm.map), 1});
      else ++found[it->second].multiplicity;
    }
  });
  std::vector<EnumeratedMap> out;
  out.reserve(found.size());
  for (const auto& [code, i] : index) out.push_back(std::move(found[i]));
  return out;
}

}  // namespace qbmap
