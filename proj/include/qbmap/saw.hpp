#pragma once

#include <vector>

#include "qbmap/planar_map.hpp"

namespace qbmap {

enum class TileKind { quadrangle, step_tile, half_step_tile };

/// Planar map tiled by n quadrangles, sigma - 1 step tiles and two half-step
/// tiles; the distinguished edges form a self-avoiding walk between the two
/// half-step tiles.
class SawConfiguration {
 public:
  /// Throws std::invalid_argument when the tiling rules are violated.
  SawConfiguration(PlanarMap map, std::vector<char> distinguished);

  const PlanarMap& map() const { return map_; }
  const std::vector<char>& distinguished() const { return distinguished_; }
  bool is_distinguished(HalfEdgeId h) const { return distinguished_[static_cast<std::size_t>(h)] != 0; }
  int sigma() const { return sigma_; }
  int n() const { return n_; }
  TileKind tile(int face) const { return tiles_[static_cast<std::size_t>(face)]; }
  /// Faces along the walk, from the half-step tile left of the root to the other one.
  const std::vector<int>& walk() const { return walk_; }

  friend bool operator==(const SawConfiguration& a, const SawConfiguration& b) {
    return a.map_ == b.map_ && a.distinguished_ == b.distinguished_;
  }

 private:
  PlanarMap map_;
  std::vector<char> distinguished_;
  std::vector<TileKind> tiles_;
  std::vector<int> walk_;
  int sigma_ = 0;
  int n_ = 0;
};

/// Adds sigma non-crossing chords joining boundary corner j to corner
/// 2*sigma - 1 - j. New half-edges get ids after those of `q`.
SawConfiguration quadrangulation_to_saw(const BoundaryMap& q);
/// Deletes the distinguished edges, keeping the relative order of the others.
BoundaryMap saw_to_quadrangulation(const SawConfiguration& cfg);

}  // namespace qbmap
