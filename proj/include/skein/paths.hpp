#pragma once

#include <string>
#include <vector>

#include "skein/exec.hpp"

namespace skein::paths {

// Lattice path from (0,0) to (n, h) with unit up/down steps that never goes
// below the x-axis. Heights a_0 = 0, a_i = a_{i-1} +- 1.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::string steps);  // validates; steps over {U, D}

  int length() const { return static_cast<int>(steps_.size()); }
  int end_height() const;
  const std::string& steps() const { return steps_; }
  std::vector<int> heights() const;  // length n+1, starts at 0

  bool operator==(const DyckPath& o) const { return steps_ == o.steps_; }
  bool operator<(const DyckPath& o) const { return steps_ < o.steps_; }

 private:
  std::string steps_;
};

// Path with a distinguished down step from height k to k-1: heights satisfy
// a_index = k, a_{index+1} = k-1.
struct MarkedPath {
  DyckPath path;
  int index = 0;

  bool operator==(const MarkedPath& o) const {
    return index == o.index && path == o.path;
  }
  bool operator<(const MarkedPath& o) const {
    return path < o.path || (path == o.path && index < o.index);
  }
};

// All paths from (0,0) to (n,h), lexicographic by step string with U < D.
std::vector<DyckPath> enumerate_paths(int n, int h);

// Reflection-principle count C(n,(n+h)/2) - C(n,(n+h)/2+1); 0 outside range.
long long count_paths_closed(int n, int h);

// Ascending indices i with a_i = k and a_{i+1} = k-1.
std::vector<int> down_steps(const DyckPath& p, int k);

// Total number of k-down steps over all paths to (n,h), by enumeration.
long long alpha_enumerate(int n, int h, int k, Exec ex = Exec::serial);

// The same count in closed form:
// C(n,(n+h+2k-2s)/2) - C(n,(n+h+2k)/2+1) with s = min(k-1, h).
long long alpha_closed(int n, int h, int k);

// The cut point inside the tail segment; the text and the figure caption of
// the source construction disagree, so both rules are implemented and the
// roundtrip tests arbitrate.
enum class LowestPointRule { leftmost, rightmost };

struct ThetaImage {
  DyckPath path;  // lands in the paths to (n, 2k-2j+h)
  int j = 0;      // cut depth, 0 <= j <= min(k-1, h)
};

// Cut-reflect-glue map sending a k-marked path to an unmarked path ending
// higher; bijective onto the disjoint union over j.
ThetaImage theta_map(const MarkedPath& m, int k,
                     LowestPointRule rule = LowestPointRule::leftmost);

// Inverse of theta_map; the endpoint height of p must equal 2k-2j+h for some
// admissible j.
MarkedPath phi_map(const DyckPath& p, int k, int h,
                   LowestPointRule rule = LowestPointRule::leftmost);

}  // namespace skein::paths
