#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tkh/poly.hpp"
#include "tkh/rational.hpp"

namespace tkh {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return i < length() ? parts[static_cast<std::size_t>(i)] : 0; }
  Partition conjugate() const;
  // Dominance order on partitions of equal size.
  bool dominates(const Partition& o) const;
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.parts != b.parts; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

Partition parse_partition(const std::string& s);

struct BoxStat {
  int row = 0, col = 0;
  int arm = 0, leg = 0;
  int coarm = 0, coleg = 0;
};

// Boxes in row-major order.
std::vector<BoxStat> box_stats(const Partition& p);
// n! / prod hooks.
Integer hook_count(const Partition& p);
// Reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);
// All partitions with at most `rows` parts, each at most `max_part`.
std::vector<Partition> partitions_in_box(int rows, int max_part);

struct StandardTableau {
  Partition shape;
  std::vector<std::pair<int, int>> position;  // position[i-1] = (row, col) of label i

  int size() const { return static_cast<int>(position.size()); }
  std::vector<std::vector<int>> rows() const;
};

/**
 * Streams the standard Young tableaux of a shape without materialising them.
 * Tableaux are encoded by their row words (row of label 1, 2, ...) and visited
 * in lexicographic order of that word.
 */
class SytEnumerator {
 public:
  explicit SytEnumerator(Partition shape);
  // Advances to the next tableau; false when exhausted.
  bool next();
  const StandardTableau& current() const { return tab_; }

 private:
  bool fill_from(std::size_t pos);
  void build();

  Partition shape_;
  std::vector<int> word_;
  std::vector<int> counts_;
  bool started_ = false;
  bool done_ = false;
  StandardTableau tab_;
};

std::vector<StandardTableau> syt_of(const Partition& shape);

// chi_i = q^col * t^(-row) in variables {qvar, tvar}; i is 1-based.
Poly box_weight(const StandardTableau& t, int i, const std::vector<std::string>& vars, int qvar, int tvar);

}  // namespace tkh
