#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rept {

// A vertex of the two-row set {1..k} u {1'..l'}; index is 1-based.
struct Vertex {
  bool lower = false;
  int index = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// A set partition of {1..k} u {1'..l'} in canonical form. Internally vertices
// are numbered 0..k-1 (top row) then k..k+l-1 (bottom row), and assign_[v] is
// the block index of vertex v with blocks numbered by first appearance in
// that vertex order. Two partitions are equal iff their byte images agree.
class SetPartition {
 public:
  SetPartition() = default;  // the empty partition in P_{0,0}

  // Renumbers an arbitrary block labelling into canonical form.
  static SetPartition from_assign(int upper, int lower, const std::vector<int>& raw);
  // Validates a block list: disjoint, covering, indices in range.
  static SetPartition from_blocks(int upper, int lower,
                                  const std::vector<std::vector<Vertex>>& blocks);

  static SetPartition identity(int n);
  // pi_sigma = {{1, sigma(1)'}, ..., {n, sigma(n)'}}; images are 0-based.
  static SetPartition permutation(const std::vector<int>& images);

  int upper() const { return upper_; }
  int lower() const { return lower_; }
  int num_blocks() const { return blocks_; }
  int block_of(int vertex) const { return assign_[vertex]; }
  const std::vector<uint8_t>& assign() const { return assign_; }

  std::vector<std::vector<Vertex>> blocks() const;

  SetPartition dual() const;  // swap rows; involutive

  // Textual form "{{1,3,1'},{2},{4},{2',3'}} : 4->3".
  std::string str() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

  size_t hash() const;

 private:
  int upper_ = 0, lower_ = 0, blocks_ = 0;
  std::vector<uint8_t> assign_;
};

struct SetPartitionHash {
  size_t operator()(const SetPartition& p) const { return p.hash(); }
};

// beta o alpha for alpha in P_{k,l}, beta in P_{l,m}; returns the composite in
// P_{k,m} and the number of components removed entirely (each worth a factor t).
std::pair<SetPartition, int> compose(const SetPartition& beta, const SetPartition& alpha);

// Horizontal juxtaposition; b's vertices are shifted past a's widths.
SetPartition tensor(const SetPartition& a, const SetPartition& b);

// True iff coarse is coarser than fine (every block of fine lies inside a
// block of coarse). Requires equal widths.
bool is_coarser(const SetPartition& coarse, const SetPartition& fine);

// All partitions strictly coarser than lambda (every way of merging blocks).
std::vector<SetPartition> coarsenings(const SetPartition& lambda);

// Closes the rightmost b strands of an endo-width partition (upper == lower):
// merges top a+j with bottom (a+j)' for the last b positions. Returns the
// restriction to the remaining strands and the count of fully removed
// components.
std::pair<SetPartition, int> close_last(const SetPartition& p, int b);
// Same for the leftmost b strands.
std::pair<SetPartition, int> close_first(const SetPartition& p, int b);

// Named generator partitions.
SetPartition pi_unit();        // pi_*  in P_{0,1}
SetPartition pi_counit();      // pi^*  in P_{1,0}
SetPartition pi_merge();       // pi_H = {{1,2,1',2'}}
SetPartition pi_cross();       // pi_X = {{1,2'},{2,1'}}
SetPartition pairing(int n);   // ev_[n] in P_{2n,0}, joins i with n+i
SetPartition copairing(int n); // coev_[n] in P_{0,2n}
SetPartition symmetry(int a, int b);  // Psi_{[a],[b]} in P_{a+b,a+b}
// C_i = {{1,1'},...,{i,i',n+1,(n+1)'},...,{n,n'}} in End([n+1]); i is 1-based.
SetPartition strand_join(int n, int i);
// E^i_j: joins n+1 into the block of i and (n+1)' into the block of j'.
SetPartition strand_map(int n, int i, int j);

// Parses the textual form; accepts blocks in any order.
SetPartition parse_set_partition(const std::string& s);

}  // namespace rept
