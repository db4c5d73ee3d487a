#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "percoperm/percolation.hpp"
#include "percoperm/permutation.hpp"

namespace percoperm {

/// Round "( , )" when the left part's values sit just below the right's;
/// Square "[ , ]" when they sit just above.
enum class MeldKind { Round, Square };

inline MeldKind toggled(MeldKind k) { return k == MeldKind::Round ? MeldKind::Square : MeldKind::Round; }

/// Binary merge history over a contiguous run of positions whose values form
/// a consecutive integer interval. Immutable; subtrees are shared.
class Meld {
 public:
  static Meld leaf(int value, int position);

  /// Merges two position-adjacent melds with consecutive value ranges.
  /// Throws std::invalid_argument otherwise.
  static Meld join(const Meld& left, const Meld& right);

  bool is_leaf() const noexcept { return !node_->left; }
  /// Kind of a non-leaf node; throws std::logic_error on a leaf.
  MeldKind kind() const;
  Meld left() const;
  Meld right() const;

  /// Leaf value; equals min() == max().
  int value() const;
  int min() const noexcept { return node_->min; }
  int max() const noexcept { return node_->max; }
  int first_position() const noexcept { return node_->first; }
  int last_position() const noexcept { return node_->last; }
  int size() const noexcept { return node_->last - node_->first + 1; }

  /// Leaf values in position order.
  std::vector<int> leaves() const;

  friend bool operator==(const Meld& a, const Meld& b);

 private:
  struct Node {
    int min = 0;
    int max = 0;
    int first = 0;
    int last = 0;
    MeldKind kind = MeldKind::Round;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Meld(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Position-adjacent and value ranges consecutive.
bool mergeable(const Meld& left, const Meld& right);

enum class Direction { Left, Right };

struct MergeOutcome {
  std::vector<Meld> melds;
  bool full = false;
  FinalConfiguration tiles;
};

/// Repeated scan in the given direction; the first mergeable adjacent pair is
/// merged and the scan restarts from its starting boundary.
MergeOutcome merge_run(const Permutation& p, Direction direction);

/// Left-to-right traversal in which a freshly merged meld is immediately
/// merged with its right neighbor when possible; traversal restarts only when
/// the list is exhausted. Reproduces the order-dependent bracketing that can
/// break the right-child property; nothing else depends on it.
MergeOutcome merge_eager(const Permutation& p);

/// Tiles of the final melds: meld over positions [a, b] with values
/// [lo, hi] is the tile with top-left (n - hi + 1, a).
FinalConfiguration tiles_of(int n, std::span<const Meld> melds);

/// "(" l " " r ")", "[" l " " r "]", or the decimal leaf value.
std::string serialize_meld(const Meld& m);

/// Inverse of serialize_meld. Leaf positions are assigned 1, 2, ... in reading
/// order; node kinds must agree with the value ranges. Throws
/// std::invalid_argument on malformed input.
Meld parse_meld(std::string_view text);

/// Root kind of the left bracketing of a full permutation with n >= 2.
/// Throws std::invalid_argument otherwise.
MeldKind top_level_kind(const Permutation& p);

/// Indecomposable components of a full permutation, read off its left
/// bracketing by peeling Round roots. Throws std::invalid_argument if p is
/// not full.
std::vector<Word> components_via_bracketing(const Permutation& p);

/// Number of final tiles under left merging, tracked as value intervals on a
/// stack. Allocation-free; used by the enumeration hot path.
int count_final_tiles(std::span<const int> values);

}  // namespace percoperm
