#include "percoperm/tiling.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace percoperm {

Meld Meld::leaf(int value, int position) {
  auto node = std::make_shared<Node>();
  node->min = node->max = value;
  node->first = node->last = position;
  return Meld(std::move(node));
}

Meld Meld::join(const Meld& left, const Meld& right) {
  if (!mergeable(left, right)) {
    throw std::invalid_argument("melds are not mergeable: " + serialize_meld(left) + " and " +
                                serialize_meld(right));
  }
  auto node = std::make_shared<Node>();
  node->min = std::min(left.min(), right.min());
  node->max = std::max(left.max(), right.max());
  node->first = left.first_position();
  node->last = right.last_position();
  node->kind = left.max() + 1 == right.min() ? MeldKind::Round : MeldKind::Square;
  node->left = left.node_;
  node->right = right.node_;
  return Meld(std::move(node));
}

MeldKind Meld::kind() const {
  if (is_leaf()) throw std::logic_error("leaf meld has no kind");
  return node_->kind;
}

Meld Meld::left() const {
  if (is_leaf()) throw std::logic_error("leaf meld has no children");
  return Meld(node_->left);
}

Meld Meld::right() const {
  if (is_leaf()) throw std::logic_error("leaf meld has no children");
  return Meld(node_->right);
}

int Meld::value() const {
  if (!is_leaf()) throw std::logic_error("only leaves carry a value");
  return node_->min;
}

std::vector<int> Meld::leaves() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::vector<Meld> stack{*this};
  while (!stack.empty()) {
    Meld m = std::move(stack.back());
    stack.pop_back();
    if (m.is_leaf()) {
      out.push_back(m.value());
    } else {
      stack.push_back(m.right());
      stack.push_back(m.left());
    }
  }
  return out;
}

bool operator==(const Meld& a, const Meld& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.value() == b.value() && a.first_position() == b.first_position();
  return a.kind() == b.kind() && a.left() == b.left() && a.right() == b.right();
}

bool mergeable(const Meld& left, const Meld& right) {
  return left.last_position() + 1 == right.first_position() &&
         (left.max() + 1 == right.min() || left.min() == right.max() + 1);
}

namespace {

std::vector<Meld> leaves_of(const Permutation& p) {
  std::vector<Meld> melds;
  melds.reserve(static_cast<std::size_t>(p.size()));
  for (int j = 1; j <= p.size(); ++j) melds.push_back(Meld::leaf(p(j), j));
  return melds;
}

void merge_at(std::vector<Meld>& melds, std::size_t i) {
  melds[i] = Meld::join(melds[i], melds[i + 1]);
  melds.erase(melds.begin() + static_cast<std::ptrdiff_t>(i + 1));
}

MergeOutcome outcome(int n, std::vector<Meld> melds) {
  MergeOutcome out;
  out.full = melds.size() == 1;
  out.tiles = tiles_of(n, melds);
  out.melds = std::move(melds);
  return out;
}

}  // namespace

MergeOutcome merge_run(const Permutation& p, Direction direction) {
  auto melds = leaves_of(p);
  for (;;) {
    bool merged = false;
    const std::size_t pairs = melds.size() - 1;
    for (std::size_t k = 0; k < pairs; ++k) {
      const std::size_t i = direction == Direction::Left ? k : pairs - 1 - k;
      if (mergeable(melds[i], melds[i + 1])) {
        merge_at(melds, i);
        merged = true;
        break;
      }
    }
    if (!merged) break;
  }
  return outcome(p.size(), std::move(melds));
}

MergeOutcome merge_eager(const Permutation& p) {
  auto melds = leaves_of(p);
  for (;;) {
    bool merged = false;
    std::size_t i = 0;
    while (i + 1 < melds.size()) {
      if (mergeable(melds[i], melds[i + 1])) {
        // Stay on the new meld so its right neighbor is tried next.
        merge_at(melds, i);
        merged = true;
      } else {
        ++i;
      }
    }
    if (!merged) break;
  }
  return outcome(p.size(), std::move(melds));
}

FinalConfiguration tiles_of(int n, std::span<const Meld> melds) {
  std::vector<Tile> tiles;
  tiles.reserve(melds.size());
  for (const Meld& m : melds) tiles.push_back({{n - m.max() + 1, m.first_position()}, m.size()});
  return FinalConfiguration::from_tiles(n, std::move(tiles));
}

std::string serialize_meld(const Meld& m) {
  if (m.is_leaf()) return std::to_string(m.value());
  const bool round = m.kind() == MeldKind::Round;
  std::string out(1, round ? '(' : '[');
  out += serialize_meld(m.left());
  out += ' ';
  out += serialize_meld(m.right());
  out += round ? ')' : ']';
  return out;
}

namespace {

class MeldParser {
 public:
  explicit MeldParser(std::string_view text) : text_(text) {}

  Meld parse() {
    Meld m = meld();
    if (pos_ != text_.size()) fail("trailing characters");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad bracketing at offset " + std::to_string(pos_) + ": " + why);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Meld meld() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char open = text_[pos_];
    if (open == '(' || open == '[') {
      ++pos_;
      Meld left = meld();
      expect(' ');
      Meld right = meld();
      expect(open == '(' ? ')' : ']');
      if (!mergeable(left, right)) fail("children are not mergeable");
      Meld joined = Meld::join(left, right);
      const auto want = open == '(' ? MeldKind::Round : MeldKind::Square;
      if (joined.kind() != want) fail("bracket kind does not match the value ranges");
      return joined;
    }
    if (!std::isdigit(static_cast<unsigned char>(open))) fail("expected a value or bracket");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || value < 1) fail("bad leaf value");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return Meld::leaf(value, ++next_position_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int next_position_ = 0;
};

}  // namespace

Meld parse_meld(std::string_view text) { return MeldParser(text).parse(); }

MeldKind top_level_kind(const Permutation& p) {
  if (p.size() < 2) throw std::invalid_argument("top-level kind needs n >= 2");
  auto run = merge_run(p, Direction::Left);
  if (!run.full) throw std::invalid_argument("permutation " + p.to_string() + " is not full");
  return run.melds.front().kind();
}

std::vector<Word> components_via_bracketing(const Permutation& p) {
  auto run = merge_run(p, Direction::Left);
  if (!run.full) throw std::invalid_argument("permutation " + p.to_string() + " is not full");
  std::vector<Word> reversed;
  Meld cur = run.melds.front();
  while (!cur.is_leaf() && cur.kind() == MeldKind::Round) {
    reversed.emplace_back(cur.right().leaves());
    cur = cur.left();
  }
  reversed.emplace_back(cur.leaves());
  return {reversed.rbegin(), reversed.rend()};
}

int count_final_tiles(std::span<const int> values) {
  // Intervals on the stack are pairwise non-mergeable, so the first
  // mergeable pair in left-to-right order is always the top two.
  constexpr std::size_t kMax = 64;
  if (values.size() > kMax) throw std::invalid_argument("count_final_tiles supports n <= 64");
  std::array<int, kMax> lo{};
  std::array<int, kMax> hi{};
  std::size_t top = 0;
  for (int v : values) {
    lo[top] = hi[top] = v;
    ++top;
    while (top >= 2) {
      const std::size_t a = top - 2;
      const std::size_t b = top - 1;
      if (hi[a] + 1 == lo[b]) {
        hi[a] = hi[b];
      } else if (lo[a] == hi[b] + 1) {
        lo[a] = lo[b];
      } else {
        break;
      }
      --top;
    }
  }
  return static_cast<int>(top);
}

}  // namespace percoperm
