#include "percoperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace percoperm {

namespace {

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

void check_bijection(std::span<const int> values) {
  if (values.empty()) {
    throw PermutationError(PermutationError::Kind::Empty, "empty permutation");
  }
  const auto n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw PermutationError(PermutationError::Kind::OutOfRange,
                             "value " + std::to_string(v) + " is outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw PermutationError(PermutationError::Kind::Duplicate,
                             "duplicate value " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

Word::Word(std::vector<int> values) : values_(std::move(values)) {
  std::vector<int> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw PermutationError(PermutationError::Kind::Duplicate,
                           "duplicate value " + std::to_string(*dup) + " in word");
  }
}

std::string Word::to_string() const { return join(values_); }

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  check_bijection(values_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw PermutationError(PermutationError::Kind::Empty, "empty permutation");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(Unchecked{}, std::move(v));
}

std::string Permutation::to_string() const { return join(values_); }

PermutationCursor::PermutationCursor(int n) : perm_(Permutation::identity(n)) {}

PermutationCursor::PermutationCursor(int n, int first_value) : perm_(Permutation::identity(n)) {
  if (first_value < 1 || first_value > n) {
    throw PermutationError(PermutationError::Kind::OutOfRange, "first value out of range");
  }
  // first_value, then the remaining values ascending: the smallest
  // permutation starting with first_value.
  auto& v = perm_.values_;
  std::rotate(v.begin(), v.begin() + (first_value - 1), v.begin() + first_value);
}

bool PermutationCursor::next(std::size_t fixed) {
  auto& v = perm_.values_;
  if (fixed >= v.size()) return false;
  return std::next_permutation(v.begin() + static_cast<std::ptrdiff_t>(fixed), v.end());
}

Permutation parse_permutation(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
    tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) {
    throw PermutationError(PermutationError::Kind::Empty, "empty permutation");
  }

  for (auto tok : tokens) {
    if (!std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw PermutationError(PermutationError::Kind::Malformed,
                             "not a decimal integer: '" + std::string(tok) + "'");
    }
  }

  std::vector<int> values;
  if (tokens.size() == 1 && tokens.front().size() > 1) {
    const auto digits = tokens.front();
    if (digits.size() > 9) {
      throw PermutationError(PermutationError::Kind::Malformed,
                             "digit strings are only accepted for n <= 9; separate values with spaces");
    }
    for (char ch : digits) values.push_back(ch - '0');
  } else {
    for (auto tok : tokens) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw PermutationError(PermutationError::Kind::Malformed,
                               "value too large: '" + std::string(tok) + "'");
      }
      values.push_back(v);
    }
  }
  return Permutation(std::move(values));
}

Permutation reduce(const Word& w) {
  if (w.empty()) throw PermutationError(PermutationError::Kind::Empty, "cannot reduce an empty word");
  const auto vals = w.values();
  std::vector<std::size_t> order(vals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  std::vector<int> out(vals.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation(std::move(out));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

bool is_indecomposable(const Permutation& p) {
  // A prefix of length k is a permutation of {1..k} iff its maximum is k.
  const auto v = p.values();
  int running_max = 0;
  for (std::size_t k = 1; k < v.size(); ++k) {
    running_max = std::max(running_max, v[k - 1]);
    if (running_max == static_cast<int>(k)) return false;
  }
  return true;
}

bool is_indecomposable(const Word& w) { return is_indecomposable(reduce(w)); }

std::vector<Word> comps(const Permutation& p) {
  std::vector<Word> out;
  const auto v = p.values();
  std::size_t start = 0;
  int running_max = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    running_max = std::max(running_max, v[i]);
    if (running_max == static_cast<int>(i + 1)) {
      out.emplace_back(std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(start),
                                        v.begin() + static_cast<std::ptrdiff_t>(i + 1)));
      start = i + 1;
    }
  }
  return out;
}

Word last_comp(const Permutation& p) {
  // The last component starts at the largest v whose suffix a_v..a_n is
  // exactly {v..n}, i.e. the suffix minimum equals v.
  const auto v = p.values();
  const auto n = v.size();
  int suffix_min = static_cast<int>(n) + 1;
  for (std::size_t start = n; start-- > 0;) {
    suffix_min = std::min(suffix_min, v[start]);
    if (suffix_min == static_cast<int>(start + 1)) {
      return Word(std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(start), v.end()));
    }
  }
  return p.as_word();  // unreachable: start = 0 always qualifies
}

}  // namespace percoperm
