#include "cayley/group.hpp"

#include <algorithm>

namespace cayley {

SubgroupSpec SubgroupSpec::index_two(std::vector<int> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty()) throw std::invalid_argument("SubgroupSpec: A must be nonempty");
  return SubgroupSpec{SubgroupKind::IndexTwo, std::move(a)};
}

SubgroupSpec SubgroupSpec::index_four(std::vector<int> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty()) throw std::invalid_argument("SubgroupSpec: A must be nonempty");
  return SubgroupSpec{SubgroupKind::IndexFour, std::move(a)};
}

void SubgroupSpec::validate(int order) const {
  if (members.empty()) throw std::invalid_argument("SubgroupSpec: A must be nonempty");
  for (int j : members)
    if (j < 1 || j > order + 1)
      throw std::invalid_argument("SubgroupSpec: generator index outside 1..k+1");
  if (kind == SubgroupKind::IndexFour &&
      static_cast<int>(members.size()) == order + 1)
    throw std::invalid_argument(
        "SubgroupSpec: IndexFour requires A to be a proper subset of {1..k+1}");
}

int class_count(const SubgroupSpec& s) {
  return s.kind == SubgroupKind::IndexTwo ? 2 : 4;
}

GroupWord multiply(const GroupWord& x, const GroupWord& y) {
  if (x.order() != y.order())
    throw std::invalid_argument("multiply: words of different tree order");
  std::vector<std::uint8_t> out = x.letters();
  for (std::uint8_t l : y.letters()) {
    if (!out.empty() && out.back() == l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return GroupWord(x.order(), std::move(out));
}

GroupWord inverse(const GroupWord& x) {
  std::vector<std::uint8_t> rev(x.letters().rbegin(), x.letters().rend());
  return GroupWord(x.order(), std::move(rev));
}

GroupWord parent(const GroupWord& x) {
  if (x.is_identity())
    throw std::invalid_argument("parent: the root has no parent");
  std::vector<std::uint8_t> out(x.letters().begin(), x.letters().end() - 1);
  return GroupWord(x.order(), std::move(out));
}

std::vector<GroupWord> neighbors(const GroupWord& x) {
  std::vector<GroupWord> out;
  out.reserve(x.order() + 1);
  for (int j = 1; j <= x.order() + 1; ++j) {
    std::vector<std::uint8_t> w = x.letters();
    if (!w.empty() && w.back() == j)
      w.pop_back();
    else
      w.push_back(static_cast<std::uint8_t>(j));
    out.emplace_back(x.order(), std::move(w));
  }
  return out;
}

int letter_count(const GroupWord& x, int j) {
  if (j < 1 || j > x.order() + 1)
    throw std::invalid_argument("letter_count: generator index out of range");
  int c = 0;
  for (auto l : x.letters()) c += (l == j);
  return c;
}

int distance(const GroupWord& x, const GroupWord& y) {
  return static_cast<int>(multiply(inverse(x), y).length());
}

CosetClass coset_class(const GroupWord& x, const SubgroupSpec& s) {
  s.validate(x.order());
  int sum = 0;
  for (int j : s.members) sum += letter_count(x, j);
  int w_parity = sum & 1;
  if (s.kind == SubgroupKind::IndexTwo) return w_parity;
  int len_parity = static_cast<int>(x.length()) & 1;
  return w_parity + 2 * len_parity;
}

std::vector<GroupWord> enumerate_ball(int order, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_ball: radius must be >= 0");
  std::vector<GroupWord> out;
  out.reserve(ball_size(order, n));
  out.emplace_back(order);
  std::size_t level_begin = 0;
  for (int depth = 1; depth <= n; ++depth) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int j = 1; j <= order + 1; ++j) {
        const auto& w = out[i].letters();
        if (!w.empty() && w.back() == j) continue;
        std::vector<std::uint8_t> child = w;
        child.push_back(static_cast<std::uint8_t>(j));
        out.emplace_back(order, std::move(child));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::uint64_t ball_size(int order, int n) {
  if (order == 1) return 1 + 2ull * n;
  std::uint64_t kn = 1;
  for (int i = 0; i < n; ++i) kn *= order;
  return 1 + std::uint64_t(order + 1) * (kn - 1) / (order - 1);
}

}  // namespace cayley
