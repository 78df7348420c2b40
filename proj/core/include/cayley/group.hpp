#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

/// Reduced word over the generators a_1..a_{k+1} of the free product of
/// k+1 order-two cyclic groups. Words are the canonical vertex identity
/// of the Cayley tree of order k: the empty word is the root, word
/// length is graph distance from the root.
class GroupWord {
 public:
  /// Identity word (the tree root) of order k.
  explicit GroupWord(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("GroupWord: order k must be >= 1");
  }

  GroupWord(int order, std::vector<std::uint8_t> letters)
      : order_(order), letters_(std::move(letters)) {
    if (order < 1) throw std::invalid_argument("GroupWord: order k must be >= 1");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i] < 1 || letters_[i] > order_ + 1)
        throw std::invalid_argument("GroupWord: letter out of range");
      if (i > 0 && letters_[i] == letters_[i - 1])
        throw std::invalid_argument("GroupWord: word not reduced");
    }
  }

  int order() const { return order_; }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.order_ == b.order_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const GroupWord& a, const GroupWord& b) { return !(a == b); }
  friend bool operator<(const GroupWord& a, const GroupWord& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    if (a.letters_.size() != b.letters_.size())
      return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }

  /// "a1a2a1" style rendering; the identity prints as "e".
  std::string str() const {
    if (letters_.empty()) return "e";
    std::string s;
    for (auto l : letters_) s += "a" + std::to_string(int(l));
    return s;
  }

 private:
  int order_;
  std::vector<std::uint8_t> letters_;
};

/// Normal subgroups the weak-periodic machinery quotients by:
/// H_A (index two, words with even letter count over A) and
/// G_k^(4) = H_A with even word length on top (index four).
enum class SubgroupKind { IndexTwo, IndexFour };

struct SubgroupSpec {
  SubgroupKind kind;
  std::vector<int> members;  // the generator index set A, sorted, 1-based

  static SubgroupSpec index_two(std::vector<int> a);
  static SubgroupSpec index_four(std::vector<int> a);

  /// Full check against a concrete tree order. IndexFour additionally
  /// rejects A = {1,...,k+1}: there Sum_{j in A} w_j(x) = |x|, the
  /// quotient collapses to index two and two of the four classes are empty.
  void validate(int order) const;

  bool operator==(const SubgroupSpec& o) const {
    return kind == o.kind && members == o.members;
  }
};

/// Quotient class of a word. IndexTwo uses 0 (inside H_A) and 1;
/// IndexFour uses 0..3 with the convention
///   0: even w_A, even |x|    1: odd w_A, even |x|
///   2: even w_A, odd  |x|    3: odd w_A, odd  |x|.
using CosetClass = int;

int class_count(const SubgroupSpec& s);

/// Reduced product xy. Each generator is its own inverse, so reduction
/// is cancellation of equal adjacent letters at the seam.
GroupWord multiply(const GroupWord& x, const GroupWord& y);

/// The reversed word; inverse since every generator is an involution.
GroupWord inverse(const GroupWord& x);

/// x with its last letter removed: the unique neighbor strictly closer
/// to the root. Throws for the root itself.
GroupWord parent(const GroupWord& x);

/// All k+1 nearest neighbors {x a_j}. For x != e exactly one of them is
/// parent(x); the rest are the direct successors.
std::vector<GroupWord> neighbors(const GroupWord& x);

/// Number of occurrences of a_j in the reduced word.
int letter_count(const GroupWord& x, int j);

/// Graph distance d(x, y) = |x^{-1} y|.
int distance(const GroupWord& x, const GroupWord& y);

CosetClass coset_class(const GroupWord& x, const SubgroupSpec& s);

/// Every word with |x| <= n, ordered by (length, lexicographic).
std::vector<GroupWord> enumerate_ball(int order, int n);

/// Exact size of V_n: 1 + (k+1)(k^n - 1)/(k - 1) for k >= 2, 1 + 2n for k = 1.
std::uint64_t ball_size(int order, int n);

}  // namespace cayley
