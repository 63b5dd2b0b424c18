#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lfk {

struct BraidLetter {
  int generator = 1;  // 1 .. n-1
  int sign = 1;       // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// Word in the Artin generators of B_n.
class BraidWord {
public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  // Whitespace-separated tokens `s<k>` or `s<k>^-1`, e.g. "s1 s2 s1^-1".
  static BraidWord parse(int strands, std::string_view text);
  static BraidWord generator(int strands, int i, int sign = 1);
  // Positive half twist Delta = (s1 ... s_{n-1})(s1 ... s_{n-2}) ... s1.
  static BraidWord half_twist(int strands);
  static BraidWord full_twist(int strands);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord pow(int exponent) const;
  std::string to_string() const;

  // Concatenation; u * v means "apply v first" when acting on curves.
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// Pure braid generator A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1.
BraidWord pure_generator(int strands, int i, int j);

// ---------------------------------------------------------------------------
// Garside structure

// Permutation braid: strand starting at position p ends at position perm[p]
// (0-based). Products compose as perm(AB) = perm(B) o perm(A).
using Permutation = std::vector<int>;

struct NormalForm {
  int strands = 2;
  long long delta_power = 0;
  std::vector<Permutation> factors;  // left-weighted, none trivial, none Delta

  BraidWord to_word() const;
  std::string to_string() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Left-greedy normal form Delta^r A_1 ... A_s. Two words represent the same
// braid iff their normal forms are identical.
NormalForm left_normal_form(const BraidWord& word);
bool braid_equal(const BraidWord& u, const BraidWord& v);

// ---------------------------------------------------------------------------
// Dynnikov coordinates

// Isotopy class of a multicurve in the n-punctured disc, stored as
// (a_1, ..., a_{n-2}, b_1, ..., b_{n-2}). The zero vector is the empty
// multicurve.
class MultiCurve {
public:
  MultiCurve(int punctures, std::vector<mpz_class> coords);

  // Round curve enclosing the consecutive punctures first..last (1-based).
  static MultiCurve round(int punctures, int first, int last);
  // Core curve of the pure generator A_ij: the image of round(i, i+1) under
  // s_{j-1} ... s_{i+1}.
  static MultiCurve pure_core(int punctures, int i, int j);

  int punctures() const { return punctures_; }
  const std::vector<mpz_class>& coords() const { return coords_; }
  bool empty() const;
  // Largest coordinate bit length.
  std::size_t bit_size() const;
  std::string to_string() const;

  friend bool operator==(const MultiCurve&, const MultiCurve&) = default;

private:
  int punctures_;
  std::vector<mpz_class> coords_;
};

// Applies the letters right to left, so act(u * v, c) == act(u, act(v, c)).
//
// Update rule for s_i (1 <= i <= n-1), with x+ = max(x, 0), x- = min(x, 0)
// and the padded coordinates a_0 = a_{n-1} = 0,
//   b_0 = -max_{1<=j<=n-2} (|a_j| + b_j+ + sum_{l<j} b_l),
//   b_{n-1} = -b_0 - sum_j b_j:
//
//   c = a_{i-1} - a_i - b_i+ + b_{i-1}-
//   a'_{i-1} = a_{i-1} - b_{i-1}+ - (b_i+ + c)+
//   b'_{i-1} = b_i + c-
//   a'_i     = a_i - b_i- - (b_{i-1}- - c)-
//   b'_i     = b_{i-1} - c-
//
// and for s_i^-1, with d = a_{i-1} - a_i + b_i+ - b_{i-1}-:
//
//   a'_{i-1} = a_{i-1} + b_{i-1}+ + (b_i+ - d)+
//   b'_{i-1} = b_i - d+
//   a'_i     = a_i + b_i- + (b_{i-1}- + d)-
//   b'_i     = b_{i-1} + d+
//
// This fixes the orientation convention: s_1 fixes round(1, 2) and the
// lantern product A_12 A_13 A_23 acts trivially.
MultiCurve act(const BraidWord& word, const MultiCurve& curve);

// ---------------------------------------------------------------------------
// Relation checks

struct ActionReport {
  std::vector<MultiCurve> curves;
  std::vector<bool> fixed_by_product;              // per curve
  std::vector<std::string> factor_names;
  std::vector<std::size_t> curves_moved_by_factor;  // per factor
  bool trivial_action = false;
  bool factors_nontrivial = false;
  bool normal_form_matches = false;
  // Cyclic rotations (0 = as given) whose normal form equals the target.
  std::vector<std::size_t> matching_rotations;

  bool passed() const { return trivial_action && factors_nontrivial && normal_form_matches; }
};

struct NamedBraid {
  std::string name;
  BraidWord word;
};

std::vector<MultiCurve> random_multicurves(int punctures, std::size_t count, std::uint64_t seed,
                                           int bound = 20);

// Checks that the product of `factors` (left to right) equals `target`:
// trivial action on the standard curves plus `trials` random ones, each factor
// moving some curve, and normal-form equality up to cyclic rotation.
ActionReport relation_check(const std::vector<NamedBraid>& factors, const BraidWord& target,
                            std::size_t trials, std::uint64_t seed);

// A_12 A_13 A_23 = Delta^2 in B_3.
std::vector<NamedBraid> lantern_factors();
ActionReport lantern_check(std::size_t trials, std::uint64_t seed);

// Uniform length in [0, max_length], uniform letters.
BraidWord random_word(int strands, std::size_t max_length, std::mt19937_64& rng);

// True iff `word` commutes (by normal form) with `trials` seeded random words
// of length <= max_length and with every pure generator.
bool centrality_check(const BraidWord& word, std::size_t trials, std::uint64_t seed,
                      std::size_t max_length = 20);

}  // namespace lfk
