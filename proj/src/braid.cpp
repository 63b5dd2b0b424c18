#include "lfk/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lfk {

// --- BraidWord --------------------------------------------------------------

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw std::invalid_argument("braid group needs at least 2 strands");
  for (const auto& l : letters_) {
    if (l.generator < 1 || l.generator >= strands_) {
      throw std::invalid_argument("generator s" + std::to_string(l.generator) + " out of range for B_" +
                                  std::to_string(strands_));
    }
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::vector<BraidLetter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto bad = [&] { return std::invalid_argument("bad braid token '" + token + "' (expected s<k> or s<k>^-1)"); };
    if (token.size() < 2 || token[0] != 's') throw bad();
    std::size_t pos = 1;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos == 1) throw bad();
    int sign = 1;
    const std::string_view rest = std::string_view(token).substr(pos);
    if (rest == "^-1") {
      sign = -1;
    } else if (!rest.empty()) {
      throw bad();
    }
    letters.push_back({std::stoi(token.substr(1, pos - 1)), sign});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::generator(int strands, int i, int sign) { return BraidWord(strands, {{i, sign}}); }

BraidWord BraidWord::half_twist(int strands) {
  std::vector<BraidLetter> letters;
  for (int top = strands - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) letters.push_back({i, 1});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::full_twist(int strands) { return half_twist(strands).pow(2); }

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->generator, -it->sign});
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::pow(int exponent) const {
  const BraidWord base = exponent >= 0 ? *this : inverse();
  BraidWord out(strands_);
  for (int e = 0; e < std::abs(exponent); ++e) out = out * base;
  return out;
}

std::string BraidWord::to_string() const {
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += 's' + std::to_string(l.generator);
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.strands_ != v.strands_) throw std::invalid_argument("braid product: strand counts differ");
  std::vector<BraidLetter> letters = u.letters_;
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  return BraidWord(u.strands_, std::move(letters));
}

BraidWord pure_generator(int strands, int i, int j) {
  if (!(1 <= i && i < j && j <= strands)) {
    throw std::invalid_argument("pure generator A_ij needs 1 <= i < j <= n");
  }
  BraidWord conj(strands);
  for (int g = j - 1; g > i; --g) conj = conj * BraidWord::generator(strands, g);
  return conj * BraidWord::generator(strands, i).pow(2) * conj.inverse();
}

// --- Garside normal form ----------------------------------------------------

namespace {

Permutation identity_perm(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation delta_perm(int n) {
  Permutation p(n);
  for (int j = 0; j < n; ++j) p[j] = n - 1 - j;
  return p;
}

// Conjugation by Delta: s_i -> s_{n-i}.
Permutation flip(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  Permutation out(n);
  for (int j = 0; j < n; ++j) out[j] = n - 1 - p[n - 1 - j];
  return out;
}

// i (0-based) is in the starting set iff the braid can begin with s_{i+1}.
bool starts_with(const Permutation& p, int i) { return p[i] > p[i + 1]; }

bool finishes_with(const Permutation& p, int i) {
  const auto inv_i = std::find(p.begin(), p.end(), i) - p.begin();
  const auto inv_next = std::find(p.begin(), p.end(), i + 1) - p.begin();
  return inv_i > inv_next;
}

// A -> A s_i
void append_generator(Permutation& p, int i) {
  for (int& v : p) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
}

// s_i B -> B
void strip_leading_generator(Permutation& p, int i) { std::swap(p[i], p[i + 1]); }

// Makes (a, b) left-weighted; returns whether anything moved.
bool left_weight(Permutation& a, Permutation& b) {
  const int n = static_cast<int>(a.size());
  bool moved = false;
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (starts_with(b, i) && !finishes_with(a, i)) {
        append_generator(a, i);
        strip_leading_generator(b, i);
        moved = again = true;
      }
    }
  }
  return moved;
}

}  // namespace

NormalForm left_normal_form(const BraidWord& word) {
  const int n = word.strands();
  const Permutation id = identity_perm(n);
  const Permutation delta = delta_perm(n);

  NormalForm nf;
  nf.strands = n;
  std::vector<Permutation>& factors = nf.factors;

  // s_i^-1 = Delta^-1 (Delta s_i^-1); the Delta^-1 is pushed to the front,
  // conjugating every factor it passes.
  for (const auto& l : word.letters()) {
    const int i = l.generator - 1;
    if (l.sign > 0) {
      Permutation s = id;
      std::swap(s[i], s[i + 1]);
      factors.push_back(std::move(s));
    } else {
      for (auto& f : factors) f = flip(f);
      --nf.delta_power;
      Permutation x(n);
      for (int j = 0; j < n; ++j) {
        const int w = delta[j];
        x[j] = (w == i) ? i + 1 : (w == i + 1 ? i : w);
      }
      factors.push_back(std::move(x));
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
      changed |= left_weight(factors[k], factors[k + 1]);
    }
    std::erase(factors, id);
    while (!factors.empty() && factors.front() == delta) {
      ++nf.delta_power;
      factors.erase(factors.begin());
      changed = true;
    }
  }
  // Delta factors can only sit at the front of a left-weighted sequence.
  if (std::find(factors.begin(), factors.end(), delta) != factors.end()) {
    throw std::logic_error("left_normal_form: Delta factor left in the middle");
  }
  return nf;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) { return left_normal_form(u) == left_normal_form(v); }

BraidWord NormalForm::to_word() const {
  BraidWord out = BraidWord::half_twist(strands).pow(static_cast<int>(delta_power));
  for (Permutation p : factors) {
    std::vector<BraidLetter> letters;
    for (bool found = true; found;) {
      found = false;
      for (int i = 0; i + 1 < strands; ++i) {
        if (starts_with(p, i)) {
          letters.push_back({i + 1, 1});
          strip_leading_generator(p, i);
          found = true;
          break;
        }
      }
    }
    out = out * BraidWord(strands, std::move(letters));
  }
  return out;
}

std::string NormalForm::to_string() const {
  std::ostringstream os;
  os << "D^" << delta_power;
  for (const auto& p : factors) {
    os << " [";
    for (std::size_t j = 0; j < p.size(); ++j) os << (j ? " " : "") << p[j];
    os << ']';
  }
  return os.str();
}

// --- Dynnikov coordinates ---------------------------------------------------

MultiCurve::MultiCurve(int punctures, std::vector<mpz_class> coords)
    : punctures_(punctures), coords_(std::move(coords)) {
  if (punctures_ < 3) throw std::invalid_argument("multicurves need at least 3 punctures");
  if (coords_.size() != static_cast<std::size_t>(2 * punctures_ - 4)) {
    throw std::invalid_argument("expected " + std::to_string(2 * punctures_ - 4) + " Dynnikov coordinates");
  }
}

MultiCurve MultiCurve::round(int punctures, int first, int last) {
  if (!(1 <= first && first < last && last <= punctures)) {
    throw std::invalid_argument("round curve needs 1 <= first < last <= n");
  }
  // beta_m counts crossings with the vertical arc between punctures m, m+1.
  auto beta = [&](int m) { return (first <= m && m < last) ? 2 : 0; };
  std::vector<mpz_class> coords(2 * punctures - 4, 0);
  for (int m = 1; m <= punctures - 2; ++m) coords[punctures - 2 + m - 1] = (beta(m) - beta(m + 1)) / 2;
  return MultiCurve(punctures, std::move(coords));
}

MultiCurve MultiCurve::pure_core(int punctures, int i, int j) {
  if (!(1 <= i && i < j && j <= punctures)) throw std::invalid_argument("pure_core needs 1 <= i < j <= n");
  BraidWord conj(punctures);
  for (int g = j - 1; g > i; --g) conj = conj * BraidWord::generator(punctures, g);
  return act(conj, round(punctures, i, i + 1));
}

bool MultiCurve::empty() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpz_class& c) { return c == 0; });
}

std::size_t MultiCurve::bit_size() const {
  std::size_t bits = 0;
  for (const auto& c : coords_) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

std::string MultiCurve::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += (i == coords_.size() / 2) ? "; " : ", ";
    s += coords_[i].get_str();
  }
  return s + ")";
}

namespace {

mpz_class pos(const mpz_class& x) { return x > 0 ? x : mpz_class(0); }
mpz_class neg(const mpz_class& x) { return x < 0 ? x : mpz_class(0); }

void apply_letter(std::vector<mpz_class>& a, std::vector<mpz_class>& b, int i, int sign) {
  // a, b are padded: indices 0 .. n-1, with a[0] = a[n-1] = 0.
  const std::size_t last = a.size() - 1;
  mpz_class b0 = 0;
  bool first = true;
  mpz_class running = 0;
  for (std::size_t j = 1; j < last; ++j) {
    mpz_class v = abs(a[j]) + pos(b[j]) + running;
    if (first || v > b0) b0 = v;
    first = false;
    running += b[j];
  }
  b[0] = -b0;
  b[last] = b0 - running;

  const mpz_class ap = a[i - 1], a0 = a[i], bp = b[i - 1], b1 = b[i];
  if (sign > 0) {
    const mpz_class c = ap - a0 - pos(b1) + neg(bp);
    a[i - 1] = ap - pos(bp) - pos(pos(b1) + c);
    b[i - 1] = b1 + neg(c);
    a[i] = a0 - neg(b1) - neg(neg(bp) - c);
    b[i] = bp - neg(c);
  } else {
    const mpz_class d = ap - a0 + pos(b1) - neg(bp);
    a[i - 1] = ap + pos(bp) + pos(pos(b1) - d);
    b[i - 1] = b1 - pos(d);
    a[i] = a0 + neg(b1) + neg(neg(bp) + d);
    b[i] = bp + pos(d);
  }
}

}  // namespace

MultiCurve act(const BraidWord& word, const MultiCurve& curve) {
  const int n = curve.punctures();
  if (word.strands() != n) {
    throw std::invalid_argument("braid on " + std::to_string(word.strands()) + " strands acting on a " +
                                std::to_string(n) + "-punctured disc");
  }
  const auto& c = curve.coords();
  std::vector<mpz_class> a(n, 0), b(n, 0);
  for (int j = 1; j <= n - 2; ++j) {
    a[j] = c[j - 1];
    b[j] = c[n - 2 + j - 1];
  }
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) apply_letter(a, b, it->generator, it->sign);

  std::vector<mpz_class> out(2 * n - 4);
  for (int j = 1; j <= n - 2; ++j) {
    out[j - 1] = a[j];
    out[n - 2 + j - 1] = b[j];
  }
  return MultiCurve(n, std::move(out));
}

// --- Relation checks --------------------------------------------------------

std::vector<MultiCurve> random_multicurves(int punctures, std::size_t count, std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-bound, bound);
  std::vector<MultiCurve> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<mpz_class> v(2 * punctures - 4);
    for (auto& x : v) x = coord(rng);
    out.emplace_back(punctures, std::move(v));
  }
  return out;
}

ActionReport relation_check(const std::vector<NamedBraid>& factors, const BraidWord& target, std::size_t trials,
                            std::uint64_t seed) {
  if (factors.empty()) throw std::invalid_argument("relation_check: no factors");
  const int n = target.strands();

  ActionReport report;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) report.curves.push_back(MultiCurve::pure_core(n, i, j));
  }
  if (n >= 4) report.curves.push_back(MultiCurve::round(n, 1, n - 1));
  for (auto& c : random_multicurves(n, trials, seed)) report.curves.push_back(std::move(c));

  BraidWord product(n);
  for (const auto& f : factors) product = product * f.word;

  report.trivial_action = true;
  for (const auto& c : report.curves) {
    const bool fixed = act(product, c) == c;
    report.fixed_by_product.push_back(fixed);
    report.trivial_action = report.trivial_action && fixed;
  }

  report.factors_nontrivial = true;
  for (const auto& f : factors) {
    const auto moved = static_cast<std::size_t>(std::count_if(
        report.curves.begin(), report.curves.end(), [&](const MultiCurve& c) { return act(f.word, c) != c; }));
    report.factor_names.push_back(f.name);
    report.curves_moved_by_factor.push_back(moved);
    report.factors_nontrivial = report.factors_nontrivial && moved > 0;
  }

  const NormalForm want = left_normal_form(target);
  for (std::size_t r = 0; r < factors.size(); ++r) {
    BraidWord rotated(n);
    for (std::size_t k = 0; k < factors.size(); ++k) rotated = rotated * factors[(r + k) % factors.size()].word;
    if (left_normal_form(rotated) == want) report.matching_rotations.push_back(r);
  }
  report.normal_form_matches = !report.matching_rotations.empty();
  return report;
}

std::vector<NamedBraid> lantern_factors() {
  return {{"A12", pure_generator(3, 1, 2)}, {"A13", pure_generator(3, 1, 3)}, {"A23", pure_generator(3, 2, 3)}};
}

ActionReport lantern_check(std::size_t trials, std::uint64_t seed) {
  return relation_check(lantern_factors(), BraidWord::full_twist(3), trials, seed);
}

BraidWord random_word(int strands, std::size_t max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  const std::size_t l = len(rng);
  std::vector<BraidLetter> letters;
  letters.reserve(l);
  for (std::size_t k = 0; k < l; ++k) {
    const int g = gen(rng);
    letters.push_back({g, sgn(rng) ? 1 : -1});
  }
  return BraidWord(strands, std::move(letters));
}

bool centrality_check(const BraidWord& word, std::size_t trials, std::uint64_t seed, std::size_t max_length) {
  const int n = word.strands();
  std::vector<BraidWord> tests;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) tests.push_back(pure_generator(n, i, j));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) tests.push_back(random_word(n, max_length, rng));
  return std::all_of(tests.begin(), tests.end(), [&](const BraidWord& w) { return braid_equal(word * w, w * word); });
}

}  // namespace lfk
