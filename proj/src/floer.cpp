#include "lfk/floer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lfk {

void validate_degree_parameter(const Rational& d) {
  if (d <= 0) throw std::invalid_argument("d must be positive, got " + d.get_str());
  const Rational twice = 2 * d;
  if (!is_integral(twice)) throw std::invalid_argument("2d must be an integer, got d = " + d.get_str());
}

TwistParams::TwistParams(Rational d, unsigned k) : d_(std::move(d)), k_(k) {
  d_.canonicalize();
  validate_degree_parameter(d_);
}

int monodromy_shift(const Rational& d) {
  validate_degree_parameter(d);
  const Rational s = 4 - 2 * d;
  return static_cast<int>(s.get_num().get_si());
}

int winding_shift(const Rational& d) { return monodromy_shift(d) - 2; }

GradedSpace SpectralPage::column(int p) const {
  GradedSpace out;
  for (const auto& [pq, r] : entries) {
    if (pq.first == p) out.add_rank(pq.second, r);
  }
  return out;
}

GradedSpace SpectralPage::totals() const {
  GradedSpace out;
  for (const auto& [pq, r] : entries) out.add_rank(pq.first + pq.second, r);
  return out;
}

SpectralPage build_e1(const FibreFloerData& fibre, const TwistParams& params) {
  if (params.k() == 0) throw std::invalid_argument("build_e1: k must be at least 1");
  const int s = winding_shift(params.d());
  SpectralPage page;
  page.k = params.k();
  page.page = 1;
  for (unsigned l = 0; l < params.k(); ++l) {
    const int p = -2 * static_cast<int>(l);
    for (const auto& [j, rank] : fibre.hf.ranks()) {
      const int total = j + static_cast<int>(l) * s;
      page.entries[{p, total - p}] += rank;
    }
  }
  return page;
}

std::vector<DifferentialCandidate> collapse_analysis(const SpectralPage& page) {
  std::vector<DifferentialCandidate> out;
  if (page.k < 2) return out;
  const int max_r = 2 * (static_cast<int>(page.k) - 1);
  for (const auto& [src, rank] : page.entries) {
    if (rank == 0) continue;
    for (int r = 1; r <= max_r; ++r) {
      const Bidegree tgt{src.first + r, src.second - r + 1};
      auto it = page.entries.find(tgt);
      if (it != page.entries.end() && it->second > 0) out.push_back({r, src, tgt});
    }
  }
  return out;
}

namespace {

// Max flow on a small bipartite network (Edmonds-Karp). Entries of even
// total degree sit on the left, odd on the right; every candidate joins
// adjacent total degrees, so it is an edge between the two sides.
class FlowNetwork {
public:
  explicit FlowNetwork(std::size_t nodes) : cap_(nodes, std::vector<long long>(nodes, 0)) {}

  void add(std::size_t u, std::size_t v, long long c) { cap_[u][v] += c; }

  long long max_flow(std::size_t s, std::size_t t) {
    const std::size_t n = cap_.size();
    flow_.assign(n, std::vector<long long>(n, 0));
    long long total = 0;
    for (;;) {
      std::vector<std::size_t> parent(n, n);
      parent[s] = s;
      std::vector<std::size_t> queue{s};
      for (std::size_t head = 0; head < queue.size() && parent[t] == n; ++head) {
        const std::size_t u = queue[head];
        for (std::size_t v = 0; v < n; ++v) {
          if (parent[v] == n && cap_[u][v] - flow_[u][v] > 0) {
            parent[v] = u;
            queue.push_back(v);
          }
        }
      }
      if (parent[t] == n) break;
      long long push = std::numeric_limits<long long>::max();
      for (std::size_t v = t; v != s; v = parent[v]) push = std::min(push, cap_[parent[v]][v] - flow_[parent[v]][v]);
      for (std::size_t v = t; v != s; v = parent[v]) {
        flow_[parent[v]][v] += push;
        flow_[v][parent[v]] -= push;
      }
      total += push;
    }
    return total;
  }

  long long flow(std::size_t u, std::size_t v) const { return flow_[u][v]; }

private:
  std::vector<std::vector<long long>> cap_;
  std::vector<std::vector<long long>> flow_;
};

bool even(int x) { return x % 2 == 0; }

}  // namespace

GradedSpace maximal_cancellation_lower_bound(const SpectralPage& page,
                                             const std::vector<DifferentialCandidate>& candidates) {
  std::vector<Bidegree> nodes;
  std::map<Bidegree, std::size_t> index;
  for (const auto& [pq, r] : page.entries) {
    if (r == 0) continue;
    index[pq] = nodes.size();
    nodes.push_back(pq);
  }
  const std::size_t source = nodes.size();
  const std::size_t sink = nodes.size() + 1;
  FlowNetwork net(nodes.size() + 2);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto cap = static_cast<long long>(page.entries.at(nodes[i]));
    if (even(nodes[i].first + nodes[i].second)) {
      net.add(source, i, cap);
    } else {
      net.add(i, sink, cap);
    }
  }
  constexpr long long unbounded = std::numeric_limits<long long>::max() / 4;
  for (const auto& c : candidates) {
    const std::size_t u = index.at(c.source);
    const std::size_t v = index.at(c.target);
    if (even(c.source.first + c.source.second)) {
      net.add(u, v, unbounded);
    } else {
      net.add(v, u, unbounded);
    }
  }
  net.max_flow(source, sink);

  GradedSpace lower = page.totals();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const int t = nodes[i].first + nodes[i].second;
    const long long used = even(t) ? net.flow(source, i) : net.flow(i, sink);
    lower.set_rank(t, lower.rank(t) - static_cast<std::size_t>(used));
  }
  return lower;
}

HFResult compute_hf(const FibreFloerData& fibre, const TwistParams& params) {
  if (params.k() == 0) return HFDetermined{};
  if (params.k() == 1) return HFDetermined{fibre.hf};
  SpectralPage e1 = build_e1(fibre, params);
  auto candidates = collapse_analysis(e1);
  if (candidates.empty()) return HFDetermined{e1.totals()};
  HFAmbiguous amb;
  amb.upper = e1.totals();
  amb.lower = maximal_cancellation_lower_bound(e1, candidates);
  amb.candidates = std::move(candidates);
  amb.e1 = std::move(e1);
  return amb;
}

}  // namespace lfk
