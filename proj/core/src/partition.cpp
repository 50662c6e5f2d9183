#include "bngap/partition.hpp"

#include <numeric>
#include <stdexcept>

#include "bngap/subset_mask.hpp"

namespace bngap {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

namespace {

void emit_partitions(int remaining, int cap, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition p;
    p.parts = prefix;
    out.push_back(std::move(p));
    return;
  }
  for (int f = std::min(cap, remaining); f >= 1; --f) {
    prefix.push_back(f);
    emit_partitions(remaining - f, f, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int m) {
  if (m < 0) throw std::invalid_argument("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(m, m, prefix, out);
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  check_rank(n);
  std::vector<Bipartition> out;
  for (int i = n; i >= 0; --i) {
    for (const Partition& a : enumerate_partitions(i))
      for (const Partition& b : enumerate_partitions(n - i))
        out.push_back(Bipartition{a, b});
  }
  return out;
}

bool is_trivial(const Bipartition& label) {
  return label.second.empty() && label.first.parts.size() == 1;
}

std::vector<Bipartition> gap_family(int n) {
  check_rank(n);
  std::vector<Bipartition> out;
  if (n >= 2)
    out.push_back(Bipartition{Partition({n - 1, 1}), Partition()});
  for (int k = 1; k <= n; ++k) {
    Partition first = (k == n) ? Partition() : Partition({n - k});
    out.push_back(Bipartition{std::move(first), Partition({k})});
  }
  return out;
}

bool in_gap_family(const Bipartition& label) {
  for (const Bipartition& f : gap_family(label.n()))
    if (f == label) return true;
  return false;
}

std::vector<Bipartition> pn_components(int n) {
  check_rank(n);
  if (n < 2) throw std::invalid_argument("pn components need n >= 2");
  return {Bipartition{Partition({n - 1, 1}), Partition()},
          Bipartition{Partition({n - 1}), Partition({1})}};
}

unsigned long long partition_dimension(const Partition& p) {
  const int m = p.size();
  if (m == 0) return 1;
  if (m > max_rank)
    throw std::invalid_argument("partition too large for exact dimension");
  const auto& parts = p.parts;
  const int rows = static_cast<int>(parts.size());
  // column lengths (conjugate partition)
  std::vector<int> col(static_cast<std::size_t>(parts[0]), 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < parts[static_cast<std::size_t>(r)]; ++c)
      ++col[static_cast<std::size_t>(c)];
  // m! and the hook product both divide 20!, so 64-bit stays exact
  unsigned long long fact = 1, hooks = 1;
  for (int k = 2; k <= m; ++k) fact *= static_cast<unsigned long long>(k);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < parts[static_cast<std::size_t>(r)]; ++c)
      hooks *= static_cast<unsigned long long>(
          parts[static_cast<std::size_t>(r)] - c +
          col[static_cast<std::size_t>(c)] - r - 1);
  return fact / hooks;
}

unsigned long long bipartition_dimension(const Bipartition& label) {
  return binomial(label.n(), label.first.size()) *
         partition_dimension(label.first) * partition_dimension(label.second);
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned long long>(n - k + i) /
        static_cast<unsigned long long>(i);
  }
  return r;
}

DominanceRelation compare_dominance(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  if (a == b) return DominanceRelation::equal;
  const std::size_t rows = std::max(a.parts.size(), b.parts.size());
  bool a_ge = true, b_ge = true;
  int sa = 0, sb = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    sa += r < a.parts.size() ? a.parts[r] : 0;
    sb += r < b.parts.size() ? b.parts[r] : 0;
    if (sa < sb) a_ge = false;
    if (sb < sa) b_ge = false;
  }
  if (a_ge) return DominanceRelation::strictly_greater;
  if (b_ge) return DominanceRelation::strictly_less;
  return DominanceRelation::incomparable;
}

std::string format_partition(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts[i]);
  }
  out += ']';
  return out;
}

std::string format_bipartition(const Bipartition& label) {
  return format_partition(label.first) + "|" + format_partition(label.second);
}

namespace {

Partition parse_partition_at(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '[')
    throw std::invalid_argument("partition must start with '['");
  ++pos;
  std::vector<int> parts;
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
    return Partition();
  }
  while (true) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start)
      throw std::invalid_argument("expected a part in partition");
    long v = std::stol(text.substr(start, pos - start));
    if (v <= 0 || v > max_rank)
      throw std::invalid_argument("partition part out of range");
    parts.push_back(static_cast<int>(v));
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    throw std::invalid_argument("expected ',' or ']' in partition");
  }
  return Partition(std::move(parts));
}

}  // namespace

Partition parse_partition(const std::string& text) {
  std::size_t pos = 0;
  Partition p = parse_partition_at(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("trailing characters after partition");
  return p;
}

Bipartition parse_bipartition(const std::string& text) {
  std::size_t pos = 0;
  Partition a = parse_partition_at(text, pos);
  if (pos >= text.size() || text[pos] != '|')
    throw std::invalid_argument("expected '|' between partitions");
  ++pos;
  Partition b = parse_partition_at(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("trailing characters after bipartition");
  return Bipartition{std::move(a), std::move(b)};
}

}  // namespace bngap
