#include "coplab/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace coplab {

namespace {

std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void check_size(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("partition size mismatch");
}

}  // namespace

Partition::Partition(const std::vector<std::uint32_t>& labels) {
  std::map<std::uint32_t, std::uint32_t> rename;
  ids_.reserve(labels.size());
  for (auto l : labels) {
    auto it = rename.try_emplace(l, static_cast<std::uint32_t>(rename.size()));
    ids_.push_back(it.first->second);
  }
}

Partition Partition::discrete(std::uint32_t n) {
  std::vector<std::uint32_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(ids);
}

Partition Partition::indiscrete(std::uint32_t n) {
  return Partition(std::vector<std::uint32_t>(n, 0));
}

Partition Partition::generated(
    std::uint32_t n,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw std::invalid_argument("pair out of range");
    parent[find(parent, a)] = find(parent, b);
  }
  std::vector<std::uint32_t> labels(n);
  for (std::uint32_t p = 0; p < n; ++p) labels[p] = find(parent, p);
  return Partition(labels);
}

std::uint32_t Partition::num_blocks() const {
  std::uint32_t m = 0;
  for (auto id : ids_) m = std::max(m, id + 1);
  return m;
}

Partition eq_meet(const Partition& a, const Partition& b) {
  check_size(a, b);
  std::vector<std::uint32_t> labels(a.n());
  for (std::uint32_t p = 0; p < a.n(); ++p) {
    labels[p] = a.block(p) * a.n() + b.block(p);
  }
  return Partition(labels);
}

Partition eq_join(const Partition& a, const Partition& b) {
  check_size(a, b);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::uint32_t> first_a(a.n(), a.n()), first_b(a.n(), a.n());
  for (std::uint32_t p = 0; p < a.n(); ++p) {
    if (first_a[a.block(p)] == a.n()) first_a[a.block(p)] = p;
    if (first_b[b.block(p)] == a.n()) first_b[b.block(p)] = p;
    pairs.emplace_back(p, first_a[a.block(p)]);
    pairs.emplace_back(p, first_b[b.block(p)]);
  }
  return Partition::generated(a.n(), pairs);
}

bool eq_leq(const Partition& a, const Partition& b) {
  check_size(a, b);
  std::vector<std::uint32_t> image(a.n(), a.n());
  for (std::uint32_t p = 0; p < a.n(); ++p) {
    auto& slot = image[a.block(p)];
    if (slot == a.n()) {
      slot = b.block(p);
    } else if (slot != b.block(p)) {
      return false;
    }
  }
  return true;
}

std::vector<Partition> enumerate_partitions(std::uint32_t n) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> rgs(n, 0);
  if (n == 0) return {Partition(rgs)};
  // Next restricted growth string: bump the rightmost position that may grow.
  while (true) {
    out.emplace_back(rgs);
    std::int64_t i = static_cast<std::int64_t>(n) - 1;
    for (; i > 0; --i) {
      std::uint32_t mx = 0;
      for (std::int64_t j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) break;
    }
    if (i <= 0) break;
    ++rgs[i];
    for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

std::string to_string(const Partition& a) {
  std::string out;
  for (std::uint32_t b = 0; b < a.num_blocks(); ++b) {
    if (b) out += '|';
    for (std::uint32_t p = 0; p < a.n(); ++p) {
      if (a.block(p) != b) continue;
      if (a.n() > 10 && !out.empty() && out.back() != '|') out += ',';
      out += std::to_string(p);
    }
  }
  return out;
}

}  // namespace coplab
