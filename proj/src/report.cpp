#include "rbl2/report.hpp"

#include <algorithm>
#include <thread>

namespace rbl2 {

void VerificationReport::add(std::string condition, std::vector<std::size_t> indices, Vector residual) {
  violations.push_back({std::move(condition), std::move(indices), std::move(residual)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back({prefix + v.condition, v.indices, v.residual});
}

void VerificationReport::sort() {
  std::stable_sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    if (a.condition != b.condition) return a.condition < b.condition;
    return a.indices < b.indices;
  });
}

std::string condition_family(const std::string& id) { return id.substr(0, id.find(':')); }

std::set<std::string> VerificationReport::families() const {
  std::set<std::string> out;
  for (const auto& v : violations) out.insert(condition_family(v.condition));
  return out;
}

std::set<std::string> VerificationReport::conditions() const {
  std::set<std::string> out;
  for (const auto& v : violations) out.insert(v.condition);
  return out;
}

std::set<std::vector<std::size_t>> VerificationReport::tuples(const std::string& condition) const {
  std::set<std::vector<std::size_t>> out;
  for (const auto& v : violations)
    if (v.condition == condition) out.insert(v.indices);
  return out;
}

bool VerificationReport::has(const std::string& condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

std::string render(const Violation& v) {
  std::string s = "VIOLATION " + v.condition + " (";
  for (std::size_t i = 0; i < v.indices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v.indices[i] + 1);
  }
  return s + ") " + to_string(v.residual);
}

std::string VerificationReport::render() const {
  std::string s;
  for (const auto& v : violations) s += rbl2::render(v) + "\n";
  return s;
}

VerificationReport check_range(std::size_t count, const Exec& exec,
                               const std::function<void(std::size_t, VerificationReport&)>& check) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(exec.workers, count));
  std::vector<VerificationReport> parts(workers);
  if (workers == 1) {
    for (std::size_t t = 0; t < count; ++t) check(t, parts[0]);
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        for (std::size_t t = lo; t < hi; ++t) check(t, parts[w]);
      });
    }
    for (auto& th : threads) th.join();
  }
  VerificationReport out;
  for (const auto& p : parts) out.merge(p);
  out.sort();
  return out;
}

std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t arity, bool increasing) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(arity, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == arity) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = increasing ? start : 0; i < n; ++i) {
      cur[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<std::vector<std::size_t>> product(const std::vector<std::size_t>& dims) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(dims.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == dims.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < dims[pos]; ++i) {
      cur[pos] = i;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace rbl2
