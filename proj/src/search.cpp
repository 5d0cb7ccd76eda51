#include "rbl2/search.hpp"

#include <algorithm>
#include <climits>
#include <regex>
#include <thread>

#include "rbl2/errors.hpp"

namespace rbl2 {

namespace {

struct Grid {
  std::vector<Scalar> coeffs;
  std::vector<std::size_t> free;  // row-major positions that vary
  std::size_t dim = 0;
};

Grid make_grid(const SearchSpec& spec) {
  Grid g;
  g.coeffs = spec.coeffs;
  std::sort(g.coeffs.begin(), g.coeffs.end());
  g.coeffs.erase(std::unique(g.coeffs.begin(), g.coeffs.end()), g.coeffs.end());
  if (g.coeffs.empty()) throw Error("coefficient set must be non-empty");
  g.dim = spec.target.dim();
  if (spec.mask) require_shape(spec.mask->size() == g.dim * g.dim, "entry mask must have dim*dim cells");
  for (std::size_t p = 0; p < g.dim * g.dim; ++p)
    if (!spec.mask || (*spec.mask)[p]) g.free.push_back(p);
  return g;
}

unsigned long long count(const Grid& g) {
  unsigned long long n = 1;
  for (std::size_t i = 0; i < g.free.size(); ++i) {
    if (n > ULLONG_MAX / g.coeffs.size()) return ULLONG_MAX;
    n *= g.coeffs.size();
  }
  return n;
}

LinearMap candidate(const Grid& g, unsigned long long k) {
  LinearMap m(g.dim, g.dim);
  const std::size_t base = g.coeffs.size();
  // The first free entry is the most significant digit.
  for (std::size_t f = g.free.size(); f-- > 0;) {
    const std::size_t p = g.free[f];
    m.at(p / g.dim, p % g.dim) = g.coeffs[k % base];
    k /= base;
  }
  return m;
}

bool is_rb(const LieAlgebra& g, const LinearMap& R) {
  const std::size_t n = g.dim();
  std::vector<Vector> Re(n);
  for (std::size_t i = 0; i < n; ++i) Re[i] = R.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = g(Re[i], Re[j]);
      const Vector rhs = R.apply(g(Re[i], basis_vector(n, j)) + g(basis_vector(n, i), Re[j]));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

unsigned long long candidate_count(const SearchSpec& spec) { return count(make_grid(spec)); }

LinearMap grid_candidate(const SearchSpec& spec, unsigned long long k) { return candidate(make_grid(spec), k); }

std::vector<RotaBaxterLieAlgebra> enumerate_rb_operators(const SearchSpec& spec, const Exec& exec) {
  spec.target.check_shape();
  const Grid grid = make_grid(spec);
  const unsigned long long total = count(grid);
  if (total > spec.budget)
    throw BudgetExceeded("search needs " + (total == ULLONG_MAX ? std::string("more than 2^64") : std::to_string(total)) +
                             " candidates, budget is " + std::to_string(spec.budget),
                         total);
  const unsigned long long workers = std::clamp<unsigned long long>(exec.workers, 1, std::max(1ULL, total));
  std::vector<std::vector<LinearMap>> found(workers);
  auto run = [&](unsigned long long w) {
    const unsigned long long lo = total * w / workers, hi = total * (w + 1) / workers;
    for (unsigned long long k = lo; k < hi; ++k) {
      LinearMap R = candidate(grid, k);
      if (is_rb(spec.target, R)) found[w].push_back(std::move(R));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned long long w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  // Ranges are contiguous and ascending, so concatenation keeps the order.
  std::vector<RotaBaxterLieAlgebra> out;
  for (auto& part : found)
    for (auto& R : part) out.push_back({spec.target, std::move(R)});
  return out;
}

Site parse_site(const std::string& text) {
  static const std::regex re(R"(^(?:(source|target)\.)?([A-Za-z_][A-Za-z0-9_]*)\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw BadSite("malformed site \"" + text + "\"");
  Site s{m[1].str(), m[2].str(), {}};
  const std::string list = m[3].str();
  static const std::regex num(R"(\d+)");
  for (auto it = std::sregex_iterator(list.begin(), list.end(), num); it != std::sregex_iterator(); ++it) {
    const unsigned long long v = std::stoull(it->str());
    if (v == 0) throw BadSite("site indices are 1-based: \"" + text + "\"");
    s.indices.push_back(static_cast<std::size_t>(v - 1));
  }
  return s;
}

Document mutate(const Document& doc, const std::string& text, const Scalar& delta) {
  const Site site = parse_site(text);
  Document out = doc;
  Document* d = &out;
  if (!site.end.empty()) {
    auto& end = site.end == "source" ? out.source : out.target;
    if (!end) throw BadSite("kind " + doc.kind + " has no " + site.end);
    end = std::make_shared<Document>(*end);  // copy before writing, the pointer is shared with `doc`
    d = end.get();
  }
  const auto it = d->tensors.find(site.tensor);
  if (it == d->tensors.end()) throw BadSite("kind " + d->kind + " has no tensor \"" + site.tensor + "\"");
  SparseTensor& t = it->second;
  if (site.indices.size() != t.shape.size())
    throw BadSite("site \"" + text + "\" needs " + std::to_string(t.shape.size()) + " indices");
  for (std::size_t a = 0; a < t.shape.size(); ++a)
    if (site.indices[a] >= t.shape[a]) throw BadSite("site \"" + text + "\" is out of range");

  auto bump = [&](std::vector<std::size_t> ix, const Scalar& by) {
    Scalar& v = t.entries[ix];
    v += by;
    if (v.is_zero()) t.entries.erase(ix);
  };
  const std::string sym = tensor_symmetry(d->kind, site.tensor);
  const auto& ix = site.indices;
  if (sym == "skew") {
    if (ix[1] == ix[2]) throw BadSite("site \"" + text + "\" is on the diagonal of a skew tensor");
    bump(ix, delta);
    bump({ix[0], ix[2], ix[1]}, -delta);
  } else if (sym == "alt") {
    if (ix[1] == ix[2] || ix[1] == ix[3] || ix[2] == ix[3])
      throw BadSite("site \"" + text + "\" repeats an argument of an alternating tensor");
    std::vector<std::size_t> p{ix[1], ix[2], ix[3]};
    std::vector<std::size_t> order{0, 1, 2};
    do {
      // Parity of the permutation by counting inversions.
      int inv = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) inv += order[a] > order[b];
      bump({ix[0], p[order[0]], p[order[1]], p[order[2]]}, inv % 2 ? -delta : delta);
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    bump(ix, delta);
  }
  return out;
}

}  // namespace rbl2
