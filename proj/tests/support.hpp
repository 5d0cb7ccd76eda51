#pragma once

// Shared helpers for the test binaries. The naive_* functions are
// independent oracles: they read tensor entries through at() only and
// never call the library's evaluation or verification code.

#include <random>
#include <string>
#include <vector>

#include "rbl2/catalog.hpp"
#include "rbl2/cli.hpp"
#include "rbl2/categorify.hpp"
#include "rbl2/crossed.hpp"
#include "rbl2/document.hpp"
#include "rbl2/errors.hpp"
#include "rbl2/search.hpp"
#include "rbl2/two_term.hpp"

namespace test {

using namespace rbl2;

inline Scalar q(long n, long d = 1) { return Scalar(n, d); }

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (const long x : xs) v.emplace_back(x);
  return v;
}

inline LinearMap mat(std::initializer_list<std::initializer_list<long>> rs) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : rs) out.push_back(vec(r));
  return LinearMap::from_rows(out);
}

using Rng = std::mt19937_64;

inline Vector random_vector(Rng& rng, std::size_t n, long span = 3) {
  std::uniform_int_distribution<long> d(-span, span);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
  return v;
}

inline LinearMap random_matrix(Rng& rng, std::size_t r, std::size_t c, long span = 2) {
  std::uniform_int_distribution<long> d(-span, span);
  LinearMap m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(d(rng));
  return m;
}

// Bracket of basis vectors as a raw coefficient list.
inline std::vector<Scalar> naive_basis_bracket(const BilinearMap& c, std::size_t i, std::size_t j) {
  std::vector<Scalar> out(c.dim_out());
  for (std::size_t k = 0; k < c.dim_out(); ++k) out[k] = c.at(k, i, j);
  return out;
}

// Bracket of arbitrary vectors by explicit double sum.
inline std::vector<Scalar> naive_bracket(const BilinearMap& c, const std::vector<Scalar>& x,
                                         const std::vector<Scalar>& y) {
  std::vector<Scalar> out(c.dim_out());
  for (std::size_t k = 0; k < c.dim_out(); ++k)
    for (std::size_t i = 0; i < c.dim_a(); ++i)
      for (std::size_t j = 0; j < c.dim_b(); ++j) out[k] += c.at(k, i, j) * x[i] * y[j];
  return out;
}

inline std::vector<Scalar> naive_apply(const LinearMap& m, const std::vector<Scalar>& x) {
  std::vector<Scalar> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * x[c];
  return out;
}

inline std::vector<Scalar> unit(std::size_t n, std::size_t i) {
  std::vector<Scalar> v(n);
  v[i] = Scalar(1);
  return v;
}

inline bool naive_is_lie(const BilinearMap& c) {
  const std::size_t n = c.dim_out();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c.at(k, i, j) != -c.at(k, j, i)) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        const auto t1 = naive_bracket(c, unit(n, a), naive_basis_bracket(c, b, d));
        const auto t2 = naive_bracket(c, unit(n, b), naive_basis_bracket(c, d, a));
        const auto t3 = naive_bracket(c, unit(n, d), naive_basis_bracket(c, a, b));
        for (std::size_t k = 0; k < n; ++k)
          if (!(t1[k] + t2[k] + t3[k]).is_zero()) return false;
      }
  return true;
}

inline bool naive_is_rb(const BilinearMap& c, const LinearMap& R) {
  const std::size_t n = c.dim_out();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto Ri = naive_apply(R, unit(n, i)), Rj = naive_apply(R, unit(n, j));
      const auto lhs = naive_bracket(c, Ri, Rj);
      auto inner = naive_bracket(c, Ri, unit(n, j));
      const auto second = naive_bracket(c, unit(n, i), Rj);
      for (std::size_t k = 0; k < n; ++k) inner[k] += second[k];
      if (lhs != naive_apply(R, inner)) return false;
    }
  return true;
}

inline bool naive_is_prelie(const BilinearMap& m) {
  const std::size_t n = m.dim_out();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        const auto ab_d = naive_bracket(m, naive_basis_bracket(m, a, b), unit(n, d));
        const auto a_bd = naive_bracket(m, unit(n, a), naive_basis_bracket(m, b, d));
        const auto ba_d = naive_bracket(m, naive_basis_bracket(m, b, a), unit(n, d));
        const auto b_ad = naive_bracket(m, unit(n, b), naive_basis_bracket(m, a, d));
        for (std::size_t k = 0; k < n; ++k)
          if (ab_d[k] - a_bd[k] != ba_d[k] - b_ad[k]) return false;
      }
  return true;
}

inline std::vector<std::string> families_of(const VerificationReport& r) {
  const auto f = r.families();
  return {f.begin(), f.end()};
}

/// Every catalog structure of type T.
template <class T>
std::vector<T> corpus() {
  std::vector<T> out;
  for (const auto& e : catalog::entries())
    if (const T* p = std::get_if<T>(&e.value)) out.push_back(*p);
  return out;
}

/// Catalog 2-term RB instances together with the targets of the corpus homs.
inline std::vector<TwoTermRBLInfinity> rb_instances() {
  std::vector<TwoTermRBLInfinity> out = corpus<TwoTermRBLInfinity>();
  for (const auto& f : catalog::homs()) out.push_back(f.target);
  return out;
}

/// Every valid single-entry mutation site of a document's tensor.
inline std::vector<std::string> sites(const Document& d, const std::string& tensor, const std::string& prefix = "") {
  std::vector<std::string> out;
  const SparseTensor& t = d.tensors.at(tensor);
  const std::string sym = tensor_symmetry(d.kind, tensor);
  for (const auto& ix : product(t.shape)) {
    if (sym == "skew" && !(ix[1] < ix[2])) continue;
    if (sym == "alt" && !(ix[1] < ix[2] && ix[2] < ix[3])) continue;
    std::string s = prefix + tensor + "[";
    for (std::size_t a = 0; a < ix.size(); ++a) s += (a ? "," : "") + std::to_string(ix[a] + 1);
    out.push_back(s + "]");
  }
  return out;
}

}  // namespace test
