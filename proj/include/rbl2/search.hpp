#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbl2/document.hpp"
#include "rbl2/lie.hpp"

namespace rbl2 {

struct SearchSpec {
  LieAlgebra target;
  std::vector<Scalar> coeffs{Scalar(-1), Scalar(0), Scalar(1)};
  /// Row-major dim x dim; false pins the entry to zero.
  std::optional<std::vector<bool>> mask;
  unsigned long long budget = 10'000'000ULL;
};

/// Number of grid candidates, saturating at ULLONG_MAX.
unsigned long long candidate_count(const SearchSpec& spec);

/// Every grid operator satisfying the Rota-Baxter identity, in
/// lexicographic row-major order of the entries. Throws BudgetExceeded.
std::vector<RotaBaxterLieAlgebra> enumerate_rb_operators(const SearchSpec& spec, const Exec& exec = {});

/// The k-th grid candidate in enumeration order.
LinearMap grid_candidate(const SearchSpec& spec, unsigned long long k);

/// A site "name[i,j,...]" with 1-based indices, optionally prefixed by
/// "source." or "target." for the ends of a homomorphism.
struct Site {
  std::string end;  // "", "source" or "target"
  std::string tensor;
  std::vector<std::size_t> indices;  // 0-based
};

Site parse_site(const std::string& text);

/// Adds delta at the site and, for skew or alternating tensors, the signed
/// amount at every partner entry. Throws BadSite.
Document mutate(const Document& doc, const std::string& site, const Scalar& delta);

template <class T>
T mutate(const T& value, const std::string& site, const Scalar& delta) {
  return std::get<T>(from_document(mutate(to_document(value), site, delta)));
}

}  // namespace rbl2
