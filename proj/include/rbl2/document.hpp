#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rbl2/crossed.hpp"
#include "rbl2/lie.hpp"
#include "rbl2/two_term.hpp"

namespace rbl2 {

/// Sparse tensor: index tuples (0-based) to nonzero values.
struct SparseTensor {
  std::vector<std::size_t> shape;
  std::map<std::vector<std::size_t>, Scalar> entries;

  friend bool operator==(const SparseTensor&, const SparseTensor&) = default;
};

/// The file-level form of every structure kind.
struct Document {
  static constexpr int kVersion = 1;

  std::string kind;
  std::map<std::string, std::size_t> dims;
  std::map<std::string, std::vector<std::string>> labels;
  std::map<std::string, SparseTensor> tensors;
  std::shared_ptr<Document> source;
  std::shared_ptr<Document> target;
};

using AnyStructure = std::variant<LieAlgebra, RotaBaxterLieAlgebra, PreLieAlgebra, RBRepresentation, TwoTermLInfinity,
                                  TwoTermRBLInfinity, LInfinityHom, RBLInfinityHom, LieCrossedModule,
                                  RBLieCrossedModule, PreLieCrossedModule>;

const std::vector<std::string>& known_kinds();

/// Parses JSON text. Throws ParseError, DuplicateEntry, BadRational,
/// UnknownKind, VersionMismatch or ShapeMismatch.
Document parse_document(const std::string& text);
/// Canonical text: fixed key order, sorted entries, one entry per line.
std::string write_document(const Document& doc);

Document load_document(const std::string& path);
void save_document(const Document& doc, const std::string& path);

Document to_document(const AnyStructure& s);
AnyStructure from_document(const Document& doc);

AnyStructure load(const std::string& path);
void save(const AnyStructure& s, const std::string& path);
std::string kind_of(const AnyStructure& s);

/// Whether the named tensor of a kind is skew in its two inputs ("skew"),
/// alternating in three ("alt"), or unconstrained ("").
std::string tensor_symmetry(const std::string& kind, const std::string& tensor);

}  // namespace rbl2
