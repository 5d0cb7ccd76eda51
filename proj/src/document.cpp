#include "rbl2/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rbl2/errors.hpp"

namespace rbl2 {

using json = nlohmann::json;

namespace {

struct TensorSpec {
  std::string name;
  std::vector<std::string> axes;  // dim names; "s."/"t." refer to source/target
  std::string symmetry;
};

struct KindSpec {
  std::vector<std::string> dims;
  std::vector<std::string> label_spaces;
  std::string nested;  // kind of source/target, empty if none
  std::vector<TensorSpec> tensors;
};

const std::map<std::string, KindSpec>& schema() {
  static const std::map<std::string, KindSpec> s = [] {
    std::map<std::string, KindSpec> m;
    const TensorSpec bracket{"bracket", {"g", "g", "g"}, "skew"};
    m["lie"] = {{"g"}, {"g"}, "", {bracket}};
    m["rb-lie"] = {{"g"}, {"g"}, "", {bracket, {"R", {"g", "g"}, ""}}};
    m["pre-lie"] = {{"g"}, {}, "", {{"mult", {"g", "g", "g"}, ""}}};
    m["representation"] = {
        {"g", "V"}, {"g"}, "", {bracket, {"R", {"g", "g"}, ""}, {"rho", {"g", "V", "V"}, ""}, {"calR", {"V", "V"}, ""}}};
    const std::vector<TensorSpec> linf{{"l1", {"g0", "g1"}, ""},
                                       {"l2_00", {"g0", "g0", "g0"}, "skew"},
                                       {"l2_01", {"g1", "g0", "g1"}, ""},
                                       {"l3", {"g1", "g0", "g0", "g0"}, "alt"}};
    m["2term"] = {{"g0", "g1"}, {}, "", linf};
    auto rb = linf;
    rb.push_back({"R0", {"g0", "g0"}, ""});
    rb.push_back({"R1", {"g1", "g1"}, ""});
    rb.push_back({"R2", {"g1", "g0", "g0"}, "skew"});
    m["rb-2term"] = {{"g0", "g1"}, {}, "", rb};
    const std::vector<TensorSpec> hom{{"phi0", {"t.g0", "s.g0"}, ""},
                                      {"phi1", {"t.g1", "s.g1"}, ""},
                                      {"phi2", {"t.g1", "s.g0", "s.g0"}, "skew"}};
    m["hom"] = {{}, {}, "2term", hom};
    auto rbhom = hom;
    rbhom.push_back({"phi3", {"t.g1", "s.g0"}, ""});
    m["rb-hom"] = {{}, {}, "rb-2term", rbhom};
    const std::vector<TensorSpec> cm{{"bracket0", {"g0", "g0", "g0"}, "skew"},
                                     {"bracket1", {"g1", "g1", "g1"}, "skew"},
                                     {"d", {"g0", "g1"}, ""},
                                     {"rho", {"g0", "g1", "g1"}, ""}};
    m["crossed-lie"] = {{"g0", "g1"}, {"g0", "g1"}, "", cm};
    auto cmrb = cm;
    cmrb.push_back({"T0", {"g0", "g0"}, ""});
    cmrb.push_back({"T1", {"g1", "g1"}, ""});
    m["crossed-rb"] = {{"g0", "g1"}, {"g0", "g1"}, "", cmrb};
    m["crossed-prelie"] = {{"g0", "g1"},
                           {},
                           "",
                           {{"mult0", {"g0", "g0", "g0"}, ""},
                            {"mult1", {"g1", "g1", "g1"}, ""},
                            {"delta", {"g0", "g1"}, ""},
                            {"l", {"g0", "g1", "g1"}, ""},
                            {"r", {"g0", "g1", "g1"}, ""}}};
    for (auto& [k, v] : m)
      std::sort(v.tensors.begin(), v.tensors.end(), [](const TensorSpec& a, const TensorSpec& b) { return a.name < b.name; });
    return m;
  }();
  return s;
}

const KindSpec& spec_for(const std::string& kind) {
  const auto it = schema().find(kind);
  if (it == schema().end()) throw UnknownKind("unknown structure kind \"" + kind + "\"");
  return it->second;
}

std::size_t resolve_axis(const Document& doc, const std::string& axis) {
  const Document* d = &doc;
  std::string name = axis;
  if (axis.rfind("s.", 0) == 0) {
    d = doc.source.get();
    name = axis.substr(2);
  } else if (axis.rfind("t.", 0) == 0) {
    d = doc.target.get();
    name = axis.substr(2);
  }
  if (!d) throw ParseError("missing nested structure for axis " + axis, 0, 0);
  const auto it = d->dims.find(name);
  if (it == d->dims.end()) throw ParseError("missing dimension \"" + name + "\"", 0, 0);
  return it->second;
}

std::vector<std::size_t> shape_of(const Document& doc, const TensorSpec& t) {
  std::vector<std::size_t> shape;
  for (const auto& a : t.axes) shape.push_back(resolve_axis(doc, a));
  return shape;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void structure_error(const std::string& what) { throw ParseError(what, 0, 0); }

Document from_json(const json& j);

void read_tensor(const json& entries, const TensorSpec& spec, Document& doc) {
  SparseTensor t;
  t.shape = shape_of(doc, spec);
  if (!entries.is_array()) structure_error("tensor \"" + spec.name + "\" must be an array of entries");
  for (const auto& entry : entries) {
    if (!entry.is_array() || entry.size() != t.shape.size() + 1)
      structure_error("entry of \"" + spec.name + "\" must hold " + std::to_string(t.shape.size()) +
                      " indices and a value");
    std::vector<std::size_t> ix;
    for (std::size_t a = 0; a < t.shape.size(); ++a) {
      const auto& v = entry[a];
      if (!v.is_number_integer()) structure_error("index in \"" + spec.name + "\" must be an integer");
      const long long i = v.get<long long>();
      if (i < 1 || static_cast<std::size_t>(i) > t.shape[a])
        throw ShapeMismatch("index " + std::to_string(i) + " out of range in \"" + spec.name + "\"");
      ix.push_back(static_cast<std::size_t>(i - 1));
    }
    const auto& val = entry.back();
    if (!val.is_string()) throw BadRational("values in \"" + spec.name + "\" must be strings");
    const Scalar s = Scalar::parse(val.get<std::string>());
    if (t.entries.count(ix)) throw DuplicateEntry("duplicate index tuple in \"" + spec.name + "\"");
    t.entries[ix] = s;
  }
  // Explicit zeros are accepted on input and dropped.
  std::erase_if(t.entries, [](const auto& kv) { return kv.second.is_zero(); });
  doc.tensors[spec.name] = std::move(t);
}

Document from_json(const json& j) {
  if (!j.is_object()) structure_error("document must be an object");
  static const std::vector<std::string> allowed{"format", "version", "kind", "dims", "labels", "source", "target", "tensors"};
  for (const auto& [k, v] : j.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) structure_error("unknown key \"" + k + "\"");
  if (!j.contains("format") || j["format"] != "rbl2-structure") structure_error("\"format\" must be \"rbl2-structure\"");
  if (!j.contains("version") || !j["version"].is_number_integer()) structure_error("\"version\" must be an integer");
  if (j["version"].get<long long>() != Document::kVersion)
    throw VersionMismatch("unsupported version " + j["version"].dump());
  if (!j.contains("kind") || !j["kind"].is_string()) structure_error("\"kind\" must be a string");

  Document doc;
  doc.kind = j["kind"].get<std::string>();
  const KindSpec& spec = spec_for(doc.kind);

  const json dims = j.value("dims", json::object());
  if (!dims.is_object()) structure_error("\"dims\" must be an object");
  for (const auto& name : spec.dims) {
    if (!dims.contains(name) || !dims[name].is_number_integer() || dims[name].get<long long>() < 0)
      structure_error("dimension \"" + name + "\" must be a non-negative integer");
    doc.dims[name] = dims[name].get<std::size_t>();
  }
  for (const auto& [k, v] : dims.items())
    if (!doc.dims.count(k)) structure_error("unknown dimension \"" + k + "\"");

  if (j.contains("labels")) {
    const json& labels = j["labels"];
    if (!labels.is_object()) structure_error("\"labels\" must be an object");
    for (const auto& [k, v] : labels.items()) {
      if (std::find(spec.label_spaces.begin(), spec.label_spaces.end(), k) == spec.label_spaces.end())
        structure_error("labels are not supported for space \"" + k + "\"");
      if (!v.is_array() || v.size() != doc.dims[k]) throw ShapeMismatch("label count differs from dimension of " + k);
      std::vector<std::string> names;
      for (const auto& s : v) {
        if (!s.is_string()) structure_error("labels must be strings");
        names.push_back(s.get<std::string>());
      }
      doc.labels[k] = std::move(names);
    }
  }

  if (!spec.nested.empty()) {
    if (!j.contains("source") || !j.contains("target")) structure_error("\"source\" and \"target\" are required");
    doc.source = std::make_shared<Document>(from_json(j["source"]));
    doc.target = std::make_shared<Document>(from_json(j["target"]));
    if (doc.source->kind != spec.nested || doc.target->kind != spec.nested)
      structure_error("source and target must be of kind " + spec.nested);
  } else if (j.contains("source") || j.contains("target")) {
    structure_error("\"source\"/\"target\" only apply to homomorphisms");
  }

  if (!j.contains("tensors") || !j["tensors"].is_object()) structure_error("\"tensors\" must be an object");
  const json& tensors = j["tensors"];
  for (const auto& [k, v] : tensors.items()) {
    if (std::none_of(spec.tensors.begin(), spec.tensors.end(), [&](const TensorSpec& t) { return t.name == k; }))
      structure_error("unknown tensor \"" + k + "\" for kind " + doc.kind);
  }
  for (const auto& t : spec.tensors) {
    if (tensors.contains(t.name)) {
      read_tensor(tensors[t.name], t, doc);
    } else {
      doc.tensors[t.name] = SparseTensor{shape_of(doc, t), {}};
    }
  }
  return doc;
}

void write(const Document& doc, std::ostringstream& os, const std::string& indent) {
  const KindSpec& spec = spec_for(doc.kind);
  const std::string in = indent + "  ";
  os << "{\n";
  os << in << "\"format\": \"rbl2-structure\",\n";
  os << in << "\"version\": " << Document::kVersion << ",\n";
  os << in << "\"kind\": " << json(doc.kind).dump() << ",\n";
  os << in << "\"dims\": {";
  bool first = true;
  for (const auto& [k, v] : doc.dims) {
    os << (first ? "" : ", ") << json(k).dump() << ": " << v;
    first = false;
  }
  os << "},\n";
  if (!doc.labels.empty()) {
    os << in << "\"labels\": {";
    first = true;
    for (const auto& [k, names] : doc.labels) {
      os << (first ? "" : ", ") << json(k).dump() << ": [";
      for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << json(names[i]).dump();
      os << "]";
      first = false;
    }
    os << "},\n";
  }
  if (doc.source) {
    os << in << "\"source\": ";
    write(*doc.source, os, in);
    os << ",\n" << in << "\"target\": ";
    write(*doc.target, os, in);
    os << ",\n";
  }
  os << in << "\"tensors\": {";
  for (std::size_t t = 0; t < spec.tensors.size(); ++t) {
    const auto& name = spec.tensors[t].name;
    const auto it = doc.tensors.find(name);
    os << (t ? "," : "") << "\n" << in << "  " << json(name).dump() << ": [";
    if (it != doc.tensors.end() && !it->second.entries.empty()) {
      bool first_entry = true;
      for (const auto& [ix, val] : it->second.entries) {
        if (val.is_zero()) continue;
        os << (first_entry ? "" : ",") << "\n" << in << "    [";
        for (const auto i : ix) os << (i + 1) << ", ";
        os << json(val.str()).dump() << "]";
        first_entry = false;
      }
      os << "\n" << in << "  ";
    }
    os << "]";
  }
  os << "\n" << in << "}\n" << indent << "}";
}

// Typed conversions.

SparseTensor put(const LinearMap& m) {
  SparseTensor t{{m.rows(), m.cols()}, {}};
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) t.entries[{r, c}] = m.at(r, c);
  return t;
}

SparseTensor put(const BilinearMap& m) {
  SparseTensor t{{m.dim_out(), m.dim_a(), m.dim_b()}, {}};
  for (std::size_t k = 0; k < m.dim_out(); ++k)
    for (std::size_t i = 0; i < m.dim_a(); ++i)
      for (std::size_t j = 0; j < m.dim_b(); ++j)
        if (!m.at(k, i, j).is_zero()) t.entries[{k, i, j}] = m.at(k, i, j);
  return t;
}

SparseTensor put(const TrilinearMap& m) {
  const std::size_t n = m.dim();
  SparseTensor t{{m.dim_out(), n, n, n}, {}};
  for (std::size_t l = 0; l < m.dim_out(); ++l)
    for (const auto& ix : tuples(n, 3, false))
      if (!m.at(l, ix[0], ix[1], ix[2]).is_zero()) t.entries[{l, ix[0], ix[1], ix[2]}] = m.at(l, ix[0], ix[1], ix[2]);
  return t;
}

SparseTensor put(const Action& a, std::size_t n0, std::size_t n1) {
  SparseTensor t{{n0, n1, n1}, {}};
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t r = 0; r < n1; ++r)
      for (std::size_t c = 0; c < n1; ++c)
        if (!a[x].at(r, c).is_zero()) t.entries[{x, r, c}] = a[x].at(r, c);
  return t;
}

const SparseTensor& tensor(const Document& d, const std::string& name) {
  const auto it = d.tensors.find(name);
  if (it == d.tensors.end()) structure_error("missing tensor \"" + name + "\"");
  return it->second;
}

LinearMap get_linear(const Document& d, const std::string& name) {
  const SparseTensor& t = tensor(d, name);
  require_shape(t.shape.size() == 2, name + " must be a matrix");
  LinearMap m(t.shape[0], t.shape[1]);
  for (const auto& [ix, v] : t.entries) m.at(ix[0], ix[1]) = v;
  return m;
}

BilinearMap get_bilinear(const Document& d, const std::string& name) {
  const SparseTensor& t = tensor(d, name);
  require_shape(t.shape.size() == 3, name + " must be a bilinear map");
  BilinearMap m(t.shape[1], t.shape[2], t.shape[0]);
  for (const auto& [ix, v] : t.entries) m.at(ix[0], ix[1], ix[2]) = v;
  return m;
}

TrilinearMap get_trilinear(const Document& d, const std::string& name) {
  const SparseTensor& t = tensor(d, name);
  require_shape(t.shape.size() == 4, name + " must be a trilinear map");
  TrilinearMap m(t.shape[1], t.shape[0]);
  for (const auto& [ix, v] : t.entries) m.at(ix[0], ix[1], ix[2], ix[3]) = v;
  return m;
}

Action get_action(const Document& d, const std::string& name) {
  const SparseTensor& t = tensor(d, name);
  require_shape(t.shape.size() == 3 && t.shape[1] == t.shape[2], name + " must be an action");
  Action a(t.shape[0], LinearMap(t.shape[1], t.shape[2]));
  for (const auto& [ix, v] : t.entries) a[ix[0]].at(ix[1], ix[2]) = v;
  return a;
}

std::vector<std::string> labels_of(const Document& d, const std::string& space) {
  const auto it = d.labels.find(space);
  return it == d.labels.end() ? std::vector<std::string>{} : it->second;
}

LieAlgebra lie_from(const Document& d, const std::string& tensor_name, const std::string& space) {
  LieAlgebra g{get_bilinear(d, tensor_name), labels_of(d, space)};
  g.check_shape();
  return g;
}

void put_lie(Document& d, const LieAlgebra& g, const std::string& tensor_name, const std::string& space) {
  d.tensors[tensor_name] = put(g.bracket);
  if (!g.labels.empty()) d.labels[space] = g.labels;
}

Document doc_2term(const TwoTermLInfinity& L, const std::string& kind) {
  Document d;
  d.kind = kind;
  d.dims = {{"g0", L.dim0()}, {"g1", L.dim1()}};
  d.tensors["l1"] = put(L.complex.l1);
  d.tensors["l2_00"] = put(L.l2_00);
  d.tensors["l2_01"] = put(L.l2_01);
  d.tensors["l3"] = put(L.l3);
  return d;
}

Document doc_rb2term(const TwoTermRBLInfinity& G) {
  Document d = doc_2term(G.linf, "rb-2term");
  d.tensors["R0"] = put(G.rb.R0);
  d.tensors["R1"] = put(G.rb.R1);
  d.tensors["R2"] = put(G.rb.R2);
  return d;
}

TwoTermLInfinity linf_from(const Document& d) {
  TwoTermLInfinity L{{get_linear(d, "l1")}, get_bilinear(d, "l2_00"), get_bilinear(d, "l2_01"), get_trilinear(d, "l3")};
  L.check_shape();
  return L;
}

TwoTermRBLInfinity rb2term_from(const Document& d) {
  TwoTermRBLInfinity G{linf_from(d), {get_linear(d, "R0"), get_linear(d, "R1"), get_bilinear(d, "R2")}};
  G.check_shape();
  return G;
}

Document doc_lie_cm(const LieCrossedModule& cm, const std::string& kind) {
  Document d;
  d.kind = kind;
  d.dims = {{"g0", cm.g0.dim()}, {"g1", cm.g1.dim()}};
  put_lie(d, cm.g0, "bracket0", "g0");
  put_lie(d, cm.g1, "bracket1", "g1");
  if (d.labels.size() == 1) d.labels.clear();  // labels are written for both spaces or neither
  d.tensors["d"] = put(cm.d);
  d.tensors["rho"] = put(cm.rho, cm.g0.dim(), cm.g1.dim());
  return d;
}

LieCrossedModule lie_cm_from(const Document& d) {
  LieCrossedModule cm{lie_from(d, "bracket0", "g0"), lie_from(d, "bracket1", "g1"), get_linear(d, "d"),
                      get_action(d, "rho")};
  cm.check_shape();
  return cm;
}

struct ToDoc {
  Document operator()(const LieAlgebra& g) const {
    Document d;
    d.kind = "lie";
    d.dims = {{"g", g.dim()}};
    put_lie(d, g, "bracket", "g");
    return d;
  }
  Document operator()(const RotaBaxterLieAlgebra& r) const {
    Document d = (*this)(r.base);
    d.kind = "rb-lie";
    d.tensors["R"] = put(r.R);
    return d;
  }
  Document operator()(const PreLieAlgebra& p) const {
    Document d;
    d.kind = "pre-lie";
    d.dims = {{"g", p.dim()}};
    d.tensors["mult"] = put(p.mult);
    return d;
  }
  Document operator()(const RBRepresentation& rep) const {
    Document d = (*this)(rep.algebra);
    d.kind = "representation";
    d.dims["V"] = rep.dim_v;
    d.tensors["rho"] = put(rep.rho, rep.algebra.dim(), rep.dim_v);
    d.tensors["calR"] = put(rep.calR);
    return d;
  }
  Document operator()(const TwoTermLInfinity& L) const { return doc_2term(L, "2term"); }
  Document operator()(const TwoTermRBLInfinity& G) const { return doc_rb2term(G); }
  Document operator()(const LInfinityHom& f) const {
    Document d;
    d.kind = "hom";
    d.source = std::make_shared<Document>(doc_2term(f.source, "2term"));
    d.target = std::make_shared<Document>(doc_2term(f.target, "2term"));
    d.tensors["phi0"] = put(f.phi0);
    d.tensors["phi1"] = put(f.phi1);
    d.tensors["phi2"] = put(f.phi2);
    return d;
  }
  Document operator()(const RBLInfinityHom& f) const {
    Document d;
    d.kind = "rb-hom";
    d.source = std::make_shared<Document>(doc_rb2term(f.source));
    d.target = std::make_shared<Document>(doc_rb2term(f.target));
    d.tensors["phi0"] = put(f.phi0);
    d.tensors["phi1"] = put(f.phi1);
    d.tensors["phi2"] = put(f.phi2);
    d.tensors["phi3"] = put(f.phi3);
    return d;
  }
  Document operator()(const LieCrossedModule& cm) const { return doc_lie_cm(cm, "crossed-lie"); }
  Document operator()(const RBLieCrossedModule& cm) const {
    Document d = doc_lie_cm(cm.base, "crossed-rb");
    d.tensors["T0"] = put(cm.T0);
    d.tensors["T1"] = put(cm.T1);
    return d;
  }
  Document operator()(const PreLieCrossedModule& pm) const {
    Document d;
    d.kind = "crossed-prelie";
    d.dims = {{"g0", pm.p0.dim()}, {"g1", pm.p1.dim()}};
    d.tensors["mult0"] = put(pm.p0.mult);
    d.tensors["mult1"] = put(pm.p1.mult);
    d.tensors["delta"] = put(pm.delta);
    d.tensors["l"] = put(pm.l, pm.p0.dim(), pm.p1.dim());
    d.tensors["r"] = put(pm.r, pm.p0.dim(), pm.p1.dim());
    return d;
  }
};

}  // namespace

const std::vector<std::string>& known_kinds() {
  static const std::vector<std::string> kinds = [] {
    std::vector<std::string> k;
    for (const auto& [name, spec] : schema()) k.push_back(name);
    return k;
  }();
  return kinds;
}

std::string tensor_symmetry(const std::string& kind, const std::string& tensor_name) {
  for (const auto& t : spec_for(kind).tensors)
    if (t.name == tensor_name) return t.symmetry;
  throw BadSite("kind " + kind + " has no tensor \"" + tensor_name + "\"");
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col), line, col);
  }
  return from_json(j);
}

std::string write_document(const Document& doc) {
  std::ostringstream os;
  write(doc, os, "");
  os << "\n";
  return os.str();
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void save_document(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << write_document(doc);
}

Document to_document(const AnyStructure& s) { return std::visit(ToDoc{}, s); }

AnyStructure from_document(const Document& d) {
  const std::string& k = d.kind;
  if (k == "lie") return lie_from(d, "bracket", "g");
  if (k == "rb-lie") {
    RotaBaxterLieAlgebra r{lie_from(d, "bracket", "g"), get_linear(d, "R")};
    r.check_shape();
    return r;
  }
  if (k == "pre-lie") {
    PreLieAlgebra p{get_bilinear(d, "mult")};
    p.check_shape();
    return p;
  }
  if (k == "representation") {
    RBRepresentation rep{{lie_from(d, "bracket", "g"), get_linear(d, "R")}, d.dims.at("V"), get_action(d, "rho"),
                         get_linear(d, "calR")};
    rep.check_shape();
    return rep;
  }
  if (k == "2term") return linf_from(d);
  if (k == "rb-2term") return rb2term_from(d);
  if (k == "hom") {
    LInfinityHom f{linf_from(*d.source), linf_from(*d.target), get_linear(d, "phi0"), get_linear(d, "phi1"),
                   get_bilinear(d, "phi2")};
    f.check_shape();
    return f;
  }
  if (k == "rb-hom") {
    RBLInfinityHom f{rb2term_from(*d.source), rb2term_from(*d.target), get_linear(d, "phi0"), get_linear(d, "phi1"),
                     get_bilinear(d, "phi2"), get_linear(d, "phi3")};
    f.check_shape();
    return f;
  }
  if (k == "crossed-lie") return lie_cm_from(d);
  if (k == "crossed-rb") {
    RBLieCrossedModule cm{lie_cm_from(d), get_linear(d, "T0"), get_linear(d, "T1")};
    cm.check_shape();
    return cm;
  }
  if (k == "crossed-prelie") {
    PreLieCrossedModule pm{{get_bilinear(d, "mult0")}, {get_bilinear(d, "mult1")}, get_linear(d, "delta"),
                           get_action(d, "l"), get_action(d, "r")};
    pm.check_shape();
    return pm;
  }
  throw UnknownKind("unknown structure kind \"" + k + "\"");
}

AnyStructure load(const std::string& path) { return from_document(load_document(path)); }

void save(const AnyStructure& s, const std::string& path) { save_document(to_document(s), path); }

std::string kind_of(const AnyStructure& s) { return to_document(s).kind; }

}  // namespace rbl2
