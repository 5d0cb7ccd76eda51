#include "rbl2/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbl2/catalog.hpp"
#include "rbl2/categorify.hpp"
#include "rbl2/crossed.hpp"
#include "rbl2/errors.hpp"
#include "rbl2/search.hpp"

namespace rbl2 {

namespace {

/// Input of the wrong kind for a command; a usage error.
class WrongKind : public Error {
 public:
  using Error::Error;
};

template <class T>
const T& expect(const AnyStructure& s, const std::string& command, const std::string& kind) {
  if (const T* p = std::get_if<T>(&s)) return *p;
  throw WrongKind(command + " expects a " + kind + " document, got " + kind_of(s));
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

int report_exit(const VerificationReport& r, std::ostream& out) {
  if (r.ok()) {
    out << "OK\n";
    return kPass;
  }
  out << r.render();
  return kViolations;
}

AnyStructure construct(const std::string& op, const std::vector<AnyStructure>& in, VerificationReport& side) {
  const std::string cmd = "construct " + op;
  if (in.size() != 1) throw WrongKind(cmd + " takes exactly one input file");
  const AnyStructure& s = in.front();
  if (op == "prelie") return prelie_from_rb(expect<RotaBaxterLieAlgebra>(s, cmd, "rb-lie"));
  if (op == "subadjacent") return subadjacent_lie(expect<PreLieAlgebra>(s, cmd, "pre-lie"));
  if (op == "dual") return dual_representation(expect<RBRepresentation>(s, cmd, "representation"));
  if (op == "adjoint") return adjoint_representation(expect<RotaBaxterLieAlgebra>(s, cmd, "rb-lie"));
  if (op == "semidirect") return semidirect_product(expect<RBRepresentation>(s, cmd, "representation"));
  if (op == "crossed-to-strict") return crossed_to_strict(expect<RBLieCrossedModule>(s, cmd, "crossed-rb"));
  if (op == "strict-to-crossed") return strict_to_crossed(expect<TwoTermRBLInfinity>(s, cmd, "rb-2term"));
  if (op == "rb-to-prelie-cm") return rb_crossed_to_prelie_crossed(expect<RBLieCrossedModule>(s, cmd, "crossed-rb"));
  if (op == "prelie-to-lie-cm")
    return prelie_crossed_to_lie_crossed(expect<PreLieCrossedModule>(s, cmd, "crossed-prelie"));
  if (op == "derived-cm") {
    DerivedCrossed d = derived_crossed(expect<RBLieCrossedModule>(s, cmd, "crossed-rb"));
    side = d.hom_report;
    return d.module;
  }
  if (op == "cm-semidirect") return crossed_semidirect(expect<RBLieCrossedModule>(s, cmd, "crossed-rb"));
  throw WrongKind("unknown construction \"" + op + "\"");
}

VerificationReport roundtrip(const AnyStructure& s) {
  if (const auto* G = std::get_if<TwoTermRBLInfinity>(&s)) return roundtrip_ST(*G);
  if (const auto* L = std::get_if<TwoTermLInfinity>(&s))
    return roundtrip_ST(TwoTermRBLInfinity{*L, RBTriple::zero(L->dim0(), L->dim1())});
  if (const auto* f = std::get_if<RBLInfinityHom>(&s)) return roundtrip_ST(*f);
  if (const auto* f = std::get_if<LInfinityHom>(&s)) {
    const auto wrap = [](const TwoTermLInfinity& L) {
      return TwoTermRBLInfinity{L, RBTriple::zero(L.dim0(), L.dim1())};
    };
    return roundtrip_ST(RBLInfinityHom{wrap(f->source), wrap(f->target), f->phi0, f->phi1, f->phi2,
                                       LinearMap(f->target.dim1(), f->source.dim0())});
  }
  throw WrongKind("roundtrip expects a 2term, rb-2term, hom or rb-hom document, got " + kind_of(s));
}

AnyStructure compose_any(const AnyStructure& f, const AnyStructure& g) {
  // The first file is applied first.
  if (const auto* F = std::get_if<RBLInfinityHom>(&f)) return compose_rb_homs(expect<RBLInfinityHom>(g, "compose", "rb-hom"), *F);
  if (const auto* F = std::get_if<LInfinityHom>(&f)) return compose_homs(expect<LInfinityHom>(g, "compose", "hom"), *F);
  throw WrongKind("compose expects hom or rb-hom documents, got " + kind_of(f));
}

std::vector<Scalar> parse_coeffs(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
  if (out.empty()) throw BadRational("empty coefficient list");
  return out;
}

}  // namespace

VerificationReport verify_any(const AnyStructure& s, const Exec& exec) {
  struct Visitor {
    const Exec& exec;
    VerificationReport operator()(const LieAlgebra& g) const { return verify_lie(g, exec); }
    VerificationReport operator()(const RotaBaxterLieAlgebra& r) const {
      VerificationReport out = verify_lie(r.base, exec);
      out.merge(verify_rb(r, exec));
      out.sort();
      return out;
    }
    VerificationReport operator()(const PreLieAlgebra& p) const { return verify_prelie(p, exec); }
    VerificationReport operator()(const RBRepresentation& rep) const {
      VerificationReport out = (*this)(rep.algebra);
      out.merge(verify_representation(rep, exec));
      out.sort();
      return out;
    }
    VerificationReport operator()(const TwoTermLInfinity& L) const { return verify_2term(L, exec); }
    VerificationReport operator()(const TwoTermRBLInfinity& G) const { return verify_rb_2term_full(G, exec); }
    VerificationReport operator()(const LInfinityHom& f) const {
      VerificationReport out;
      out.merge(verify_2term(f.source, exec), "source.");
      out.merge(verify_2term(f.target, exec), "target.");
      out.merge(verify_hom(f, exec));
      out.sort();
      return out;
    }
    VerificationReport operator()(const RBLInfinityHom& f) const { return verify_rb_hom_full(f, exec); }
    VerificationReport operator()(const LieCrossedModule& cm) const { return verify_crossed(cm, exec); }
    VerificationReport operator()(const RBLieCrossedModule& cm) const { return verify_crossed(cm, exec); }
    VerificationReport operator()(const PreLieCrossedModule& pm) const { return verify_crossed(pm, exec); }
  };
  return std::visit(Visitor{exec}, s);
}

std::string write_operator_list(const std::vector<Scalar>& coeffs, const std::vector<LinearMap>& ops) {
  using json = nlohmann::json;
  std::ostringstream os;
  os << "{\n  \"coeffs\": [";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << json(coeffs[i].str()).dump();
  os << "],\n  \"operators\": [";
  for (std::size_t k = 0; k < ops.size(); ++k) {
    os << (k ? "," : "") << "\n    [";
    for (std::size_t r = 0; r < ops[k].rows(); ++r) {
      os << (r ? ", " : "") << "[";
      for (std::size_t c = 0; c < ops[k].cols(); ++c) os << (c ? ", " : "") << json(ops[k].at(r, c).str()).dump();
      os << "]";
    }
    os << "]";
  }
  os << (ops.empty() ? "" : "\n  ") << "]\n}\n";
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rota-Baxter Lie 2-algebra verifier", "rbl2"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned workers = 1;
  app.add_option("--workers", workers, "Worker threads for verification and search")->check(CLI::PositiveNumber);

  std::string file, file2, output, site, delta, coeffs = "-1,0,1", op;
  std::vector<std::string> files;
  unsigned long long budget = SearchSpec{}.budget;

  auto* verify = app.add_subcommand("verify", "Check every defining identity of a structure");
  verify->add_option("file", file)->required();

  auto* cons = app.add_subcommand("construct", "Apply a construction and write the result");
  cons->add_option("op", op)->required();
  cons->add_option("files", files)->required();
  cons->add_option("-o,--output", output);

  auto* rt = app.add_subcommand("roundtrip", "Compare S(T(x)) with x");
  rt->add_option("file", file)->required();

  auto* search = app.add_subcommand("search-rb", "Enumerate Rota-Baxter operators over a coefficient grid");
  search->add_option("file", file)->required();
  search->add_option("--coeffs", coeffs, "Comma-separated rationals");
  search->add_option("--budget", budget);
  search->add_option("-o,--output", output);

  auto* mut = app.add_subcommand("mutate", "Change one tensor entry");
  mut->add_option("file", file)->required();
  mut->add_option("--site", site)->required();
  mut->add_option("--delta", delta)->required();
  mut->add_option("-o,--output", output);

  auto* comp = app.add_subcommand("compose", "Composite homomorphism, first file applied first");
  comp->add_option("f", file)->required();
  comp->add_option("g", file2)->required();
  comp->add_option("-o,--output", output);

  auto* cat = app.add_subcommand("catalog", "Write the example catalog");
  cat->add_option("-o,--output", output)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  const Exec exec{workers};

  try {
    if (*verify) return report_exit(verify_any(load(file), exec), out);

    if (*cons) {
      std::vector<AnyStructure> in;
      for (const auto& f : files) in.push_back(load(f));
      VerificationReport side;
      const AnyStructure result = construct(op, in, side);
      emit(write_document(to_document(result)), output, out);
      if (!side.ok()) {
        err << side.render();
        return kViolations;
      }
      return kPass;
    }

    if (*rt) return report_exit(roundtrip(load(file)), out);

    if (*search) {
      const AnyStructure s = load(file);
      SearchSpec spec;
      if (const auto* r = std::get_if<RotaBaxterLieAlgebra>(&s)) {
        spec.target = r->base;
      } else {
        spec.target = expect<LieAlgebra>(s, "search-rb", "lie");
      }
      spec.coeffs = parse_coeffs(coeffs);
      spec.budget = budget;
      const auto found = enumerate_rb_operators(spec, exec);
      std::vector<LinearMap> ops;
      for (const auto& r : found) ops.push_back(r.R);
      std::vector<Scalar> sorted = spec.coeffs;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      emit(write_operator_list(sorted, ops), output, out);
      if (!output.empty()) out << "FOUND " << ops.size() << " OF " << candidate_count(spec) << "\n";
      return kPass;
    }

    if (*mut) {
      const Document d = mutate(load_document(file), site, Scalar::parse(delta));
      from_document(d);  // shape check
      emit(write_document(d), output, out);
      return kPass;
    }

    if (*comp) {
      emit(write_document(to_document(compose_any(load(file), load(file2)))), output, out);
      return kPass;
    }

    if (*cat) {
      std::filesystem::create_directories(output);
      for (const auto& e : catalog::entries())
        save(e.value, (std::filesystem::path(output) / (e.name + ".json")).string());
      return kPass;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DuplicateEntry& e) {
    err << "duplicate entry: " << e.what() << "\n";
    return kUsage;
  } catch (const BadRational& e) {
    err << "bad rational: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownKind& e) {
    err << "unknown kind: " << e.what() << "\n";
    return kUsage;
  } catch (const VersionMismatch& e) {
    err << "version mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeMismatch& e) {
    err << "shape mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const BadSite& e) {
    err << "bad site: " << e.what() << "\n";
    return kUsage;
  } catch (const WrongKind& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kViolations;
  }
  return kUsage;
}

}  // namespace rbl2
