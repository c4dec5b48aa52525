#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "posetmod/io.hpp"

namespace posetmod::cli {

namespace {

using io::Json;

struct Options {
  std::string command;
  std::string input = "-";
  std::optional<Field> field;
  std::size_t degree = 0;
  std::string direction;
  std::string partition = "singletons";
  std::string output_dir;
};

/// A finished command: either a document to emit or a validation failure
/// whose certificate is emitted instead.
struct Outcome {
  int code = kOk;
  Json doc;
};

Outcome ok(Json doc) { return {kOk, std::move(doc)}; }
Outcome failed(Json cert) { return {kValidationFailure, std::move(cert)}; }

std::string read_all(std::istream& s) {
  std::ostringstream os;
  os << s.rdbuf();
  return os.str();
}

Json load(const std::string& path, std::istream& in) {
  if (path == "-") return io::parse(read_all(in));
  std::ifstream f(path);
  if (!f) throw io::SchemaError("", "cannot open " + path);
  return io::parse(read_all(f));
}

Json report(const std::string& kind) {
  Json doc = io::header("report");
  doc["valid"] = true;
  doc["checked"] = kind;
  return doc;
}

std::vector<std::string> poset_labels(const Json& body) {
  std::vector<std::string> out;
  if (body.is_object() && body.contains("elements") && body["elements"].is_array())
    for (const auto& l : body["elements"])
      if (l.is_string()) out.push_back(l.get<std::string>());
  return out;
}

/// Connectedness of every differential and d∘d = 0.
std::optional<Json> check_complex(const IndicatorComplex& c) {
  for (std::size_t i = 0; i < c.differentials.size(); ++i)
    if (auto v = validate_monomial_matrix(c.differentials[i]); !v.empty()) {
      Json cert = io::certificate(v);
      cert["differential"] = i;
      return cert;
    }
  auto homs = evaluate_complex(c);
  for (std::size_t i = 0; i + 1 < homs.size(); ++i) {
    ModuleHom dd = c.direction == Direction::homological ? homs[i + 1].then(homs[i]) : homs[i].then(homs[i + 1]);
    if (!dd.is_zero()) return io::failure_certificate("complex", "d∘d is nonzero at position " + std::to_string(i));
  }
  return std::nullopt;
}

Outcome validate(const Json& doc, const Options& opt) {
  std::string kind = io::document_kind(doc);
  try {
    if (kind == "poset") {
      io::poset_from_document(doc);
    } else if (kind == "module") {
      io::module_from_document(doc, opt.field);
    } else if (kind == "box-module") {
      io::box_module_from_document(doc, opt.field);
    } else if (kind == "morphism") {
      io::morphism_from_document(doc);
    } else if (kind == "upset-family") {
      io::upset_family_from_document(doc).validate();
    } else if (kind == "encoding") {
      Encoding e = io::encoding_from_document(doc, opt.field);
      if (auto err = verify_encoding(e)) return failed(io::failure_certificate("encoding", *err));
    } else if (kind == "filtration") {
      auto v = validate_filtration(io::filtration_from_document(doc));
      if (!v.empty()) return failed(io::certificate(v));
    } else if (kind == "monomial-matrix") {
      auto v = validate_monomial_matrix(io::monomial_matrix_from_document(doc, opt.field));
      if (!v.empty()) return failed(io::certificate(v));
    } else if (kind == "complex") {
      if (auto cert = check_complex(io::complex_from_document(doc, opt.field))) return failed(*cert);
    } else if (kind == "flange") {
      FlangePresentation fp = io::flange_from_document(doc, opt.field);
      std::vector<EntryViolation> bad;
      for (std::size_t r = 0; r < fp.flats.size(); ++r)
        for (std::size_t c = 0; c < fp.injectives.size(); ++c)
          if (!Field::is_zero(fp.entries.at(r, c)) && !f_preceq_e(fp.flats[r], fp.injectives[c])) bad.push_back({r, c});
      if (!bad.empty()) return failed(io::certificate(bad));
    } else if (kind == "face-complex") {
      if (auto cert = check_complex(to_indicator_complex(io::face_complex_from_document(doc, opt.field))))
        return failed(*cert);
    } else if (kind == "indicator-pair") {
      io::indicator_pair_from_document(doc);
    } else {
      throw io::SchemaError("/kind", "cannot validate documents of kind " + kind);
    }
  } catch (const NonCommutingError& e) {
    const Json& body = kind == "box-module" ? doc : doc.at("poset");
    PosetPtr p = kind == "box-module" ? io::box_module_from_document(doc, Field{}).module.poset()
                                      : io::poset_from_body(body, "/poset");
    return failed(io::certificate(*p, e.certificate()));
  } catch (const CycleError& e) {
    return failed(io::certificate(e, poset_labels(doc.contains("poset") ? doc["poset"] : Json())));
  }
  return ok(report(kind));
}

IndicatorModule indicator_of(const PosetPtr& p, const IndicatorLabel& l, const Field& f) {
  if (l.kind == IndicatorKind::up) return indicator_module(Upset::from_members(p, l.members), f);
  return indicator_module(Downset::from_members(p, l.members), f);
}

std::vector<std::vector<Element>> iso_partition(const PosetModule& m) {
  const FinitePoset& p = *m.poset();
  std::vector<Element> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Element a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    auto [a, b] = p.covers()[k];
    if (m.dim(a) == m.dim(b) && is_invertible(m.edge_map(k))) parent[std::max(find(a), find(b))] = std::min(find(a), find(b));
  }
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> slot(p.size(), static_cast<std::size_t>(-1));
  for (Element a = 0; a < p.size(); ++a) {
    Element r = find(a);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(a);
  }
  return out;
}

std::variant<Encoding, Json> encode_module(const PosetModule& m, const Options& opt, std::istream& in) {
  std::vector<std::vector<Element>> partition;
  if (opt.partition == "singletons") {
    for (Element a = 0; a < m.poset()->size(); ++a) partition.push_back({a});
  } else if (opt.partition == "iso") {
    partition = iso_partition(m);
  } else {
    partition = io::subdivision_from_document(*m.poset(), load(opt.partition, in));
  }
  auto cs = construct_witnesses(m, partition);
  if (auto* o = std::get_if<SubdivisionObstruction>(&cs)) return io::certificate(*m.poset(), *o);
  return uptight_encoding(std::get<ConstantSubdivision>(cs)).encoding;
}

Field filtration_field(const Json& doc, const Options& opt) { return io::document_field(doc, opt.field); }

Outcome encode(const Json& doc, const Options& opt, std::istream& in) {
  std::string kind = io::document_kind(doc);
  if (kind == "filtration") {
    return ok(io::to_document(natural_encoding(io::filtration_from_document(doc), opt.degree, filtration_field(doc, opt))));
  }
  if (kind != "module") throw io::SchemaError("/kind", "encode expects a module or filtration document");
  auto r = encode_module(io::module_from_document(doc, opt.field), opt, in);
  if (auto* cert = std::get_if<Json>(&r)) return failed(*cert);
  return ok(io::to_document(std::get<Encoding>(r)));
}

Outcome fringe(const Json& doc, const Options& opt) {
  std::string kind = io::document_kind(doc);
  Encoding e;
  if (kind == "encoding") {
    e = io::encoding_from_document(doc, opt.field);
    if (auto err = verify_encoding(e)) return failed(io::failure_certificate("encoding", *err));
  } else if (kind == "module") {
    e = identity_encoding(io::module_from_document(doc, opt.field));
  } else if (kind == "filtration") {
    e = natural_encoding(io::filtration_from_document(doc), opt.degree, filtration_field(doc, opt));
  } else {
    throw io::SchemaError("/kind", "fringe expects an encoding, module or filtration document");
  }
  FringePresentation fp = fringe_presentation(e);
  if (auto err = verify_fringe(fp)) throw std::logic_error("fringe presentation failed its check: " + *err);
  return ok(io::to_document(fp.mm));
}

BoxModule box_module(const Json& doc, const Options& opt) {
  std::string kind = io::document_kind(doc);
  if (kind == "box-module") return io::box_module_from_document(doc, opt.field);
  if (kind == "module") {
    PosetModule m = io::module_from_document(doc, opt.field);
    if (!m.poset()->grid_box()) throw io::SchemaError("/poset", "module must live on a grid");
    return convex_projection(m, canonical_box(m));
  }
  throw io::SchemaError("/kind", "expected a box-module or grid module document");
}

/// A module document, or the persistent homology of a filtration in degree --degree.
PosetModule module_input(const Json& doc, const Options& opt) {
  if (io::document_kind(doc) == "filtration")
    return persistent_homology(io::filtration_from_document(doc), opt.degree, filtration_field(doc, opt)).module;
  return io::module_from_document(doc, opt.field);
}

Outcome dispatch(const Options& opt, std::istream& in) {
  Json doc = load(opt.input, in);
  const std::string& cmd = opt.command;
  if (cmd == "validate") return validate(doc, opt);
  if (cmd == "hom") {
    io::IndicatorPair pair = io::indicator_pair_from_document(doc);
    Field f = io::document_field(doc, opt.field);
    HomSpace h = hom_indicator(indicator_of(pair.poset, pair.source, f), indicator_of(pair.poset, pair.target, f));
    return ok(io::hom_document(*pair.poset, h));
  }
  if (cmd == "uptight") return ok(io::uptight_document(uptight_poset(io::upset_family_from_document(doc))));
  if (cmd == "encode") return encode(doc, opt, in);
  if (cmd == "fringe") return fringe(doc, opt);
  if (cmd == "resolve") {
    PosetModule m = module_input(doc, opt);
    if (opt.direction == "down") return ok(io::to_document(downset_resolution(m).complex));
    if (opt.direction.empty() || opt.direction == "up") return ok(io::to_document(upset_resolution(m).complex));
    throw io::SchemaError("", "--direction must be up or down");
  }
  if (cmd == "present") return ok(io::presentation_document(presentations(module_input(doc, opt))));
  if (cmd == "zn-flange") return ok(io::to_document(flange_presentation(box_module(doc, opt))));
  if (cmd == "zn-matlis") return ok(io::to_document(matlis_dual(box_module(doc, opt))));
  if (cmd == "zn-resolve") {
    BoxModule m = box_module(doc, opt);
    if (opt.direction == "up") return ok(io::to_document(minimal_flat_resolution(m)));
    if (opt.direction.empty() || opt.direction == "down") return ok(io::to_document(minimal_injective_resolution(m)));
    throw io::SchemaError("", "--direction must be up or down");
  }
  if (cmd == "ph") {
    MultiFiltration f = io::filtration_from_document(doc);
    auto v = validate_filtration(f);
    if (!v.empty()) return failed(io::certificate(v));
    return ok(io::to_document(persistent_homology(f, opt.degree, filtration_field(doc, opt)).module));
  }
  if (cmd == "rank") return ok(io::rank_document(module_input(doc, opt)));
  throw io::SchemaError("", "unknown command " + cmd);
}

void emit(const Options& opt, const Json& doc, std::ostream& out) {
  if (opt.output_dir.empty()) {
    out << io::dump(doc);
    return;
  }
  std::filesystem::create_directories(opt.output_dir);
  std::ofstream f(std::filesystem::path(opt.output_dir) / (opt.command + ".json"));
  f << io::dump(doc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  std::string field_text;
  CLI::App app{"Exact computations with modules over finite posets and Z^n", "posetmod"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", field_text, "Coefficient field: a prime p or Q");
  app.add_option("--degree", opt.degree, "Homology degree for filtrations");
  app.add_option("--direction", opt.direction, "up (upset/flat) or down (downset/injective)");
  app.add_option("--partition", opt.partition, "encode: singletons, iso, or a subdivision document");
  app.add_option("--output-dir", opt.output_dir, "Write the result document into this directory");
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Check a document and print a certificate on failure"},
      {"hom", "Dimension of Hom between two indicator modules"},
      {"uptight", "Uptight poset of an upset family"},
      {"encode", "Finite encoding of a module or filtration"},
      {"fringe", "Fringe presentation of an encoded module"},
      {"resolve", "Upset or downset resolution of a module"},
      {"present", "Upset presentation and downset copresentation"},
      {"zn-flange", "Flange presentation of a box module"},
      {"zn-matlis", "Matlis dual of a box module"},
      {"zn-resolve", "Minimal injective (down) or flat (up) resolution of a box module"},
      {"ph", "Persistent homology module of a filtration"},
      {"rank", "Rank invariant of a module"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "Input document, - for stdin");
    sub->callback([&opt, name = name] { opt.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }

  try {
    if (!field_text.empty()) opt.field = Field::parse(field_text);
    Outcome result = dispatch(opt, in);
    emit(opt, result.doc, out);
    return result.code;
  } catch (const io::SchemaError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const NonCommutingError& e) {
    err << "validation failed: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const CycleError& e) {
    err << "validation failed: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const InvalidMonomialMatrix& e) {
    emit(opt, io::certificate(e.violations()), out);
    return kValidationFailure;
  } catch (const NotDetermined& e) {
    emit(opt, io::certificate(e.edges()), out);
    return kValidationFailure;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::overflow_error& e) {
    err << "arithmetic overflow: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }
}

}  // namespace posetmod::cli
