#include "posetmod/io.hpp"

#include <map>
#include <set>

namespace posetmod::io {

SchemaError::SchemaError(std::string path, const std::string& what)
    : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path)) {}

namespace {

const Json& field_at(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing field");
  return *it;
}

const Json& array_at(const Json& j, const std::string& key, const std::string& path) {
  const Json& a = field_at(j, key, path);
  if (!a.is_array()) throw SchemaError(path + "/" + key, "expected an array");
  return a;
}

std::string string_at(const Json& j, const std::string& key, const std::string& path) {
  const Json& s = field_at(j, key, path);
  if (!s.is_string()) throw SchemaError(path + "/" + key, "expected a string");
  return s.get<std::string>();
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t count(const Json& j, const std::string& path) {
  std::int64_t v = integer(j, path);
  if (v < 0) throw SchemaError(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::vector<int> point_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected a point");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::int64_t v = integer(j[i], path + "/" + std::to_string(i));
    if (v < INT32_MIN || v > INT32_MAX) throw SchemaError(path, "coordinate out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

Json box_to_json(const Box& b) { return Json{{"lower", b.lower}, {"upper", b.upper}}; }

Box box_from_json(const Json& j, const std::string& path) {
  Box b{point_from_json(field_at(j, "lower", path), path + "/lower"),
        point_from_json(field_at(j, "upper", path), path + "/upper")};
  if (!b.valid()) throw SchemaError(path, "box corners are not ordered");
  return b;
}

std::string kind_or_throw(const Json& doc, const std::string& expected) {
  std::string kind = document_kind(doc);
  if (kind != expected) throw SchemaError("/kind", "expected a " + expected + " document, got " + kind);
  return kind;
}

Json module_body(const PosetModule& m) {
  const FinitePoset& p = *m.poset();
  Json maps = Json::array();
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    auto [a, b] = p.covers()[k];
    if (m.dim(a) == 0 || m.dim(b) == 0) continue;
    maps.push_back(Json{{"from", p.label(a)}, {"to", p.label(b)}, {"matrix", matrix_to_json(m.edge_map(k))}});
  }
  return Json{{"dims", m.dims()}, {"maps", std::move(maps)}};
}

PosetModule module_from_body(const PosetPtr& poset, const Field& f, const Json& j, const std::string& path) {
  const FinitePoset& p = *poset;
  const Json& dj = array_at(j, "dims", path);
  if (dj.size() != p.size()) throw SchemaError(path + "/dims", "expected one dimension per element");
  std::vector<std::size_t> dims;
  for (std::size_t a = 0; a < dj.size(); ++a) dims.push_back(count(dj[a], path + "/dims/" + std::to_string(a)));
  std::vector<std::optional<Matrix>> edges(p.covers().size());
  const Json& mj = array_at(j, "maps", path);
  for (std::size_t k = 0; k < mj.size(); ++k) {
    std::string mp = path + "/maps/" + std::to_string(k);
    Element a = element_from_json(p, field_at(mj[k], "from", mp), mp + "/from");
    Element b = element_from_json(p, field_at(mj[k], "to", mp), mp + "/to");
    auto idx = p.cover_index(a, b);
    if (!idx) throw SchemaError(mp, "map is not on a cover relation");
    if (edges[*idx]) throw SchemaError(mp, "map given twice");
    edges[*idx] = matrix_from_json(f, field_at(mj[k], "matrix", mp), dims[b], dims[a], mp + "/matrix");
  }
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = p.covers()[k];
    if (!edges[k]) {
      if (dims[a] != 0 && dims[b] != 0)
        throw SchemaError(path + "/maps", "missing map for cover " + p.label(a) + " < " + p.label(b));
      edges[k] = Matrix(f, dims[b], dims[a]);
    }
    out.push_back(std::move(*edges[k]));
  }
  return PosetModule::build(poset, f, std::move(dims), std::move(out));
}

std::vector<Element> elements_from_json(const FinitePoset& p, const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of elements");
  std::vector<Element> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element_from_json(p, j[i], path + "/" + std::to_string(i)));
  return out;
}

Json elements_to_json(const FinitePoset& p, const std::vector<Element>& els) {
  Json out = Json::array();
  for (auto a : els) out.push_back(p.label(a));
  return out;
}

Json labels_to_json(const FinitePoset& p, const std::vector<IndicatorLabel>& ls) {
  Json out = Json::array();
  for (const auto& l : ls) out.push_back(label_to_json(p, l));
  return out;
}

std::vector<IndicatorLabel> labels_from_json(const FinitePoset& p, const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of labels");
  std::vector<IndicatorLabel> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(label_from_json(p, j[i], path + "/" + std::to_string(i)));
  return out;
}

Json faces_to_json(const std::vector<FaceLabel>& ls) {
  Json out = Json::array();
  for (const auto& l : ls) out.push_back(face_label_to_json(l));
  return out;
}

std::vector<FaceLabel> faces_from_json(FaceKind kind, const Box& box, const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of face labels");
  std::vector<FaceLabel> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(face_label_from_json(kind, box, j[i], path + "/" + std::to_string(i)));
  return out;
}

std::string direction_name(Direction d) { return d == Direction::homological ? "homological" : "cohomological"; }

Direction direction_from_json(const Json& doc) {
  std::string d = string_at(doc, "direction", "");
  if (d == "homological") return Direction::homological;
  if (d == "cohomological") return Direction::cohomological;
  throw SchemaError("/direction", "expected homological or cohomological");
}

}  // namespace

Json header(const std::string& kind) { return Json{{"format", kFormat}, {"version", kVersion}, {"kind", kind}}; }

std::string document_kind(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("", "document must be an object");
  if (string_at(doc, "format", "") != kFormat) throw SchemaError("/format", "not a posetmod document");
  if (integer(field_at(doc, "version", ""), "/version") != kVersion)
    throw SchemaError("/version", "unsupported version (expected " + std::to_string(kVersion) + ")");
  return string_at(doc, "kind", "");
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Field document_field(const Json& doc, const std::optional<Field>& override) {
  if (override) return *override;
  auto it = doc.find("field");
  if (it == doc.end()) return Field{};
  try {
    if (it->is_number_integer()) return Field::prime(static_cast<std::uint32_t>(it->get<std::int64_t>()));
    if (it->is_string()) return Field::parse(it->get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/field", e.what());
  }
  throw SchemaError("/field", "expected a prime or \"Q\"");
}

Json poset_body(const FinitePoset& p) {
  if (p.grid_box()) return Json{{"grid", box_to_json(*p.grid_box())}};
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back(Json::array({p.label(a), p.label(b)}));
  return Json{{"elements", p.labels()}, {"covers", std::move(covers)}};
}

PosetPtr poset_from_body(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected a poset object");
  if (j.contains("grid")) return FinitePoset::grid(box_from_json(j["grid"], path + "/grid"));
  const Json& ej = field_at(j, "elements", path);
  std::vector<std::string> labels;
  if (ej.is_number_integer()) {
    for (std::size_t a = 0; a < count(ej, path + "/elements"); ++a) labels.push_back(std::to_string(a));
  } else if (ej.is_array()) {
    std::set<std::string> seen;
    for (std::size_t a = 0; a < ej.size(); ++a) {
      if (!ej[a].is_string()) throw SchemaError(path + "/elements/" + std::to_string(a), "expected a label");
      if (!seen.insert(ej[a].get<std::string>()).second)
        throw SchemaError(path + "/elements/" + std::to_string(a), "duplicate label");
      labels.push_back(ej[a].get<std::string>());
    }
  } else {
    throw SchemaError(path + "/elements", "expected a count or an array of labels");
  }
  // Labels only; relations resolve against them below.
  PosetPtr bare = FinitePoset::build(labels.size(), {}, labels);
  std::vector<std::pair<Element, Element>> rel;
  for (const char* key : {"covers", "relations"}) {
    if (!j.contains(key)) continue;
    const Json& rj = j[key];
    std::string rp = path + "/" + key;
    if (!rj.is_array()) throw SchemaError(rp, "expected an array of pairs");
    for (std::size_t k = 0; k < rj.size(); ++k) {
      std::string pp = rp + "/" + std::to_string(k);
      if (!rj[k].is_array() || rj[k].size() != 2) throw SchemaError(pp, "expected a pair");
      rel.emplace_back(element_from_json(*bare, rj[k][0], pp + "/0"), element_from_json(*bare, rj[k][1], pp + "/1"));
    }
  }
  return FinitePoset::build(labels.size(), rel, labels);
}

Element element_from_json(const FinitePoset& p, const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    std::int64_t v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::size_t>(v) >= p.size()) throw SchemaError(path, "element index out of range");
    return static_cast<Element>(v);
  }
  if (j.is_string()) {
    auto a = p.find_label(j.get<std::string>());
    if (!a) throw SchemaError(path, "unknown element '" + j.get<std::string>() + "'");
    return *a;
  }
  if (j.is_array()) {
    if (!p.grid_box()) throw SchemaError(path, "coordinates given for a non-grid poset");
    auto pt = point_from_json(j, path);
    if (!p.grid_box()->contains(pt)) throw SchemaError(path, "point outside the grid");
    return p.at(pt);
  }
  throw SchemaError(path, "expected an element label, index or point");
}

Json scalar_to_json(const Field& f, const Scalar& s) {
  if (s.den == 1) return s.num;
  return f.format(s);
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.field(), m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows)
    throw SchemaError(path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string rp = path + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) throw SchemaError(rp, "expected a row of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& v = j[r][c];
      std::string vp = rp + "/" + std::to_string(c);
      try {
        if (v.is_number_integer())
          m.at(r, c) = f.from_int(v.get<std::int64_t>());
        else if (v.is_string())
          m.at(r, c) = f.parse_scalar(v.get<std::string>());
        else
          throw SchemaError(vp, "expected an integer or \"p/q\"");
      } catch (const std::invalid_argument& e) {
        throw SchemaError(vp, e.what());
      } catch (const std::domain_error& e) {
        throw SchemaError(vp, e.what());
      }
    }
  }
  return m;
}

Json label_to_json(const FinitePoset& p, const IndicatorLabel& l) {
  if (l.kind == IndicatorKind::up) return Json{{"upset", elements_to_json(p, l.boundary(p))}};
  return Json{{"downset", elements_to_json(p, l.boundary(p))}};
}

IndicatorLabel label_from_json(const FinitePoset& p, const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected a label object");
  // Labels refer to the poset through element indices only, so a throwaway
  // handle suffices for the closure.
  PosetPtr handle(&p, [](const FinitePoset*) {});
  if (j.contains("upset"))
    return IndicatorLabel::of(Upset::closure(handle, elements_from_json(p, j["upset"], path + "/upset")));
  if (j.contains("downset"))
    return IndicatorLabel::of(Downset::closure(handle, elements_from_json(p, j["downset"], path + "/downset")));
  throw SchemaError(path, "label needs \"upset\" or \"downset\"");
}

Json face_label_to_json(const FaceLabel& l) { return Json{{"base", l.base}, {"faces", l.faces}}; }

FaceLabel face_label_from_json(FaceKind kind, const Box& box, const Json& j, const std::string& path) {
  FaceLabel l;
  l.kind = kind;
  l.base = point_from_json(field_at(j, "base", path), path + "/base");
  if (l.base.size() != box.dim()) throw SchemaError(path + "/base", "wrong dimension");
  std::int64_t faces = integer(field_at(j, "faces", path), path + "/faces");
  if (faces < 0 || faces >= (std::int64_t{1} << box.dim())) throw SchemaError(path + "/faces", "face mask out of range");
  l.faces = static_cast<std::uint32_t>(faces);
  return l;
}

Json to_document(const FinitePoset& p) {
  Json doc = header("poset");
  doc["poset"] = poset_body(p);
  return doc;
}

PosetPtr poset_from_document(const Json& doc) {
  kind_or_throw(doc, "poset");
  return poset_from_body(field_at(doc, "poset", ""), "/poset");
}

Json to_document(const PosetModule& m) {
  Json doc = header("module");
  doc["field"] = m.field().to_string();
  doc["poset"] = poset_body(*m.poset());
  Json body = module_body(m);
  for (auto& [k, v] : body.items()) doc[k] = v;
  return doc;
}

PosetModule module_from_document(const Json& doc, const std::optional<Field>& field) {
  kind_or_throw(doc, "module");
  PosetPtr p = poset_from_body(field_at(doc, "poset", ""), "/poset");
  return module_from_body(p, document_field(doc, field), doc, "");
}

Json to_document(const PosetMorphism& f) {
  Json doc = header("morphism");
  doc["source"] = poset_body(*f.source());
  doc["target"] = poset_body(*f.target());
  doc["map"] = elements_to_json(*f.target(), f.map());
  return doc;
}

PosetMorphism morphism_from_document(const Json& doc) {
  kind_or_throw(doc, "morphism");
  PosetPtr s = poset_from_body(field_at(doc, "source", ""), "/source");
  PosetPtr t = poset_from_body(field_at(doc, "target", ""), "/target");
  auto map = elements_from_json(*t, field_at(doc, "map", ""), "/map");
  if (map.size() != s->size()) throw SchemaError("/map", "expected one image per source element");
  return PosetMorphism(s, t, map);
}

Json to_document(const UpsetFamily& fam) {
  Json doc = header("upset-family");
  doc["poset"] = poset_body(*fam.poset);
  Json ups = Json::array();
  for (const auto& u : fam.upsets) ups.push_back(elements_to_json(*fam.poset, u.generators()));
  doc["upsets"] = std::move(ups);
  return doc;
}

UpsetFamily upset_family_from_document(const Json& doc) {
  kind_or_throw(doc, "upset-family");
  UpsetFamily fam;
  fam.poset = poset_from_body(field_at(doc, "poset", ""), "/poset");
  const Json& uj = array_at(doc, "upsets", "");
  for (std::size_t k = 0; k < uj.size(); ++k)
    fam.upsets.push_back(Upset::closure(fam.poset, elements_from_json(*fam.poset, uj[k], "/upsets/" + std::to_string(k))));
  return fam;
}

Json subdivision_document(const FinitePoset& p, const std::vector<std::vector<Element>>& regions) {
  Json doc = header("subdivision");
  Json rs = Json::array();
  for (const auto& r : regions) rs.push_back(elements_to_json(p, r));
  doc["regions"] = std::move(rs);
  return doc;
}

std::vector<std::vector<Element>> subdivision_from_document(const FinitePoset& p, const Json& doc) {
  kind_or_throw(doc, "subdivision");
  const Json& rj = array_at(doc, "regions", "");
  std::vector<std::vector<Element>> out;
  for (std::size_t k = 0; k < rj.size(); ++k) {
    out.push_back(elements_from_json(p, rj[k], "/regions/" + std::to_string(k)));
    if (out.back().empty()) throw SchemaError("/regions/" + std::to_string(k), "empty region");
  }
  return out;
}

Json to_document(const Encoding& e) {
  Json doc = header("encoding");
  doc["field"] = e.module.field().to_string();
  doc["source"] = poset_body(*e.pi.source());
  doc["target"] = poset_body(*e.pi.target());
  doc["pi"] = elements_to_json(*e.pi.target(), e.pi.map());
  doc["h"] = module_body(e.h);
  doc["module"] = module_body(e.module);
  Json w = Json::array();
  for (const auto& m : e.witness) w.push_back(matrix_to_json(m));
  doc["witness"] = std::move(w);
  return doc;
}

Encoding encoding_from_document(const Json& doc, const std::optional<Field>& field) {
  kind_or_throw(doc, "encoding");
  Field f = document_field(doc, field);
  PosetPtr q = poset_from_body(field_at(doc, "source", ""), "/source");
  PosetPtr p = poset_from_body(field_at(doc, "target", ""), "/target");
  auto map = elements_from_json(*p, field_at(doc, "pi", ""), "/pi");
  if (map.size() != q->size()) throw SchemaError("/pi", "expected one image per source element");
  Encoding e;
  e.pi = PosetMorphism(q, p, map);
  e.h = module_from_body(p, f, field_at(doc, "h", ""), "/h");
  e.module = module_from_body(q, f, field_at(doc, "module", ""), "/module");
  const Json& wj = array_at(doc, "witness", "");
  if (wj.size() != q->size()) throw SchemaError("/witness", "expected one matrix per source element");
  for (Element a = 0; a < q->size(); ++a)
    e.witness.push_back(
        matrix_from_json(f, wj[a], e.module.dim(a), e.h.dim(map[a]), "/witness/" + std::to_string(a)));
  return e;
}

Json to_document(const MultiFiltration& f) {
  Json doc = header("filtration");
  doc["grid"] = box_to_json(f.grid);
  Json ss = Json::array();
  for (const auto& s : f.simplices) ss.push_back(Json{{"vertices", s.vertices}, {"entry", s.entry}});
  doc["simplices"] = std::move(ss);
  return doc;
}

MultiFiltration filtration_from_document(const Json& doc) {
  kind_or_throw(doc, "filtration");
  MultiFiltration f;
  f.grid = box_from_json(field_at(doc, "grid", ""), "/grid");
  const Json& sj = array_at(doc, "simplices", "");
  for (std::size_t k = 0; k < sj.size(); ++k) {
    std::string sp = "/simplices/" + std::to_string(k);
    FilteredSimplex s;
    const Json& vj = array_at(sj[k], "vertices", sp);
    for (std::size_t i = 0; i < vj.size(); ++i) s.vertices.push_back(count(vj[i], sp + "/vertices/" + std::to_string(i)));
    const Json& ej = array_at(sj[k], "entry", sp);
    for (std::size_t i = 0; i < ej.size(); ++i) {
      s.entry.push_back(point_from_json(ej[i], sp + "/entry/" + std::to_string(i)));
      if (s.entry.back().size() != f.grid.dim()) throw SchemaError(sp + "/entry/" + std::to_string(i), "wrong dimension");
    }
    f.simplices.push_back(std::move(s));
  }
  return f;
}

Json to_document(const MonomialMatrix& mm) {
  Json doc = header("monomial-matrix");
  doc["field"] = mm.entries.field().to_string();
  doc["poset"] = poset_body(*mm.poset);
  doc["flow"] = mm.flow == Flow::rows_to_cols ? "rows-to-cols" : "cols-to-rows";
  doc["rows"] = labels_to_json(*mm.poset, mm.rows);
  doc["cols"] = labels_to_json(*mm.poset, mm.cols);
  doc["entries"] = matrix_to_json(mm.entries);
  return doc;
}

MonomialMatrix monomial_matrix_from_document(const Json& doc, const std::optional<Field>& field) {
  kind_or_throw(doc, "monomial-matrix");
  Field f = document_field(doc, field);
  MonomialMatrix mm;
  mm.poset = poset_from_body(field_at(doc, "poset", ""), "/poset");
  std::string flow = doc.contains("flow") ? string_at(doc, "flow", "") : "rows-to-cols";
  if (flow == "rows-to-cols")
    mm.flow = Flow::rows_to_cols;
  else if (flow == "cols-to-rows")
    mm.flow = Flow::cols_to_rows;
  else
    throw SchemaError("/flow", "expected rows-to-cols or cols-to-rows");
  mm.rows = labels_from_json(*mm.poset, field_at(doc, "rows", ""), "/rows");
  mm.cols = labels_from_json(*mm.poset, field_at(doc, "cols", ""), "/cols");
  mm.entries = matrix_from_json(f, field_at(doc, "entries", ""), mm.rows.size(), mm.cols.size(), "/entries");
  return mm;
}

Json to_document(const IndicatorComplex& c) {
  Json doc = header("complex");
  doc["field"] = c.field.to_string();
  doc["poset"] = poset_body(*c.poset);
  doc["direction"] = direction_name(c.direction);
  Json terms = Json::array();
  for (const auto& t : c.terms) terms.push_back(labels_to_json(*c.poset, t));
  doc["terms"] = std::move(terms);
  Json ds = Json::array();
  for (const auto& d : c.differentials) ds.push_back(matrix_to_json(d.entries));
  doc["differentials"] = std::move(ds);
  return doc;
}

IndicatorComplex complex_from_document(const Json& doc, const std::optional<Field>& field) {
  kind_or_throw(doc, "complex");
  IndicatorComplex c;
  c.field = document_field(doc, field);
  c.poset = poset_from_body(field_at(doc, "poset", ""), "/poset");
  c.direction = direction_from_json(doc);
  const Json& tj = array_at(doc, "terms", "");
  for (std::size_t i = 0; i < tj.size(); ++i) c.terms.push_back(labels_from_json(*c.poset, tj[i], "/terms/" + std::to_string(i)));
  const Json& dj = array_at(doc, "differentials", "");
  if (dj.size() + 1 != c.terms.size() && !(dj.empty() && c.terms.empty()))
    throw SchemaError("/differentials", "expected one differential between consecutive terms");
  for (std::size_t i = 0; i < dj.size(); ++i) {
    MonomialMatrix mm;
    mm.poset = c.poset;
    mm.flow = c.direction == Direction::homological ? Flow::cols_to_rows : Flow::rows_to_cols;
    mm.rows = c.terms[i];
    mm.cols = c.terms[i + 1];
    mm.entries = matrix_from_json(c.field, dj[i], mm.rows.size(), mm.cols.size(), "/differentials/" + std::to_string(i));
    c.differentials.push_back(std::move(mm));
  }
  return c;
}

Json to_document(const BoxModule& m) {
  Json doc = header("box-module");
  doc["field"] = m.module.field().to_string();
  doc["box"] = box_to_json(m.box);
  Json body = module_body(m.module);
  for (auto& [k, v] : body.items()) doc[k] = v;
  return doc;
}

BoxModule box_module_from_document(const Json& doc, const std::optional<Field>& field) {
  kind_or_throw(doc, "box-module");
  Box box = box_from_json(field_at(doc, "box", ""), "/box");
  return {box, module_from_body(FinitePoset::grid(box), document_field(doc, field), doc, "")};
}

Json to_document(const FlangePresentation& fp) {
  Json doc = header("flange");
  doc["field"] = fp.entries.field().to_string();
  doc["box"] = box_to_json(fp.box);
  doc["flats"] = faces_to_json(fp.flats);
  doc["injectives"] = faces_to_json(fp.injectives);
  doc["entries"] = matrix_to_json(fp.entries);
  return doc;
}

FlangePresentation flange_from_document(const Json& doc, const std::optional<Field>& field) {
  kind_or_throw(doc, "flange");
  FlangePresentation fp;
  fp.box = box_from_json(field_at(doc, "box", ""), "/box");
  fp.flats = faces_from_json(FaceKind::flat, fp.box, field_at(doc, "flats", ""), "/flats");
  fp.injectives = faces_from_json(FaceKind::injective, fp.box, field_at(doc, "injectives", ""), "/injectives");
  fp.entries = matrix_from_json(document_field(doc, field), field_at(doc, "entries", ""), fp.flats.size(),
                                fp.injectives.size(), "/entries");
  return fp;
}

Json to_document(const FaceComplex& c) {
  Json doc = header("face-complex");
  doc["field"] = c.field.to_string();
  doc["box"] = box_to_json(c.box);
  doc["direction"] = direction_name(c.direction);
  Json terms = Json::array();
  for (const auto& t : c.terms) terms.push_back(faces_to_json(t));
  doc["terms"] = std::move(terms);
  Json ds = Json::array();
  for (const auto& d : c.differentials) ds.push_back(matrix_to_json(d));
  doc["differentials"] = std::move(ds);
  return doc;
}

FaceComplex face_complex_from_document(const Json& doc, const std::optional<Field>& field) {
  kind_or_throw(doc, "face-complex");
  FaceComplex c;
  c.field = document_field(doc, field);
  c.box = box_from_json(field_at(doc, "box", ""), "/box");
  c.direction = direction_from_json(doc);
  FaceKind kind = c.direction == Direction::homological ? FaceKind::flat : FaceKind::injective;
  const Json& tj = array_at(doc, "terms", "");
  for (std::size_t i = 0; i < tj.size(); ++i) c.terms.push_back(faces_from_json(kind, c.box, tj[i], "/terms/" + std::to_string(i)));
  const Json& dj = array_at(doc, "differentials", "");
  if (dj.size() + 1 != c.terms.size() && !(dj.empty() && c.terms.empty()))
    throw SchemaError("/differentials", "expected one differential between consecutive terms");
  for (std::size_t i = 0; i < dj.size(); ++i)
    c.differentials.push_back(
        matrix_from_json(c.field, dj[i], c.terms[i].size(), c.terms[i + 1].size(), "/differentials/" + std::to_string(i)));
  return c;
}

Json to_document(const IndicatorPair& pair) {
  Json doc = header("indicator-pair");
  doc["poset"] = poset_body(*pair.poset);
  doc["source"] = label_to_json(*pair.poset, pair.source);
  doc["target"] = label_to_json(*pair.poset, pair.target);
  return doc;
}

IndicatorPair indicator_pair_from_document(const Json& doc) {
  kind_or_throw(doc, "indicator-pair");
  IndicatorPair pair;
  pair.poset = poset_from_body(field_at(doc, "poset", ""), "/poset");
  pair.source = label_from_json(*pair.poset, field_at(doc, "source", ""), "/source");
  pair.target = label_from_json(*pair.poset, field_at(doc, "target", ""), "/target");
  return pair;
}

Json hom_document(const FinitePoset& p, const HomSpace& h) {
  Json doc = header("hom");
  doc["dimension"] = h.dimension;
  Json comps = Json::array();
  for (const auto& c : h.components) comps.push_back(elements_to_json(p, c));
  doc["components"] = std::move(comps);
  return doc;
}

Json rank_document(const PosetModule& m) {
  const FinitePoset& p = *m.poset();
  Json doc = header("rank-invariant");
  doc["field"] = m.field().to_string();
  doc["poset"] = poset_body(p);
  Json ranks = Json::array();
  for (const auto& r : rank_invariant(m))
    ranks.push_back(Json{{"from", p.label(r.lower)}, {"to", p.label(r.upper)}, {"rank", r.rank}});
  doc["ranks"] = std::move(ranks);
  return doc;
}

Json uptight_document(const UptightPoset& u) {
  Json doc = to_document(*u.poset);
  const FinitePoset& p = *u.poset;
  const FinitePoset& q = *u.quotient.source();
  Json regions = Json::object();
  for (std::size_t k = 0; k < u.regions.size(); ++k) regions[p.label(k)] = elements_to_json(q, u.regions[k]);
  doc["regions"] = std::move(regions);
  Json raw = Json::array();
  for (auto [a, b] : u.raw_relation) raw.push_back(Json::array({p.label(a), p.label(b)}));
  doc["raw_relation"] = std::move(raw);
  doc["raw_transitive"] = u.raw_transitive;
  return doc;
}

Json presentation_document(const Presentations& pr) {
  Json doc = header("presentation");
  Json up = to_document(pr.upset);
  Json down = to_document(pr.downset);
  for (const char* k : {"format", "version", "kind"}) {
    up.erase(k);
    down.erase(k);
  }
  doc["upset"] = std::move(up);
  doc["downset"] = std::move(down);
  return doc;
}

Json certificate(const FinitePoset& p, const DiamondCertificate& d) {
  Json doc = header("certificate");
  doc["check"] = "commutativity";
  doc["lower"] = p.label(d.lower);
  doc["upper"] = p.label(d.upper);
  doc["path_a"] = elements_to_json(p, d.path_a);
  doc["path_b"] = elements_to_json(p, d.path_b);
  return doc;
}

Json certificate(const FinitePoset& p, const SubdivisionObstruction& o) {
  Json doc = header("certificate");
  doc["check"] = "constant-subdivision";
  static const char* names[] = {"not-a-partition", "dimension-mismatch", "singular-witness", "monodromy"};
  doc["obstruction"] = names[static_cast<int>(o.kind)];
  doc["region_from"] = o.region_from;
  doc["region_to"] = o.region_to;
  auto label = [&](Element a) { return a < p.size() ? Json(p.label(a)) : Json(a); };
  doc["first_pair"] = Json::array({label(o.first_lower), label(o.first_upper)});
  doc["second_pair"] = Json::array({label(o.second_lower), label(o.second_upper)});
  doc["message"] = o.message();
  return doc;
}

Json certificate(const std::vector<EntryViolation>& v) {
  Json doc = header("certificate");
  doc["check"] = "monomial-matrix";
  Json entries = Json::array();
  for (const auto& e : v) entries.push_back(Json::array({e.row, e.col}));
  doc["violations"] = std::move(entries);
  return doc;
}

Json certificate(const std::vector<FiltrationViolation>& v) {
  Json doc = header("certificate");
  doc["check"] = "filtration";
  Json out = Json::array();
  for (const auto& e : v) out.push_back(Json{{"simplex", e.simplex}, {"message", e.message()}});
  doc["violations"] = std::move(out);
  return doc;
}

Json certificate(const CycleError& e, const std::vector<std::string>& labels) {
  Json doc = header("certificate");
  doc["check"] = "antisymmetry";
  Json cyc = Json::array();
  for (auto a : e.cycle()) cyc.push_back(a < labels.size() ? Json(labels[a]) : Json(a));
  doc["cycle"] = std::move(cyc);
  return doc;
}

Json certificate(const std::vector<GridEdge>& edges) {
  Json doc = header("certificate");
  doc["check"] = "determination";
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(Json{{"point", e.point}, {"axis", e.axis + 1}});
  doc["edges"] = std::move(out);
  return doc;
}

Json failure_certificate(const std::string& check, const std::string& message) {
  Json doc = header("certificate");
  doc["check"] = check;
  doc["message"] = message;
  return doc;
}

}  // namespace posetmod::io
