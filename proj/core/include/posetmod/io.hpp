#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "posetmod/encoding.hpp"
#include "posetmod/filtration.hpp"
#include "posetmod/resolve.hpp"
#include "posetmod/zn.hpp"

namespace posetmod::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormat = "posetmod";
inline constexpr int kVersion = 1;

/// Malformed document; `path` points at the offending field.
class SchemaError : public std::runtime_error {
public:
  SchemaError(std::string path, const std::string& what);
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

/// Header {"format", "version", "kind"}.
Json header(const std::string& kind);
/// Checks format and version; returns the kind.
std::string document_kind(const Json& doc);
Json parse(const std::string& text);
/// Two-space indented text with a trailing newline.
std::string dump(const Json& doc);

/// Field named by the document, unless overridden. Defaults to GF(2).
Field document_field(const Json& doc, const std::optional<Field>& override = std::nullopt);

// Bodies: the fields a document carries for one object, without header.
Json poset_body(const FinitePoset& p);
PosetPtr poset_from_body(const Json& j, const std::string& path = "");
Element element_from_json(const FinitePoset& p, const Json& j, const std::string& path);

Json scalar_to_json(const Field& f, const Scalar& s);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& path);

Json label_to_json(const FinitePoset& p, const IndicatorLabel& l);
IndicatorLabel label_from_json(const FinitePoset& p, const Json& j, const std::string& path);

Json face_label_to_json(const FaceLabel& l);
FaceLabel face_label_from_json(FaceKind kind, const Box& box, const Json& j, const std::string& path);

// Whole documents.
Json to_document(const FinitePoset& p);
PosetPtr poset_from_document(const Json& doc);

Json to_document(const PosetModule& m);
PosetModule module_from_document(const Json& doc, const std::optional<Field>& field = std::nullopt);

Json to_document(const PosetMorphism& f);
PosetMorphism morphism_from_document(const Json& doc);

Json to_document(const UpsetFamily& fam);
UpsetFamily upset_family_from_document(const Json& doc);

Json subdivision_document(const FinitePoset& p, const std::vector<std::vector<Element>>& regions);
std::vector<std::vector<Element>> subdivision_from_document(const FinitePoset& p, const Json& doc);

Json to_document(const Encoding& e);
Encoding encoding_from_document(const Json& doc, const std::optional<Field>& field = std::nullopt);

Json to_document(const MultiFiltration& f);
MultiFiltration filtration_from_document(const Json& doc);

Json to_document(const MonomialMatrix& mm);
MonomialMatrix monomial_matrix_from_document(const Json& doc, const std::optional<Field>& field = std::nullopt);

Json to_document(const IndicatorComplex& c);
IndicatorComplex complex_from_document(const Json& doc, const std::optional<Field>& field = std::nullopt);

Json to_document(const BoxModule& m);
BoxModule box_module_from_document(const Json& doc, const std::optional<Field>& field = std::nullopt);

Json to_document(const FlangePresentation& fp);
/// Labels and entries only; the grid-level factorization is not stored.
FlangePresentation flange_from_document(const Json& doc, const std::optional<Field>& field = std::nullopt);

Json to_document(const FaceComplex& c);
FaceComplex face_complex_from_document(const Json& doc, const std::optional<Field>& field = std::nullopt);

/// Two indicator labels over one poset, for Hom queries.
struct IndicatorPair {
  PosetPtr poset;
  IndicatorLabel source;
  IndicatorLabel target;
};
Json to_document(const IndicatorPair& pair);
IndicatorPair indicator_pair_from_document(const Json& doc);

Json hom_document(const FinitePoset& p, const HomSpace& h);
Json rank_document(const PosetModule& m);
Json uptight_document(const UptightPoset& u);
Json presentation_document(const Presentations& pr);

// Certificates.
Json certificate(const FinitePoset& p, const DiamondCertificate& d);
Json certificate(const FinitePoset& p, const SubdivisionObstruction& o);
Json certificate(const std::vector<EntryViolation>& v);
Json certificate(const std::vector<FiltrationViolation>& v);
Json certificate(const CycleError& e, const std::vector<std::string>& labels);
Json certificate(const std::vector<GridEdge>& edges);
Json failure_certificate(const std::string& check, const std::string& message);

}  // namespace posetmod::io
