#ifndef TWOCAT_SERIALIZE_HPP
#define TWOCAT_SERIALIZE_HPP

#include <filesystem>
#include <map>
#include <variant>

#include "twocat/distributive.hpp"
#include "twocat/finspan.hpp"
#include "twocat/fixtures.hpp"
#include "twocat/kan.hpp"

#include <nlohmann/json_fwd.hpp>

// One JSON object per document.  Nested references are either inline objects
// or name strings resolved against the bundle; the canonical form is fully
// inline with sorted keys.

namespace twocat {

using Json = nlohmann::json;

class SchemaError : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

struct Document {
  std::string kind;
  std::string name;  // optional
  std::variant<CatPtr, FinFunctor, NatTrans, Monad, MonadMap, ModuleStr, Bimodule,
               BimoduleMapNAry, LaxMorphism, ColaxMorphism, SquareCell, DistributiveLaw, Span,
               SpanMonad, Retrofunctor, RightExtension>
      payload;
};

// Name -> raw JSON, for resolving references inside a bundle.
class DocumentStore {
public:
  void add(const std::string& name, const Json& doc);
  void add_directory(const std::filesystem::path& dir);
  // The bundled fixtures, always available under their canonical names.
  void add_fixtures();
  const Json* find(const std::string& name) const;

private:
  std::map<std::string, std::shared_ptr<Json>> docs_;
};

// Emission (canonical form).
Json to_json(const FinCategory& c);
Json to_json(const FinFunctor& f);
Json to_json(const NatTrans& n);
Json to_json(const Monad& m);
Json to_json(const MonadMap& m);
Json to_json(const ModuleStr& m);
Json to_json(const Bimodule& b);
Json to_json(const BimoduleMapNAry& m);
Json to_json(const LaxMorphism& l);
Json to_json(const ColaxMorphism& l);
Json to_json(const SquareCell& q);
Json to_json(const DistributiveLaw& d);
Json to_json(const Span& s);
Json to_json(const SpanMonad& m);
Json to_json(const Retrofunctor& r);
Json to_json(const RightExtension& e);
Json to_json(const Document& d);

// Parsing, with reference resolution through the store.
Document parse_document(const Json& j, const DocumentStore& store);

Document load_document(const std::filesystem::path& path, const DocumentStore& store);
void save_document(const std::filesystem::path& path, const Document& d);

// dump with sorted keys, two-space indent and a trailing newline.
std::string canonical_text(const Json& j);

// Canonical serialization of a loaded document.
std::string canonicalize(const Json& j, const DocumentStore& store);

// Law checking dispatched on the document kind.
LawReport check_document(const Document& d);

// One node per object, one edge per non-identity morphism, labeled by id.
std::string export_dot(const FinCategory& c);

// The bundled fixture documents under their canonical names, plus a corpus
// of one lawful and one broken document per kind under corpus/.
std::vector<std::pair<std::string, Json>> fixture_documents();
std::vector<std::pair<std::string, Json>> corpus_documents();

// The command surface: subcommand -> operation rows, and the inventory of
// public operations every subcommand table must cover.
std::vector<std::pair<std::string, std::string>> command_table();
std::vector<std::string> operation_inventory();

} // namespace twocat

#endif
