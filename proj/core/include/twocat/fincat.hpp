#ifndef TWOCAT_FINCAT_HPP
#define TWOCAT_FINCAT_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Finite categories, functors and natural transformations: the concrete
// strict 2-category everything else computes in.  Composition is written
// in diagrammatic order throughout: compose(f, g) means "f then g".

namespace twocat {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when 0/1/2-cell boundaries do not match.
class BoundaryError : public Error {
public:
  using Error::Error;
};

// Raised when an enumeration would exceed its candidate budget.
class CapExceeded : public Error {
public:
  using Error::Error;
};

// Raised when an operation is handed data that fails its preconditions.
class InvalidInput : public Error {
public:
  using Error::Error;
};

// Candidate budget for exhaustive searches.  Shared by every enumeration
// entry point; blowing the budget raises CapExceeded instead of hanging.
struct EnumCap {
  std::uint64_t budget = 1'000'000;
};

struct MorRec {
  std::string id;
  int src = -1;
  int dst = -1;
};

class FinCategory {
public:
  std::vector<std::string> objects;
  std::vector<MorRec> morphisms;
  std::vector<int> identity;                 // object index -> morphism index
  std::vector<std::vector<int>> compose_tab; // [f][g] -> index of f;g, -1 if undefined

  int object_index(std::string_view id) const;
  int morphism_index(std::string_view id) const;
  int src(int m) const { return morphisms.at(static_cast<std::size_t>(m)).src; }
  int dst(int m) const { return morphisms.at(static_cast<std::size_t>(m)).dst; }
  int id_mor(int obj) const { return identity.at(static_cast<std::size_t>(obj)); }

  // Diagrammatic composite "f then g"; throws BoundaryError if dst(f) != src(g).
  int compose(int f, int g) const;

  // All morphisms a -> b, in table order.
  std::vector<int> hom(int a, int b) const;

  bool operator==(const FinCategory& other) const;

  const std::string& obj_name(int o) const { return objects.at(static_cast<std::size_t>(o)); }
  const std::string& mor_name(int m) const { return morphisms.at(static_cast<std::size_t>(m)).id; }
};

using CatPtr = std::shared_ptr<const FinCategory>;

// Structural equality through the shared pointers (pointer fast path).
bool same_category(const CatPtr& a, const CatPtr& b);

// Violations are accumulated, never thrown: counterexamples are the
// workbench's main diagnostic.
struct Violation {
  std::string law;
  std::string at;   // offending object / table entry
  std::string lhs;  // evaluated component on one side
  std::string rhs;  // and on the other
};

struct LawReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string law, std::string at, std::string lhs = "", std::string rhs = "");
  std::string summary() const;
};

LawReport validate_category(const FinCategory& c);

class FinFunctor {
public:
  CatPtr source;
  CatPtr target;
  std::vector<int> on_objects;   // source object index -> target object index
  std::vector<int> on_morphisms; // source morphism index -> target morphism index

  int obj(int o) const { return on_objects.at(static_cast<std::size_t>(o)); }
  int mor(int m) const { return on_morphisms.at(static_cast<std::size_t>(m)); }

  bool operator==(const FinFunctor& other) const;
};

LawReport validate_functor(const FinFunctor& f);

FinFunctor identity_functor(const CatPtr& c);
bool is_identity_functor(const FinFunctor& f);

// Diagrammatic composite: first f, then g.
FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g);

class NatTrans {
public:
  FinFunctor source;
  FinFunctor target;             // same source/target categories as `source`
  std::vector<int> components;   // source-category object index -> morphism in target category

  int at(int o) const { return components.at(static_cast<std::size_t>(o)); }

  bool operator==(const NatTrans& other) const;
};

LawReport validate_nat_trans(const NatTrans& n);

// Cones over finite diagrams; plumbing for pointwise right extensions.
struct Cone {
  int apex = -1;
  std::vector<int> legs;  // diagram object index -> morphism in the diagram's target
};

// All cones over the diagram, ordered by apex then lexicographic legs.
std::vector<Cone> enumerate_cones(const FinFunctor& diagram, const EnumCap& cap = {});

// Whether every cone factors through `candidate` by exactly one morphism.
bool cone_is_limiting(const FinFunctor& diagram, const Cone& candidate, const EnumCap& cap = {});

// Limiting cone found by exhaustive cone search, or nullopt.
std::optional<Cone> limit(const FinFunctor& diagram, const EnumCap& cap = {});

// Complete, duplicate-free, deterministic enumerations.
std::vector<FinFunctor> enumerate_functors(const CatPtr& a, const CatPtr& b, const EnumCap& cap = {});
std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g, const EnumCap& cap = {});

// Invertible pair (F, G) with F;G and G;F identities, or nullopt.
std::optional<std::pair<FinFunctor, FinFunctor>>
find_isomorphism(const CatPtr& c, const CatPtr& d, const EnumCap& cap = {});

} // namespace twocat

#endif
