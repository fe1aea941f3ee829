#include "twocat/serialize.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace twocat {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SchemaError("schema error at " + path + ": " + what);
}

const Json& need(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(path, "missing field '" + key + "'");
  return j.at(key);
}

std::string need_string(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

// Resolves a nested value that may be a name string.
const Json& resolve(const Json& j, const DocumentStore& store, const std::string& path,
                    std::shared_ptr<Json>& keepalive) {
  if (j.is_string()) {
    const Json* found = store.find(j.get<std::string>());
    if (!found) fail(path, "unresolved reference '" + j.get<std::string>() + "'");
    return *found;
  }
  (void)keepalive;
  return j;
}

int obj_of(const FinCategory& c, const std::string& name, const std::string& path) {
  int o = c.object_index(name);
  if (o < 0) fail(path, "unknown object '" + name + "'");
  return o;
}

int mor_of(const FinCategory& c, const std::string& name, const std::string& path) {
  int m = c.morphism_index(name);
  if (m < 0) fail(path, "unknown morphism '" + name + "'");
  return m;
}

} // namespace

void DocumentStore::add(const std::string& name, const Json& doc) {
  docs_[name] = std::make_shared<Json>(doc);
}

void DocumentStore::add_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) return;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::ifstream in(p);
    Json j;
    try {
      in >> j;
    } catch (const std::exception&) {
      continue;  // not a document; the bundle scan tolerates strays
    }
    std::string name = j.is_object() && j.contains("name") && j.at("name").is_string()
                           ? j.at("name").get<std::string>()
                           : p.stem().string();
    add(name, j);
  }
}

void DocumentStore::add_fixtures() {
  for (auto& [name, j] : fixture_documents()) add(name, j);
}

const Json* DocumentStore::find(const std::string& name) const {
  auto it = docs_.find(name);
  return it == docs_.end() ? nullptr : it->second.get();
}

// ----- emission -----

Json to_json(const FinCategory& c) {
  Json j;
  j["objects"] = c.objects;
  Json mors = Json::array();
  for (const auto& m : c.morphisms)
    mors.push_back({{"id", m.id}, {"src", c.objects[static_cast<std::size_t>(m.src)]},
                    {"dst", c.objects[static_cast<std::size_t>(m.dst)]}});
  j["morphisms"] = mors;
  Json idn = Json::object();
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    idn[c.objects[o]] = c.mor_name(c.identity[o]);
  j["identity"] = idn;
  Json comp = Json::array();
  for (std::size_t f = 0; f < c.morphisms.size(); ++f)
    for (std::size_t g = 0; g < c.morphisms.size(); ++g)
      if (c.compose_tab[f][g] >= 0)
        comp.push_back(Json::array({c.mor_name(static_cast<int>(f)),
                                    c.mor_name(static_cast<int>(g)),
                                    c.mor_name(c.compose_tab[f][g])}));
  j["compose"] = comp;
  return j;
}

namespace {

Json functor_body(const FinFunctor& f) {
  Json j;
  Json objs = Json::object();
  for (std::size_t o = 0; o < f.on_objects.size(); ++o)
    objs[f.source->objects[o]] = f.target->objects[static_cast<std::size_t>(f.on_objects[o])];
  j["on_objects"] = objs;
  Json mors = Json::object();
  for (std::size_t m = 0; m < f.on_morphisms.size(); ++m)
    mors[f.source->morphisms[m].id] = f.target->mor_name(f.on_morphisms[m]);
  j["on_morphisms"] = mors;
  return j;
}

Json components_body(const NatTrans& n) {
  Json comps = Json::object();
  for (std::size_t o = 0; o < n.components.size(); ++o)
    comps[n.source.source->objects[o]] = n.source.target->mor_name(n.components[o]);
  return comps;
}

Json monad_body(const Monad& m) {
  Json j;
  j["base"] = to_json(*m.base);
  j["endo"] = functor_body(m.endo);
  j["unit"] = Json{{"components", components_body(m.unit)}};
  j["mult"] = Json{{"components", components_body(m.mult)}};
  return j;
}

Json lax_body(const FinFunctor& carrier, const NatTrans& structure, const Monad& src,
              const Monad& dst) {
  Json j;
  j["source_monad"] = monad_body(src);
  j["target_monad"] = monad_body(dst);
  j["carrier"] = to_json(carrier);
  j["structure"] = Json{{"components", components_body(structure)}};
  return j;
}

} // namespace

Json to_json(const FinFunctor& f) {
  Json j = functor_body(f);
  j["source"] = to_json(*f.source);
  j["target"] = to_json(*f.target);
  return j;
}

Json to_json(const NatTrans& n) {
  Json j;
  j["source"] = to_json(n.source);
  j["target"] = to_json(n.target);
  j["components"] = components_body(n);
  return j;
}

Json to_json(const Monad& m) { return monad_body(m); }

Json to_json(const MonadMap& m) {
  Json j;
  j["source"] = monad_body(m.source);
  j["target"] = monad_body(m.target);
  j["cell"] = Json{{"components", components_body(m.cell)}};
  return j;
}

Json to_json(const ModuleStr& m) {
  Json j;
  j["side"] = m.side == Side::right ? "right" : "left";
  j["monad"] = monad_body(m.monad);
  j["carrier"] = to_json(m.carrier);
  j["action"] = Json{{"components", components_body(m.action)}};
  return j;
}

Json to_json(const Bimodule& b) {
  Json j;
  j["left_monad"] = monad_body(b.left_monad);
  j["right_monad"] = monad_body(b.right_monad);
  j["carrier"] = to_json(b.carrier);
  j["left_action"] = Json{{"components", components_body(b.left_action)}};
  j["right_action"] = Json{{"components", components_body(b.right_action)}};
  return j;
}

Json to_json(const BimoduleMapNAry& m) {
  Json j;
  Json inputs = Json::array();
  for (const auto& b : m.inputs) inputs.push_back(to_json(b));
  j["inputs"] = inputs;
  if (m.anchor) j["anchor"] = monad_body(*m.anchor);
  j["output"] = to_json(m.output);
  j["cell"] = Json{{"components", components_body(m.cell)}};
  if (m.left_boundary) j["left_boundary"] = to_json(*m.left_boundary);
  if (m.right_boundary) j["right_boundary"] = to_json(*m.right_boundary);
  return j;
}

Json to_json(const LaxMorphism& l) {
  return lax_body(l.carrier, l.structure, l.source_monad, l.target_monad);
}

Json to_json(const ColaxMorphism& l) {
  return lax_body(l.carrier, l.structure, l.source_monad, l.target_monad);
}

Json to_json(const SquareCell& q) {
  Json j;
  j["cell_kind"] = q.kind == CellKind::two_cell ? "two_cell" : "specialization";
  j["top"] = to_json(q.top);
  j["right"] = to_json(q.right);
  j["left"] = to_json(q.left);
  j["bottom"] = to_json(q.bottom);
  j["cell"] = Json{{"components", components_body(q.cell)}};
  return j;
}

Json to_json(const DistributiveLaw& d) {
  Json j;
  j["t1"] = monad_body(d.t1);
  j["t2"] = monad_body(d.t2);
  j["cell"] = Json{{"components", components_body(d.cell)}};
  return j;
}

Json to_json(const Span& s) {
  Json j;
  j["left_foot"] = s.left_foot;
  j["right_foot"] = s.right_foot;
  j["apex"] = s.apex;
  Json ll = Json::object(), rl = Json::object();
  for (std::size_t i = 0; i < s.apex.size(); ++i) {
    ll[s.apex[i]] = s.left_foot[static_cast<std::size_t>(s.left_leg[i])];
    rl[s.apex[i]] = s.right_foot[static_cast<std::size_t>(s.right_leg[i])];
  }
  j["left_leg"] = ll;
  j["right_leg"] = rl;
  return j;
}

Json to_json(const SpanMonad& m) {
  Json j;
  j["foot"] = m.foot;
  j["span"] = to_json(m.span);
  Json unit = Json::object();
  for (std::size_t s = 0; s < m.foot.size(); ++s)
    unit[m.foot[s]] = m.span.apex[static_cast<std::size_t>(m.unit[s])];
  j["unit"] = unit;
  Json mult = Json::array();
  std::size_t i = 0;
  for (std::size_t x = 0; x < m.span.apex.size(); ++x)
    for (std::size_t y = 0; y < m.span.apex.size(); ++y) {
      if (m.span.right_leg[x] != m.span.left_leg[y]) continue;
      mult.push_back(Json::array({m.span.apex[x], m.span.apex[y],
                                  m.span.apex[static_cast<std::size_t>(m.mult[i])]}));
      ++i;
    }
  j["mult"] = mult;
  return j;
}

Json to_json(const Retrofunctor& r) {
  Json j;
  j["source"] = to_json(*r.source);
  j["target"] = to_json(*r.target);
  Json objs = Json::object();
  for (std::size_t c = 0; c < r.on_objects.size(); ++c)
    objs[r.source->objects[c]] = r.target->objects[static_cast<std::size_t>(r.on_objects[c])];
  j["on_objects"] = objs;
  Json lifts = Json::array();
  for (std::size_t c = 0; c < r.lift.size(); ++c)
    for (std::size_t g = 0; g < r.lift[c].size(); ++g)
      if (r.lift[c][g] >= 0)
        lifts.push_back(Json::array({r.source->objects[c], r.target->morphisms[g].id,
                                     r.source->mor_name(r.lift[c][g])}));
  j["lift"] = lifts;
  return j;
}

Json to_json(const RightExtension& e) {
  Json j;
  j["along"] = to_json(e.along);
  j["of"] = to_json(e.of);
  j["ext"] = to_json(e.ext);
  j["universal"] = Json{{"components", components_body(e.universal)}};
  j["certified"] = e.certified;
  if (e.pushed) j["pushed"] = monad_body(*e.pushed);
  return j;
}

Json to_json(const Document& d) {
  Json j = std::visit(
      [](const auto& payload) -> Json {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, CatPtr>)
          return to_json(*payload);
        else
          return to_json(payload);
      },
      d.payload);
  j["kind"] = d.kind;
  if (!d.name.empty()) j["name"] = d.name;
  return j;
}

// ----- parsing -----

namespace {

CatPtr parse_category(const Json& raw, const DocumentStore& store, const std::string& path) {
  std::shared_ptr<Json> keep;
  const Json& j = resolve(raw, store, path, keep);
  auto c = std::make_shared<FinCategory>();
  const Json& objs = need(j, "objects", path);
  if (!objs.is_array()) fail(path + ".objects", "expected an array");
  for (const auto& o : objs) c->objects.push_back(o.get<std::string>());

  const Json& mors = need(j, "morphisms", path);
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const Json& m = mors.at(i);
    std::string mp = path + ".morphisms[" + std::to_string(i) + "]";
    c->morphisms.push_back({need_string(m, "id", mp),
                            obj_of(*c, need_string(m, "src", mp), mp),
                            obj_of(*c, need_string(m, "dst", mp), mp)});
  }
  c->identity.assign(c->objects.size(), -1);
  const Json& idn = need(j, "identity", path);
  for (auto it = idn.begin(); it != idn.end(); ++it)
    c->identity[static_cast<std::size_t>(obj_of(*c, it.key(), path + ".identity"))] =
        mor_of(*c, it.value().get<std::string>(), path + ".identity");
  for (std::size_t o = 0; o < c->objects.size(); ++o)
    if (c->identity[o] < 0) fail(path + ".identity", "missing identity for '" + c->objects[o] + "'");

  c->compose_tab.assign(c->morphisms.size(), std::vector<int>(c->morphisms.size(), -1));
  const Json& comp = need(j, "compose", path);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const Json& t = comp.at(i);
    std::string tp = path + ".compose[" + std::to_string(i) + "]";
    if (!t.is_array() || t.size() != 3) fail(tp, "expected a triple [f, g, f_then_g]");
    int f = mor_of(*c, t.at(0).get<std::string>(), tp);
    int g = mor_of(*c, t.at(1).get<std::string>(), tp);
    int fg = mor_of(*c, t.at(2).get<std::string>(), tp);
    if (c->dst(f) != c->src(g)) fail(tp, "pair is not composable");
    c->compose_tab[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] = fg;
  }
  return c;
}

FinFunctor parse_functor_body(const Json& j, const CatPtr& source, const CatPtr& target,
                              const std::string& path) {
  FinFunctor f;
  f.source = source;
  f.target = target;
  f.on_objects.assign(source->objects.size(), -1);
  const Json& objs = need(j, "on_objects", path);
  for (auto it = objs.begin(); it != objs.end(); ++it)
    f.on_objects[static_cast<std::size_t>(obj_of(*source, it.key(), path + ".on_objects"))] =
        obj_of(*target, it.value().get<std::string>(), path + ".on_objects");
  for (std::size_t o = 0; o < f.on_objects.size(); ++o)
    if (f.on_objects[o] < 0)
      fail(path + ".on_objects", "missing image for '" + source->objects[o] + "'");
  f.on_morphisms.assign(source->morphisms.size(), -1);
  const Json& mors = need(j, "on_morphisms", path);
  for (auto it = mors.begin(); it != mors.end(); ++it)
    f.on_morphisms[static_cast<std::size_t>(mor_of(*source, it.key(), path + ".on_morphisms"))] =
        mor_of(*target, it.value().get<std::string>(), path + ".on_morphisms");
  for (std::size_t m = 0; m < f.on_morphisms.size(); ++m)
    if (f.on_morphisms[m] < 0)
      fail(path + ".on_morphisms", "missing image for '" + source->morphisms[m].id + "'");
  return f;
}

FinFunctor parse_functor(const Json& raw, const DocumentStore& store, const std::string& path) {
  std::shared_ptr<Json> keep;
  const Json& j = resolve(raw, store, path, keep);
  CatPtr source = parse_category(need(j, "source", path), store, path + ".source");
  CatPtr target = parse_category(need(j, "target", path), store, path + ".target");
  return parse_functor_body(j, source, target, path);
}

NatTrans parse_components(const Json& j, const FinFunctor& source, const FinFunctor& target,
                          const std::string& path) {
  NatTrans n;
  n.source = source;
  n.target = target;
  n.components.assign(source.source->objects.size(), -1);
  const Json& comps = need(j, "components", path);
  for (auto it = comps.begin(); it != comps.end(); ++it)
    n.components[static_cast<std::size_t>(
        obj_of(*source.source, it.key(), path + ".components"))] =
        mor_of(*source.target, it.value().get<std::string>(), path + ".components");
  for (std::size_t o = 0; o < n.components.size(); ++o)
    if (n.components[o] < 0)
      fail(path + ".components", "missing component at '" + source.source->objects[o] + "'");
  return n;
}

NatTrans parse_nattrans(const Json& raw, const DocumentStore& store, const std::string& path) {
  std::shared_ptr<Json> keep;
  const Json& j = resolve(raw, store, path, keep);
  FinFunctor source = parse_functor(need(j, "source", path), store, path + ".source");
  FinFunctor target = parse_functor(need(j, "target", path), store, path + ".target");
  return parse_components(j, source, target, path);
}

Monad parse_monad(const Json& raw, const DocumentStore& store, const std::string& path) {
  std::shared_ptr<Json> keep;
  const Json& j = resolve(raw, store, path, keep);
  Monad m;
  m.base = parse_category(need(j, "base", path), store, path + ".base");
  m.endo = parse_functor_body(need(j, "endo", path), m.base, m.base, path + ".endo");
  m.unit = parse_components(need(j, "unit", path), identity_functor(m.base), m.endo,
                            path + ".unit");
  m.mult = parse_components(need(j, "mult", path), compose_functors(m.endo, m.endo), m.endo,
                            path + ".mult");
  return m;
}

MonadMap parse_monad_map(const Json& j, const DocumentStore& store, const std::string& path) {
  MonadMap m;
  m.source = parse_monad(need(j, "source", path), store, path + ".source");
  m.target = parse_monad(need(j, "target", path), store, path + ".target");
  m.cell = parse_components(need(j, "cell", path), m.source.endo, m.target.endo, path + ".cell");
  return m;
}

ModuleStr parse_module(const Json& j, const DocumentStore& store, const std::string& path) {
  ModuleStr m;
  std::string side = need_string(j, "side", path);
  if (side != "right" && side != "left") fail(path + ".side", "expected 'right' or 'left'");
  m.side = side == "right" ? Side::right : Side::left;
  m.monad = parse_monad(need(j, "monad", path), store, path + ".monad");
  m.carrier = parse_functor(need(j, "carrier", path), store, path + ".carrier");
  FinFunctor src = m.side == Side::right ? compose_functors(m.carrier, m.monad.endo)
                                         : compose_functors(m.monad.endo, m.carrier);
  m.action = parse_components(need(j, "action", path), src, m.carrier, path + ".action");
  return m;
}

Bimodule parse_bimodule(const Json& j, const DocumentStore& store, const std::string& path) {
  Bimodule b;
  b.left_monad = parse_monad(need(j, "left_monad", path), store, path + ".left_monad");
  b.right_monad = parse_monad(need(j, "right_monad", path), store, path + ".right_monad");
  b.carrier = parse_functor(need(j, "carrier", path), store, path + ".carrier");
  b.left_action = parse_components(need(j, "left_action", path),
                                   compose_functors(b.left_monad.endo, b.carrier), b.carrier,
                                   path + ".left_action");
  b.right_action = parse_components(need(j, "right_action", path),
                                    compose_functors(b.carrier, b.right_monad.endo), b.carrier,
                                    path + ".right_action");
  return b;
}

LaxMorphism parse_lax(const Json& j, const DocumentStore& store, const std::string& path) {
  LaxMorphism l;
  l.source_monad = parse_monad(need(j, "source_monad", path), store, path + ".source_monad");
  l.target_monad = parse_monad(need(j, "target_monad", path), store, path + ".target_monad");
  l.carrier = parse_functor(need(j, "carrier", path), store, path + ".carrier");
  l.structure = parse_components(need(j, "structure", path),
                                 compose_functors(l.carrier, l.target_monad.endo),
                                 compose_functors(l.source_monad.endo, l.carrier),
                                 path + ".structure");
  return l;
}

ColaxMorphism parse_colax(const Json& j, const DocumentStore& store, const std::string& path) {
  ColaxMorphism l;
  l.source_monad = parse_monad(need(j, "source_monad", path), store, path + ".source_monad");
  l.target_monad = parse_monad(need(j, "target_monad", path), store, path + ".target_monad");
  l.carrier = parse_functor(need(j, "carrier", path), store, path + ".carrier");
  l.structure = parse_components(need(j, "structure", path),
                                 compose_functors(l.source_monad.endo, l.carrier),
                                 compose_functors(l.carrier, l.target_monad.endo),
                                 path + ".structure");
  return l;
}

BimoduleMapNAry parse_bimodule_map(const Json& j, const DocumentStore& store,
                                   const std::string& path) {
  BimoduleMapNAry m;
  const Json& inputs = need(j, "inputs", path);
  for (std::size_t i = 0; i < inputs.size(); ++i)
    m.inputs.push_back(
        parse_bimodule(inputs.at(i), store, path + ".inputs[" + std::to_string(i) + "]"));
  if (j.contains("anchor")) m.anchor = parse_monad(j.at("anchor"), store, path + ".anchor");
  if (m.inputs.empty() && !m.anchor)
    fail(path, "a bimodule map with an empty path needs an 'anchor' monad");
  m.output = parse_bimodule(need(j, "output", path), store, path + ".output");
  if (j.contains("left_boundary"))
    m.left_boundary = parse_colax(j.at("left_boundary"), store, path + ".left_boundary");
  if (j.contains("right_boundary"))
    m.right_boundary = parse_colax(j.at("right_boundary"), store, path + ".right_boundary");
  FinFunctor src = bimodule_path_carrier(m);
  if (m.right_boundary) src = compose_functors(src, m.right_boundary->carrier);
  FinFunctor dst = m.output.carrier;
  if (m.left_boundary) dst = compose_functors(m.left_boundary->carrier, dst);
  m.cell = parse_components(need(j, "cell", path), src, dst, path + ".cell");
  return m;
}

SquareCell parse_square(const Json& j, const DocumentStore& store, const std::string& path,
                        CellKind default_kind) {
  SquareCell q;
  q.kind = default_kind;
  if (j.contains("cell_kind")) {
    std::string k = need_string(j, "cell_kind", path);
    if (k != "two_cell" && k != "specialization")
      fail(path + ".cell_kind", "expected 'two_cell' or 'specialization'");
    q.kind = k == "two_cell" ? CellKind::two_cell : CellKind::specialization;
  }
  q.top = parse_lax(need(j, "top", path), store, path + ".top");
  q.right = parse_colax(need(j, "right", path), store, path + ".right");
  q.left = parse_colax(need(j, "left", path), store, path + ".left");
  q.bottom = parse_lax(need(j, "bottom", path), store, path + ".bottom");
  FinFunctor src = compose_functors(q.top.carrier, q.right.carrier);
  FinFunctor dst =
      q.kind == CellKind::two_cell
          ? compose_functors(q.left.carrier, q.bottom.carrier)
          : compose_functors(q.left.carrier,
                             compose_functors(q.left.target_monad.endo, q.bottom.carrier));
  q.cell = parse_components(need(j, "cell", path), src, dst, path + ".cell");
  return q;
}

DistributiveLaw parse_distributive(const Json& j, const DocumentStore& store,
                                   const std::string& path) {
  DistributiveLaw d;
  d.t1 = parse_monad(need(j, "t1", path), store, path + ".t1");
  d.t2 = parse_monad(need(j, "t2", path), store, path + ".t2");
  d.cell = parse_components(need(j, "cell", path), compose_functors(d.t2.endo, d.t1.endo),
                            compose_functors(d.t1.endo, d.t2.endo), path + ".cell");
  return d;
}

int elem_of(const std::vector<std::string>& xs, const std::string& name,
            const std::string& path) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == name) return static_cast<int>(i);
  fail(path, "unknown element '" + name + "'");
}

Span parse_span(const Json& j, const std::string& path) {
  Span s;
  for (const auto& o : need(j, "left_foot", path)) s.left_foot.push_back(o.get<std::string>());
  for (const auto& o : need(j, "right_foot", path)) s.right_foot.push_back(o.get<std::string>());
  for (const auto& o : need(j, "apex", path)) s.apex.push_back(o.get<std::string>());
  s.left_leg.assign(s.apex.size(), -1);
  s.right_leg.assign(s.apex.size(), -1);
  const Json& ll = need(j, "left_leg", path);
  for (auto it = ll.begin(); it != ll.end(); ++it)
    s.left_leg[static_cast<std::size_t>(elem_of(s.apex, it.key(), path + ".left_leg"))] =
        elem_of(s.left_foot, it.value().get<std::string>(), path + ".left_leg");
  const Json& rl = need(j, "right_leg", path);
  for (auto it = rl.begin(); it != rl.end(); ++it)
    s.right_leg[static_cast<std::size_t>(elem_of(s.apex, it.key(), path + ".right_leg"))] =
        elem_of(s.right_foot, it.value().get<std::string>(), path + ".right_leg");
  for (std::size_t i = 0; i < s.apex.size(); ++i)
    if (s.left_leg[i] < 0 || s.right_leg[i] < 0)
      fail(path, "missing leg for apex element '" + s.apex[i] + "'");
  return s;
}

SpanMonad parse_span_monad(const Json& j, const std::string& path) {
  SpanMonad m;
  for (const auto& o : need(j, "foot", path)) m.foot.push_back(o.get<std::string>());
  m.span = parse_span(need(j, "span", path), path + ".span");
  m.unit.assign(m.foot.size(), -1);
  const Json& unit = need(j, "unit", path);
  for (auto it = unit.begin(); it != unit.end(); ++it)
    m.unit[static_cast<std::size_t>(elem_of(m.foot, it.key(), path + ".unit"))] =
        elem_of(m.span.apex, it.value().get<std::string>(), path + ".unit");
  for (std::size_t s = 0; s < m.foot.size(); ++s)
    if (m.unit[s] < 0) fail(path + ".unit", "missing unit for '" + m.foot[s] + "'");

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t x = 0; x < m.span.apex.size(); ++x)
    for (std::size_t y = 0; y < m.span.apex.size(); ++y)
      if (m.span.right_leg[x] == m.span.left_leg[y])
        pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
  m.mult.assign(pairs.size(), -1);
  const Json& mult = need(j, "mult", path);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const Json& t = mult.at(i);
    std::string tp = path + ".mult[" + std::to_string(i) + "]";
    if (!t.is_array() || t.size() != 3) fail(tp, "expected a triple [f, g, mult]");
    int x = elem_of(m.span.apex, t.at(0).get<std::string>(), tp);
    int y = elem_of(m.span.apex, t.at(1).get<std::string>(), tp);
    int v = elem_of(m.span.apex, t.at(2).get<std::string>(), tp);
    bool found = false;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k] == std::make_pair(x, y)) {
        m.mult[k] = v;
        found = true;
      }
    if (!found) fail(tp, "pair is not composable");
  }
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (m.mult[k] < 0)
      fail(path + ".mult", "missing entry for composable pair (" +
                               m.span.apex[static_cast<std::size_t>(pairs[k].first)] + "," +
                               m.span.apex[static_cast<std::size_t>(pairs[k].second)] + ")");
  return m;
}

Retrofunctor parse_retrofunctor(const Json& j, const DocumentStore& store,
                                const std::string& path) {
  Retrofunctor r;
  r.source = parse_category(need(j, "source", path), store, path + ".source");
  r.target = parse_category(need(j, "target", path), store, path + ".target");
  r.on_objects.assign(r.source->objects.size(), -1);
  const Json& objs = need(j, "on_objects", path);
  for (auto it = objs.begin(); it != objs.end(); ++it)
    r.on_objects[static_cast<std::size_t>(obj_of(*r.source, it.key(), path + ".on_objects"))] =
        obj_of(*r.target, it.value().get<std::string>(), path + ".on_objects");
  for (std::size_t c = 0; c < r.on_objects.size(); ++c)
    if (r.on_objects[c] < 0)
      fail(path + ".on_objects", "missing image for '" + r.source->objects[c] + "'");
  r.lift.assign(r.source->objects.size(),
                std::vector<int>(r.target->morphisms.size(), -1));
  const Json& lifts = need(j, "lift", path);
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    const Json& t = lifts.at(i);
    std::string tp = path + ".lift[" + std::to_string(i) + "]";
    if (!t.is_array() || t.size() != 3) fail(tp, "expected a triple [object, morphism, lift]");
    int c = obj_of(*r.source, t.at(0).get<std::string>(), tp);
    int g = mor_of(*r.target, t.at(1).get<std::string>(), tp);
    int h = mor_of(*r.source, t.at(2).get<std::string>(), tp);
    r.lift[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)] = h;
  }
  return r;
}

RightExtension parse_extension(const Json& j, const DocumentStore& store,
                               const std::string& path) {
  RightExtension e;
  e.along = parse_functor(need(j, "along", path), store, path + ".along");
  e.of = parse_functor(need(j, "of", path), store, path + ".of");
  e.ext = parse_functor(need(j, "ext", path), store, path + ".ext");
  e.universal = parse_components(need(j, "universal", path), compose_functors(e.along, e.ext),
                                 e.of, path + ".universal");
  if (j.contains("certified")) e.certified = j.at("certified").get<bool>();
  if (j.contains("pushed")) e.pushed = parse_monad(j.at("pushed"), store, path + ".pushed");
  return e;
}

} // namespace

Document parse_document(const Json& j, const DocumentStore& store) {
  Document d;
  d.kind = need_string(j, "kind", "$");
  if (j.contains("name") && j.at("name").is_string()) d.name = j.at("name").get<std::string>();
  const std::string& k = d.kind;
  if (k == "category")
    d.payload = parse_category(j, store, "$");
  else if (k == "functor")
    d.payload = parse_functor(j, store, "$");
  else if (k == "nattrans")
    d.payload = parse_nattrans(j, store, "$");
  else if (k == "monad")
    d.payload = parse_monad(j, store, "$");
  else if (k == "monad-map")
    d.payload = parse_monad_map(j, store, "$");
  else if (k == "module")
    d.payload = parse_module(j, store, "$");
  else if (k == "bimodule")
    d.payload = parse_bimodule(j, store, "$");
  else if (k == "bimodule-map")
    d.payload = parse_bimodule_map(j, store, "$");
  else if (k == "lax")
    d.payload = parse_lax(j, store, "$");
  else if (k == "colax")
    d.payload = parse_colax(j, store, "$");
  else if (k == "square")
    d.payload = parse_square(j, store, "$", CellKind::two_cell);
  else if (k == "specialization")
    d.payload = parse_square(j, store, "$", CellKind::specialization);
  else if (k == "distributive-law")
    d.payload = parse_distributive(j, store, "$");
  else if (k == "span")
    d.payload = parse_span(j, "$");
  else if (k == "span-monad")
    d.payload = parse_span_monad(j, "$");
  else if (k == "retrofunctor")
    d.payload = parse_retrofunctor(j, store, "$");
  else if (k == "extension")
    d.payload = parse_extension(j, store, "$");
  else
    fail("$.kind", "unknown document kind '" + k + "'");
  return d;
}

Document load_document(const std::filesystem::path& path, const DocumentStore& store) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw SchemaError("invalid JSON in " + path.string() + ": " + ex.what());
  }
  return parse_document(j, store);
}

void save_document(const std::filesystem::path& path, const Document& d) {
  std::ofstream out(path);
  out << canonical_text(to_json(d));
}

std::string canonical_text(const Json& j) { return j.dump(2) + "\n"; }

std::string canonicalize(const Json& j, const DocumentStore& store) {
  return canonical_text(to_json(parse_document(j, store)));
}

LawReport check_document(const Document& d) {
  return std::visit(
      [](const auto& payload) -> LawReport {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, CatPtr>) {
          return validate_category(*payload);
        } else if constexpr (std::is_same_v<T, FinFunctor>) {
          return validate_functor(payload);
        } else if constexpr (std::is_same_v<T, NatTrans>) {
          return validate_nat_trans(payload);
        } else if constexpr (std::is_same_v<T, Monad>) {
          return check_monad(payload);
        } else if constexpr (std::is_same_v<T, MonadMap>) {
          return check_monad_map(payload);
        } else if constexpr (std::is_same_v<T, ModuleStr>) {
          return check_module(payload);
        } else if constexpr (std::is_same_v<T, Bimodule>) {
          return check_bimodule(payload);
        } else if constexpr (std::is_same_v<T, BimoduleMapNAry>) {
          return check_bimodule_map(payload);
        } else if constexpr (std::is_same_v<T, LaxMorphism>) {
          return check_lax(payload);
        } else if constexpr (std::is_same_v<T, ColaxMorphism>) {
          return check_lax(payload);
        } else if constexpr (std::is_same_v<T, SquareCell>) {
          return check_square(payload);
        } else if constexpr (std::is_same_v<T, DistributiveLaw>) {
          return check_distributive(payload);
        } else if constexpr (std::is_same_v<T, Span>) {
          return validate_span(payload);
        } else if constexpr (std::is_same_v<T, SpanMonad>) {
          return check_span_monad(payload);
        } else if constexpr (std::is_same_v<T, Retrofunctor>) {
          return check_retrofunctor(payload);
        } else {
          static_assert(std::is_same_v<T, RightExtension>);
          return certify_extension(payload);
        }
      },
      d.payload);
}

std::string export_dot(const FinCategory& c) {
  std::ostringstream os;
  os << "digraph category {\n";
  for (const auto& o : c.objects) os << "  \"" << o << "\";\n";
  for (std::size_t m = 0; m < c.morphisms.size(); ++m) {
    bool is_id = false;
    for (std::size_t o = 0; o < c.objects.size(); ++o)
      if (c.identity[o] == static_cast<int>(m)) is_id = true;
    if (is_id) continue;
    os << "  \"" << c.obj_name(c.src(static_cast<int>(m))) << "\" -> \""
       << c.obj_name(c.dst(static_cast<int>(m))) << "\" [label=\"" << c.morphisms[m].id
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

Json doc_json(const std::string& kind, const std::string& name, Json body) {
  body["kind"] = kind;
  body["name"] = name;
  return body;
}

} // namespace

std::vector<std::pair<std::string, Json>> fixture_documents() {
  namespace fx = fixtures;
  std::vector<std::pair<std::string, Json>> out;
  for (auto& [name, cat] : fx::all_categories())
    out.emplace_back(name, doc_json("category", name, to_json(*cat)));
  for (auto& [name, monad] : fx::all_monads())
    out.emplace_back(name, doc_json("monad", name, to_json(monad)));
  out.emplace_back("fix_incl", doc_json("functor", "fix_incl", to_json(fx::fix_incl())));
  return out;
}

std::vector<std::pair<std::string, std::string>> command_table() {
  return {
      {"check", "validate_category"},
      {"check", "check_monad"},
      {"check", "check_monad_map"},
      {"check", "check_module"},
      {"check", "check_bimodule"},
      {"check", "check_bimodule_map"},
      {"check", "check_lax"},
      {"check", "check_square"},
      {"check", "check_distributive"},
      {"check", "check_span_monad"},
      {"check", "check_retrofunctor"},
      {"compose", "compose_1cells"},
      {"compose-lax", "compose_lax"},
      {"compose-squares", "compose_squares"},
      {"compose-spans", "compose_spans"},
      {"paste", "paste"},
      {"enumerate", "enumerate_cells"},
      {"limit", "limit"},
      {"iso", "find_isomorphism"},
      {"nary", "nary_mult"},
      {"convert", "bimodule_action_convert"},
      {"view", "as_lax_view"},
      {"view", "retrofunctor_lax_correspondence"},
      {"to-spec", "spec_from_2cell"},
      {"transpose", "adjoint_transpose"},
      {"interchange", "check_interchange"},
      {"construct", "construct_em"},
      {"construct", "construct_kleisli"},
      {"construct", "free_resolution"},
      {"construct", "composite_monad"},
      {"construct", "injection_monad_maps"},
      {"construct", "codensity"},
      {"construct", "pushforward"},
      {"construct", "right_extension"},
      {"construct", "from_adjunction"},
      {"compare", "comparison_functor"},
      {"compare-emkl", "comparison_cell"},
      {"lift", "lift_module"},
      {"lift", "lift_module_map"},
      {"lift", "emlift"},
      {"lift", "lift_bimodule"},
      {"lift", "extlift"},
      {"monad-structure", "monad_structure"},
      {"split-module", "module_split_merge"},
      {"merge-module", "module_split_merge"},
      {"roundtrip", "distlaw_mnd_roundtrip"},
      {"roundtrip", "category_span_roundtrip"},
      {"oracle", "right_extension_certify"},
      {"oracle", "universal_monad_map"},
      {"oracle", "preserves_right_extension"},
      {"verify", "verify_distem"},
      {"export", "export_dot"},
      {"canonicalize", "load_save"},
      {"fixtures", "load_save"},
      {"suite", "run_suite"},
  };
}

std::vector<std::string> operation_inventory() {
  return {
      // fincat
      "validate_category", "compose_1cells", "paste", "enumerate_cells", "limit",
      "find_isomorphism",
      // monads
      "check_monad", "nary_mult", "check_monad_map", "check_module", "check_bimodule",
      "bimodule_action_convert", "check_bimodule_map", "as_lax_view",
      // morphisms
      "check_lax", "check_square", "compose_lax", "compose_squares", "spec_from_2cell",
      "adjoint_transpose", "check_interchange",
      // algobj
      "construct_em", "construct_kleisli", "lift_module", "lift_module_map", "free_resolution",
      "comparison_functor", "emlift", "lift_bimodule",
      // distributive
      "check_distributive", "distlaw_mnd_roundtrip", "composite_monad", "injection_monad_maps",
      "module_split_merge", "verify_distem", "comparison_cell",
      // kan
      "right_extension", "codensity", "pushforward", "monad_structure", "universal_monad_map",
      "from_adjunction", "preserves_right_extension", "extlift",
      // finspan
      "compose_spans", "check_span_monad", "category_span_roundtrip",
      "retrofunctor_lax_correspondence",
      // cli
      "load_save", "run_suite",
  };
}

std::vector<std::pair<std::string, Json>> corpus_documents() {
  namespace fx = fixtures;
  std::vector<std::pair<std::string, Json>> out;
  auto add = [&](const std::string& name, const std::string& kind, Json body) {
    out.emplace_back(name, doc_json(kind, name, std::move(body)));
  };

  auto chain3 = fx::chain3();
  auto clos = fx::clos_c();
  auto sgn = fx::sgn();
  auto bz2 = fx::bz2();

  // category
  add("good_category", "category", to_json(*chain3));
  {
    FinCategory broken = *chain3;
    // rebind a composite to an identity with the wrong source
    int f = broken.morphism_index("0<=1");
    int g = broken.morphism_index("1<=2");
    broken.compose_tab[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] =
        broken.morphism_index("id0");
    add("bad_category", "category", to_json(broken));
  }
  // functor
  add("good_functor", "functor", to_json(fx::fix_incl()));
  {
    FinFunctor f = fx::fix_incl();
    f.on_objects = {0, 0};  // breaks boundary preservation of 1<=2
    add("bad_functor", "functor", to_json(f));
  }
  // nattrans
  add("good_nattrans", "nattrans", to_json(clos.unit));
  {
    NatTrans n = clos.unit;
    n.components[0] = chain3->morphism_index("id0");  // wrong boundary at 0
    add("bad_nattrans", "nattrans", to_json(n));
  }
  // monad
  add("good_monad", "monad", to_json(sgn));
  {
    Monad broken = sgn;
    broken.mult.components = {0};  // unit law now fails: s,1
    add("bad_monad", "monad", to_json(broken));
  }
  // monad-map
  add("good_monad_map", "monad-map", to_json(identity_monad_map(clos)));
  {
    MonadMap h{sgn, sgn, NatTrans{sgn.endo, sgn.endo, {1}}};  // cell s fails the unit equation
    add("bad_monad_map", "monad-map", to_json(h));
  }
  // module
  ModuleStr good_mod{Side::right, sgn, identity_functor(bz2),
                     NatTrans{sgn.endo, identity_functor(bz2), {1}}};
  add("good_module", "module", to_json(good_mod));
  {
    ModuleStr bad = good_mod;
    bad.action.components = {0};  // unit law fails
    add("bad_module", "module", to_json(bad));
  }
  // bimodule
  add("good_bimodule", "bimodule", to_json(monad_as_bimodule(sgn)));
  {
    Bimodule bad = monad_as_bimodule(sgn);
    bad.right_action.components = {0};
    add("bad_bimodule", "bimodule", to_json(bad));
  }
  // bimodule-map
  {
    BimoduleMapNAry m;
    m.anchor = clos;
    m.output = monad_as_bimodule(clos);
    m.cell = clos.unit;
    add("good_bimodule_map", "bimodule-map", to_json(m));
    BimoduleMapNAry bad = m;
    bad.cell.components[0] = chain3->morphism_index("id0");
    add("bad_bimodule_map", "bimodule-map", to_json(bad));
  }
  // lax / colax
  add("good_lax", "lax", to_json(identity_lax(clos)));
  {
    LaxMorphism bad = identity_lax(sgn);
    bad.structure.components = {1};  // chi = s fails the unit law
    add("bad_lax", "lax", to_json(bad));
  }
  add("good_colax", "colax", to_json(identity_colax(clos)));
  {
    ColaxMorphism bad = identity_colax(sgn);
    bad.structure.components = {1};
    add("bad_colax", "colax", to_json(bad));
  }
  // square / specialization; the broken ones use the lax cell carried by the
  // trivial endofunctor of bz2, against which no cell to the identity carrier
  // is natural
  LaxMorphism lax_e;
  {
    FinFunctor e_endo = identity_functor(bz2);
    e_endo.on_morphisms = {0, 0};
    lax_e.source_monad = sgn;
    lax_e.target_monad = sgn;
    lax_e.carrier = e_endo;
    lax_e.structure = NatTrans{e_endo, e_endo, {1}};
  }
  add("good_square", "square",
      to_json(identity_square_on_lax(identity_lax(sgn), CellKind::two_cell)));
  {
    SquareCell bad = identity_square_on_lax(identity_lax(sgn), CellKind::two_cell);
    bad.top = lax_e;
    bad.cell.source = lax_e.carrier;
    add("bad_square", "square", to_json(bad));
  }
  add("good_specialization", "specialization",
      to_json(identity_square_on_lax(identity_lax(sgn), CellKind::specialization)));
  {
    SquareCell bad = identity_square_on_lax(identity_lax(sgn), CellKind::specialization);
    bad.top = lax_e;
    bad.cell.source = lax_e.carrier;
    add("bad_specialization", "specialization", to_json(bad));
  }
  // distributive-law
  {
    DistributiveLaw good{fx::cA(), fx::cB(),
                         NatTrans{compose_functors(fx::cB().endo, fx::cA().endo),
                                  compose_functors(fx::cA().endo, fx::cB().endo),
                                  {}}};
    auto sq = fx::sq();
    for (std::size_t x = 0; x < sq->objects.size(); ++x) {
      int from = good.cell.source.obj(static_cast<int>(x));
      int to = good.cell.target.obj(static_cast<int>(x));
      good.cell.components.push_back(sq->hom(from, to).front());
    }
    add("good_distributive_law", "distributive-law", to_json(good));
    DistributiveLaw bad{sgn, sgn, NatTrans{sgn.endo, sgn.endo, {1}}};
    add("bad_distributive_law", "distributive-law", to_json(bad));
  }
  // span; spans carry no equational laws, so the broken document is a
  // schema violation (a missing leg) and fails at load time
  {
    Span good = identity_span({"x", "y"});
    add("good_span", "span", to_json(good));
    Json bad = to_json(good);
    bad["left_leg"].erase("x");
    add("bad_span", "span", std::move(bad));
  }
  // span-monad
  {
    SpanMonad good = category_to_span(*fx::arrow2());
    add("good_span_monad", "span-monad", to_json(good));
    SpanMonad bad = good;
    // rebind mult(f, id1) to id0: codomain leg mismatch
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t x = 0; x < bad.span.apex.size(); ++x)
      for (std::size_t y = 0; y < bad.span.apex.size(); ++y)
        if (bad.span.right_leg[x] == bad.span.left_leg[y])
          pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
    int f = 2, id1 = 1, id0 = 0;  // apex order: id0, id1, f
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k] == std::make_pair(f, id1)) bad.mult[k] = id0;
    add("bad_span_monad", "span-monad", to_json(bad));
  }
  // retrofunctor
  {
    Retrofunctor good;
    good.source = chain3;
    good.target = chain3;
    good.on_objects = {0, 1, 2};
    good.lift.assign(3, std::vector<int>(chain3->morphisms.size(), -1));
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t g = 0; g < chain3->morphisms.size(); ++g)
        if (chain3->src(static_cast<int>(g)) == static_cast<int>(c))
          good.lift[c][g] = static_cast<int>(g);
    add("good_retrofunctor", "retrofunctor", to_json(good));
    Retrofunctor bad = good;
    // lift of 0<=2 at 0 rebound to 0<=1: codomain class violated
    bad.lift[0][static_cast<std::size_t>(chain3->morphism_index("0<=2"))] =
        chain3->morphism_index("0<=1");
    add("bad_retrofunctor", "retrofunctor", to_json(bad));
  }
  // extension
  {
    auto e = codensity(fx::fix_incl(), false);
    add("good_extension", "extension", to_json(*e));
    RightExtension bad = *e;
    bad.ext = identity_functor(chain3);  // not a right extension of fix_incl
    bad.universal.source = compose_functors(bad.along, bad.ext);
    for (std::size_t x = 0; x < bad.universal.components.size(); ++x) {
      int from = bad.universal.source.obj(static_cast<int>(x));
      int to = bad.universal.target.obj(static_cast<int>(x));
      bad.universal.components[x] = chain3->hom(from, to).front();
    }
    add("bad_extension", "extension", to_json(bad));
  }
  return out;
}

} // namespace twocat
