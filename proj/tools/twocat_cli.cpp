// Command-line surface of the workbench: law checking, constructions,
// liftings, universal-property oracles, DOT export, fixture generation and
// the theorem suite.
//
// Exit codes: 0 pass, 1 law violation, 2 input error, 3 construction absent,
// 4 size cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twocat/suite.hpp"

namespace fs = std::filesystem;
using namespace twocat;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitAbsent = 3;
constexpr int kExitCap = 4;

struct Options {
  std::uint64_t cap = 1'000'000;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string fixtures_dir = "fixtures";
};

DocumentStore make_store(const Options& opt, const fs::path& primary) {
  DocumentStore store;
  store.add_fixtures();
  store.add_directory(opt.fixtures_dir);
  if (!primary.empty() && primary.has_parent_path())
    store.add_directory(primary.parent_path());
  return store;
}

void emit(const Options& opt, const Json& report) {
  if (opt.format == "json")
    std::cout << canonical_text(report);
  else if (report.is_string())
    std::cout << report.get<std::string>() << "\n";
  else
    std::cout << report.dump(2) << "\n";
}

Json report_of(const LawReport& r) {
  Json out;
  out["ok"] = r.ok();
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"law", x.law}, {"at", x.at}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  out["violations"] = v;
  return out;
}

template <typename T>
Json doc_of(const std::string& kind, const T& payload) {
  Json j = to_json(payload);
  j["kind"] = kind;
  return j;
}

const char* kind_of(const Document& d) { return d.kind.c_str(); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"twocat: a workbench for monads, modules and their morphisms in a "
               "finite 2-category"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--cap", opt.cap, "candidate budget for exhaustive enumerations")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized instance selection")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--fixtures", opt.fixtures_dir, "directory with fixture documents")
      ->capture_default_str();

  std::string file, file2, file3, file4;
  std::string kind_arg, direction = "lax", lift_what, view_what, enum_kind, prop = "cformaltfae";
  int nary_n = 0;
  std::string out_dir = "fixtures";

  auto* c_check = app.add_subcommand("check", "run the law checker for a document");
  c_check->add_option("kind", kind_arg, "document kind")->required();
  c_check->add_option("file", file, "document file")->required();

  auto* c_compose = app.add_subcommand("compose", "compose two functor documents");
  c_compose->add_option("first", file)->required();
  c_compose->add_option("second", file2)->required();

  auto* c_compose_lax = app.add_subcommand("compose-lax", "compose lax (or colax) 1-cells");
  c_compose_lax->add_option("first", file)->required();
  c_compose_lax->add_option("second", file2)->required();

  auto* c_compose_sq = app.add_subcommand("compose-squares", "compose two squares");
  c_compose_sq->add_option("first", file)->required();
  c_compose_sq->add_option("second", file2)->required();
  c_compose_sq->add_option("--direction", direction, "lax|colax");

  auto* c_compose_spans = app.add_subcommand("compose-spans", "compose two span documents");
  c_compose_spans->add_option("first", file)->required();
  c_compose_spans->add_option("second", file2)->required();

  auto* c_paste = app.add_subcommand("paste", "evaluate a pasting expression document");
  c_paste->add_option("file", file)->required();

  auto* c_enum = app.add_subcommand("enumerate", "enumerate functors or nattrans");
  c_enum->add_option("what", enum_kind, "functors|nattrans")->required();
  c_enum->add_option("first", file)->required();
  c_enum->add_option("second", file2)->required();

  auto* c_limit = app.add_subcommand("limit", "limit of a diagram (a functor document)");
  c_limit->add_option("file", file)->required();

  auto* c_iso = app.add_subcommand("iso", "search for an isomorphism of categories");
  c_iso->add_option("first", file)->required();
  c_iso->add_option("second", file2)->required();

  auto* c_nary = app.add_subcommand("nary", "n-ary multiplication of a monad");
  c_nary->add_option("file", file)->required();
  c_nary->add_option("n", nary_n)->required();

  auto* c_convert = app.add_subcommand("convert", "bimodule actions <-> joint action");
  c_convert->add_option("file", file)->required();

  auto* c_view = app.add_subcommand("view", "reinterpret a document as a lax 1-cell and back");
  c_view->add_option("what", view_what, "monad-map|module|functor|retrofunctor")->required();
  c_view->add_option("file", file)->required();

  auto* c_tospec = app.add_subcommand("to-spec", "monad 2-cell to specialization");
  c_tospec->add_option("file", file)->required();

  auto* c_transpose =
      app.add_subcommand("transpose", "mate of a lax (colax) 1-cell along an adjunction");
  c_transpose->add_option("cell", file)->required();
  c_transpose->add_option("--left", file2, "left adjoint functor document")->required();
  c_transpose->add_option("--unit", file3, "adjunction unit (nattrans document)")->required();
  c_transpose->add_option("--counit", file4, "adjunction counit (nattrans document)")->required();

  auto* c_interchange = app.add_subcommand("interchange", "check interchange on a 2x2 grid");
  c_interchange->add_option("q11", file)->required();
  c_interchange->add_option("q12", file2)->required();
  c_interchange->add_option("q21", file3)->required();
  c_interchange->add_option("q22", file4)->required();

  auto* c_construct = app.add_subcommand("construct", "derived objects");
  c_construct
      ->add_option("what", kind_arg,
                   "em|kleisli|free|composite|injections|codensity|pushforward|extension|"
                   "from-adjunction")
      ->required();
  c_construct->add_option("file", file)->required();
  std::string construct_of, construct_unit, construct_counit;
  bool as_extension = false;
  c_construct->add_option("--along", file2, "1-cell to extend along (functor document)");
  c_construct->add_option("--of", construct_of, "1-cell to extend (functor document)");
  c_construct->add_option("--monad", file3, "monad document (pushforward, from-adjunction)");
  c_construct->add_option("--left", file4, "left adjoint (from-adjunction)");
  c_construct->add_option("--unit", construct_unit, "adjunction unit (from-adjunction)");
  c_construct->add_option("--counit", construct_counit, "adjunction counit (from-adjunction)");
  c_construct->add_flag("--as-extension", as_extension,
                        "emit the extension document instead of the monad");

  auto* c_compare = app.add_subcommand("compare", "comparison functor of a resolution");
  c_compare->add_option("monad", file)->required();
  c_compare->add_option("--right", file2, "right adjoint R (functor document)")->required();
  c_compare->add_option("--left", file3, "left adjoint L (functor document)")->required();
  c_compare->add_option("--unit", file4, "adjunction unit (nattrans)")->required();
  std::string counit_file;
  c_compare->add_option("--counit", counit_file, "adjunction counit (nattrans)")->required();

  auto* c_compare_emkl = app.add_subcommand(
      "compare-emkl", "comparison 1-cell between the nested algebra objects of a law");
  c_compare_emkl->add_option("file", file)->required();

  auto* c_lift = app.add_subcommand("lift", "liftings through universal objects");
  c_lift->add_option("what", lift_what, "module|module-map|em|bimodule|ext")->required();
  c_lift->add_option("file", file)->required();
  c_lift->add_option("--extension", file2, "extension document (for ext)");
  c_lift->add_option("--monad", file3, "algebra-object monad (for em/ext)");
  c_lift->add_option("--second", file4, "second module (for module-map)");
  std::string cellfile;
  c_lift->add_option("--cell", cellfile, "module-map cell (nattrans document)");

  auto* c_split = app.add_subcommand("split-module", "split a composite-monad module");
  c_split->add_option("law", file)->required();
  c_split->add_option("module", file2)->required();

  auto* c_merge = app.add_subcommand("merge-module", "merge a distributivity-compatible pair");
  c_merge->add_option("law", file)->required();
  c_merge->add_option("first", file2)->required();
  c_merge->add_option("second", file3)->required();

  auto* c_roundtrip = app.add_subcommand("roundtrip", "monad-in-Mnd / span-monad round trips");
  c_roundtrip->add_option("what", kind_arg, "mnd|span")->required();
  c_roundtrip->add_option("file", file)->required();

  auto* c_oracle = app.add_subcommand("oracle", "universal-property oracles");
  c_oracle->add_option("what", kind_arg, "right-extension|universal-monad|preserves")->required();
  c_oracle->add_option("file", file)->required();
  c_oracle->add_option("--monad", file2, "acting monad (universal-monad)");
  c_oracle->add_option("--structure", file3, "module action or lax cell (nattrans document)");
  c_oracle->add_option("--functor", file4, "1-cell to test (preserves)");

  auto* c_verify = app.add_subcommand("verify", "algebra-object composition theorem");
  c_verify->add_option("what", kind_arg, "distem")->required();
  c_verify->add_option("file", file)->required();

  auto* c_export = app.add_subcommand("export", "export a category as DOT");
  c_export->add_option("what", kind_arg, "dot")->required();
  c_export->add_option("file", file)->required();

  auto* c_canon = app.add_subcommand("canonicalize", "canonical serialization of a document");
  c_canon->add_option("file", file)->required();

  auto* c_monadstruct =
      app.add_subcommand("monad-structure", "monad structure of an extension document");
  c_monadstruct->add_option("file", file)->required();

  auto* c_fixtures = app.add_subcommand("fixtures", "write the bundled fixtures and corpus");
  c_fixtures->add_option("--out", out_dir)->capture_default_str();

  auto* c_suite = app.add_subcommand("suite", "run every proposition check");

  auto* c_coverage = app.add_subcommand("coverage", "print the command/operation table");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  EnumCap cap{opt.cap};
  try {
    auto store = make_store(opt, file);
    auto load = [&](const std::string& f) { return load_document(f, store); };
    auto load_as = [&](const std::string& f, const char* want) {
      Document d = load(f);
      if (d.kind != want)
        throw InvalidInput(std::string("expected a ") + want + " document, got " + kind_of(d));
      return d;
    };

    if (*c_check) {
      Document d = load(file);
      if (d.kind != kind_arg)
        throw InvalidInput("document kind is '" + d.kind + "', not '" + kind_arg + "'");
      LawReport r = check_document(d);
      emit(opt, report_of(r));
      return r.ok() ? kExitPass : kExitViolation;
    }
    if (*c_compose) {
      auto f = std::get<FinFunctor>(load_as(file, "functor").payload);
      auto g = std::get<FinFunctor>(load_as(file2, "functor").payload);
      emit(opt, doc_of("functor", compose_functors(f, g)));
      return kExitPass;
    }
    if (*c_compose_lax) {
      Document a = load(file);
      Document b = load(file2);
      if (a.kind == "lax" && b.kind == "lax") {
        auto out = compose_lax(std::get<LaxMorphism>(a.payload), std::get<LaxMorphism>(b.payload));
        emit(opt, doc_of("lax", out));
      } else if (a.kind == "colax" && b.kind == "colax") {
        auto out =
            compose_lax(std::get<ColaxMorphism>(a.payload), std::get<ColaxMorphism>(b.payload));
        emit(opt, doc_of("colax", out));
      } else {
        throw InvalidInput("compose-lax expects two lax or two colax documents");
      }
      return kExitPass;
    }
    if (*c_compose_sq) {
      auto a = load(file);
      auto b = load(file2);
      auto qa = std::get<SquareCell>(a.payload);
      auto qb = std::get<SquareCell>(b.payload);
      auto out = compose_squares(qa, qb, direction == "lax" ? SquareDir::lax : SquareDir::colax);
      emit(opt, doc_of(out.kind == CellKind::two_cell ? "square" : "specialization", out));
      return kExitPass;
    }
    if (*c_compose_spans) {
      auto a = std::get<Span>(load_as(file, "span").payload);
      auto b = std::get<Span>(load_as(file2, "span").payload);
      emit(opt, doc_of("span", compose_spans(a, b)));
      return kExitPass;
    }
    if (*c_paste) {
      std::ifstream in(file);
      if (!in) throw InvalidInput("cannot open " + file);
      Json j;
      in >> j;
      // expression tree: {op: vertical|horizontal|whisker_left|whisker_right|id|cell, ...}
      std::function<PasteExpr(const Json&)> build = [&](const Json& node) -> PasteExpr {
        std::string op = node.at("op").get<std::string>();
        if (op == "cell")
          return leaf(std::get<NatTrans>(parse_document(node.at("of"), store).payload));
        if (op == "id")
          return id_expr(std::get<FinFunctor>(parse_document(node.at("of"), store).payload));
        if (op == "vertical") return vert(build(node.at("first")), build(node.at("second")));
        if (op == "horizontal") return horiz(build(node.at("left")), build(node.at("right")));
        if (op == "whisker_left")
          return whiskl(std::get<FinFunctor>(parse_document(node.at("functor"), store).payload),
                        build(node.at("body")));
        if (op == "whisker_right")
          return whiskr(build(node.at("body")),
                        std::get<FinFunctor>(parse_document(node.at("functor"), store).payload));
        throw InvalidInput("unknown pasting op '" + op + "'");
      };
      emit(opt, doc_of("nattrans", paste(build(j))));
      return kExitPass;
    }
    if (*c_enum) {
      if (enum_kind == "functors") {
        auto a = std::get<CatPtr>(load_as(file, "category").payload);
        auto b = std::get<CatPtr>(load_as(file2, "category").payload);
        auto all = enumerate_functors(a, b, cap);
        Json out = Json::array();
        for (const auto& f : all) out.push_back(doc_of("functor", f));
        emit(opt, Json{{"count", all.size()}, {"cells", out}});
      } else if (enum_kind == "nattrans") {
        auto f = std::get<FinFunctor>(load_as(file, "functor").payload);
        auto g = std::get<FinFunctor>(load_as(file2, "functor").payload);
        auto all = enumerate_nat_trans(f, g, cap);
        Json out = Json::array();
        for (const auto& n : all) out.push_back(doc_of("nattrans", n));
        emit(opt, Json{{"count", all.size()}, {"cells", out}});
      } else {
        throw InvalidInput("enumerate expects 'functors' or 'nattrans'");
      }
      return kExitPass;
    }
    if (*c_limit) {
      auto d = std::get<FinFunctor>(load_as(file, "functor").payload);
      auto cone = limit(d, cap);
      if (!cone) {
        emit(opt, Json{{"present", false}});
        return kExitAbsent;
      }
      Json legs = Json::object();
      for (std::size_t o = 0; o < cone->legs.size(); ++o)
        legs[d.source->objects[o]] = d.target->mor_name(cone->legs[o]);
      emit(opt, Json{{"present", true},
                     {"apex", d.target->objects[static_cast<std::size_t>(cone->apex)]},
                     {"legs", legs}});
      return kExitPass;
    }
    if (*c_iso) {
      auto a = std::get<CatPtr>(load_as(file, "category").payload);
      auto b = std::get<CatPtr>(load_as(file2, "category").payload);
      auto iso = find_isomorphism(a, b, cap);
      if (!iso) {
        emit(opt, Json{{"present", false}});
        return kExitAbsent;
      }
      emit(opt, Json{{"present", true},
                     {"forward", doc_of("functor", iso->first)},
                     {"backward", doc_of("functor", iso->second)}});
      return kExitPass;
    }
    if (*c_nary) {
      auto m = std::get<Monad>(load_as(file, "monad").payload);
      emit(opt, doc_of("nattrans", nary_mult(m, nary_n)));
      return kExitPass;
    }
    if (*c_convert) {
      auto b = std::get<Bimodule>(load_as(file, "bimodule").payload);
      auto law = check_bimodule(b);
      if (!law.ok()) {
        emit(opt, report_of(law));
        return kExitViolation;
      }
      NatTrans joint = bimodule_joint_action(b);
      Bimodule back = bimodule_from_joint(b.left_monad, b.right_monad, b.carrier, joint);
      emit(opt, Json{{"joint", doc_of("nattrans", joint)},
                     {"roundtrip_identity", back.left_action == b.left_action &&
                                                back.right_action == b.right_action}});
      return kExitPass;
    }
    if (*c_view) {
      Document d = load(file);
      if (view_what == "monad-map") {
        auto l = as_lax_view(std::get<MonadMap>(d.payload));
        emit(opt, doc_of("lax", l));
      } else if (view_what == "module") {
        auto l = as_lax_view(std::get<ModuleStr>(d.payload));
        emit(opt, doc_of("lax", l));
      } else if (view_what == "functor") {
        auto l = as_lax_view(std::get<FinFunctor>(d.payload));
        emit(opt, doc_of("lax", l));
      } else if (view_what == "retrofunctor") {
        auto r = std::get<Retrofunctor>(d.payload);
        auto l = retrofunctor_to_lax(r);
        auto law = check_span_lax(l);
        emit(opt, Json{{"lawful", law.ok()},
                       {"source", doc_of("span-monad", l.source_monad)},
                       {"target", doc_of("span-monad", l.target_monad)}});
        return law.ok() ? kExitPass : kExitViolation;
      } else {
        throw InvalidInput("view expects monad-map|module|functor|retrofunctor");
      }
      return kExitPass;
    }
    if (*c_tospec) {
      auto q = std::get<SquareCell>(load_as(file, "square").payload);
      emit(opt, doc_of("specialization", spec_from_2cell(q)));
      return kExitPass;
    }
    if (*c_transpose) {
      Document d = load(file);
      Adjunction adj;
      adj.left = std::get<FinFunctor>(load_as(file2, "functor").payload);
      adj.unit = std::get<NatTrans>(load_as(file3, "nattrans").payload);
      adj.counit = std::get<NatTrans>(load_as(file4, "nattrans").payload);
      if (d.kind == "lax") {
        // the supplied functor is a left adjoint of the lax carrier
        auto l = std::get<LaxMorphism>(d.payload);
        adj.right = l.carrier;
        emit(opt, doc_of("colax", adjoint_transpose(l, adj)));
      } else if (d.kind == "colax") {
        // the supplied functor is a right adjoint of the colax carrier
        auto g = std::get<ColaxMorphism>(d.payload);
        adj.right = adj.left;
        adj.left = g.carrier;
        emit(opt, doc_of("lax", adjoint_transpose(g, adj)));
      } else {
        throw InvalidInput("transpose expects a lax or colax document");
      }
      return kExitPass;
    }
    if (*c_interchange) {
      auto q11 = std::get<SquareCell>(load(file).payload);
      auto q12 = std::get<SquareCell>(load(file2).payload);
      auto q21 = std::get<SquareCell>(load(file3).payload);
      auto q22 = std::get<SquareCell>(load(file4).payload);
      auto r = check_interchange(q11, q12, q21, q22);
      emit(opt, report_of(r));
      return r.ok() ? kExitPass : kExitViolation;
    }
    if (*c_construct) {
      if (kind_arg == "em") {
        auto m = std::get<Monad>(load_as(file, "monad").payload);
        auto a = construct_em(m);
        emit(opt, doc_of("module", universal_module(a)));
      } else if (kind_arg == "kleisli") {
        auto m = std::get<Monad>(load_as(file, "monad").payload);
        auto o = construct_kleisli(m);
        emit(opt, doc_of("module", universal_opmodule(o)));
      } else if (kind_arg == "free") {
        auto m = std::get<Monad>(load_as(file, "monad").payload);
        auto a = construct_em(m);
        Resolution r = free_resolution(a);
        emit(opt, Json{{"left", doc_of("functor", r.left)},
                       {"right", doc_of("functor", r.right)},
                       {"unit", doc_of("nattrans", r.adj_unit)},
                       {"counit", doc_of("nattrans", r.adj_counit)}});
      } else if (kind_arg == "composite") {
        auto d = std::get<DistributiveLaw>(load_as(file, "distributive-law").payload);
        emit(opt, doc_of("monad", composite_monad(d)));
      } else if (kind_arg == "injections") {
        auto d = std::get<DistributiveLaw>(load_as(file, "distributive-law").payload);
        auto [i1, i2] = injection_monad_maps(d);
        emit(opt, Json{{"first", doc_of("monad-map", i1)}, {"second", doc_of("monad-map", i2)}});
      } else if (kind_arg == "codensity") {
        auto x = std::get<FinFunctor>(load_as(file, "functor").payload);
        auto e = codensity(x, true, cap);
        if (!e) {
          emit(opt, Json{{"present", false}});
          return kExitAbsent;
        }
        if (as_extension)
          emit(opt, doc_of("extension", *e));
        else
          emit(opt, doc_of("monad", monad_structure(*e)));
      } else if (kind_arg == "pushforward") {
        auto x = std::get<FinFunctor>(load_as(file, "functor").payload);
        auto t = std::get<Monad>(load_as(file3, "monad").payload);
        auto e = pushforward(t, x, true, cap);
        if (!e) {
          emit(opt, Json{{"present", false}});
          return kExitAbsent;
        }
        if (as_extension)
          emit(opt, doc_of("extension", *e));
        else
          emit(opt, doc_of("monad", monad_structure(*e)));
      } else if (kind_arg == "extension") {
        auto along = std::get<FinFunctor>(load_as(file2.empty() ? file : file2, "functor").payload);
        auto of = std::get<FinFunctor>(
            load_as(construct_of.empty() ? file : construct_of, "functor").payload);
        auto e = right_extension(along, of, true, cap);
        if (!e) {
          emit(opt, Json{{"present", false}});
          return kExitAbsent;
        }
        emit(opt, doc_of("extension", *e));
      } else if (kind_arg == "from-adjunction") {
        // file: right adjoint; with --monad the pushforward, otherwise codensity
        Adjunction adj;
        adj.right = std::get<FinFunctor>(load_as(file, "functor").payload);
        adj.left = std::get<FinFunctor>(load_as(file4, "functor").payload);
        adj.unit = std::get<NatTrans>(load_as(construct_unit, "nattrans").payload);
        adj.counit = std::get<NatTrans>(load_as(construct_counit, "nattrans").payload);
        RightExtension e =
            file3.empty()
                ? from_adjunction_codensity(adj, true, cap)
                : from_adjunction_pushforward(
                      adj, std::get<Monad>(load_as(file3, "monad").payload), true, cap);
        emit(opt, doc_of("extension", e));
      } else {
        throw InvalidInput("unknown construct target '" + kind_arg + "'");
      }
      return kExitPass;
    }
    if (*c_compare) {
      auto m = std::get<Monad>(load_as(file, "monad").payload);
      Resolution r;
      r.monad = m;
      r.right = std::get<FinFunctor>(load_as(file2, "functor").payload);
      r.left = std::get<FinFunctor>(load_as(file3, "functor").payload);
      r.adj_unit = std::get<NatTrans>(load_as(file4, "nattrans").payload);
      r.adj_counit = std::get<NatTrans>(load_as(counit_file, "nattrans").payload);
      auto a = construct_em(m);
      emit(opt, doc_of("functor", comparison_functor(a, r, true, cap)));
      return kExitPass;
    }
    if (*c_compare_emkl) {
      auto d = std::get<DistributiveLaw>(load_as(file, "distributive-law").payload);
      emit(opt, doc_of("functor", comparison_cell(d, cap)));
      return kExitPass;
    }
    if (*c_lift) {
      if (lift_what == "module") {
        auto s = std::get<ModuleStr>(load_as(file, "module").payload);
        auto a = construct_em(s.monad);
        emit(opt, doc_of("functor", lift_module(a, s, true, cap)));
      } else if (lift_what == "module-map") {
        auto m1 = std::get<ModuleStr>(load_as(file, "module").payload);
        auto m2 = std::get<ModuleStr>(load_as(file4, "module").payload);
        auto phi = std::get<NatTrans>(load_as(cellfile, "nattrans").payload);
        auto a = construct_em(m1.monad);
        emit(opt, doc_of("nattrans", lift_module_map(a, m1, m2, phi)));
      } else if (lift_what == "em") {
        Document d = load(file);
        if (d.kind == "lax") {
          auto l = std::get<LaxMorphism>(d.payload);
          auto a1 = construct_em(l.source_monad);
          auto a2 = construct_em(l.target_monad);
          emit(opt, doc_of("functor", emlift_lax(a1, a2, l)));
        } else {
          auto q = std::get<SquareCell>(d.payload);
          auto a1 = construct_em(q.top.source_monad);
          auto a2 = construct_em(q.top.target_monad);
          emit(opt, doc_of("nattrans", emlift_cell(a1, a2, q)));
        }
      } else if (lift_what == "bimodule") {
        auto b = std::get<Bimodule>(load_as(file, "bimodule").payload);
        auto o = construct_kleisli(b.left_monad);
        auto a = construct_em(b.right_monad);
        emit(opt, doc_of("functor", lift_bimodule(b, o, a)));
      } else if (lift_what == "ext") {
        auto e = std::get<RightExtension>(load_as(file2, "extension").payload);
        Document d = load(file);
        if (d.kind == "lax") {
          auto l = std::get<LaxMorphism>(d.payload);
          if (e.pushed && is_identity_monad(*e.pushed)) {
            auto a2 = construct_em(l.target_monad);
            emit(opt, doc_of("functor", extlift_lax(e, a2, l)));
          } else {
            emit(opt, doc_of("lax", pushlift_lax(e, l)));
          }
        } else {
          auto q = std::get<SquareCell>(d.payload);
          if (e.pushed && is_identity_monad(*e.pushed)) {
            auto a2 = construct_em(q.top.target_monad);
            emit(opt, doc_of("nattrans", extlift_cell(e, a2, q)));
          } else {
            auto out = pushlift_cell(e, q);
            emit(opt, doc_of(out.kind == CellKind::two_cell ? "square" : "specialization", out));
          }
        }
      } else {
        throw InvalidInput("unknown lift target '" + lift_what + "'");
      }
      return kExitPass;
    }
    if (*c_split) {
      auto d = std::get<DistributiveLaw>(load_as(file, "distributive-law").payload);
      auto s = std::get<ModuleStr>(load_as(file2, "module").payload);
      auto [m1, m2] = module_split(d, s);
      emit(opt, Json{{"first", doc_of("module", m1)}, {"second", doc_of("module", m2)}});
      return kExitPass;
    }
    if (*c_merge) {
      auto d = std::get<DistributiveLaw>(load_as(file, "distributive-law").payload);
      auto m1 = std::get<ModuleStr>(load_as(file2, "module").payload);
      auto m2 = std::get<ModuleStr>(load_as(file3, "module").payload);
      emit(opt, doc_of("module", module_merge(d, m1, m2)));
      return kExitPass;
    }
    if (*c_roundtrip) {
      if (kind_arg == "mnd") {
        auto d = std::get<DistributiveLaw>(load_as(file, "distributive-law").payload);
        MonadInMnd view = distlaw_to_mnd(d);
        auto l1 = check_square(view.unit_cell);
        auto l2 = check_square(view.mult_cell);
        DistributiveLaw back = distlaw_from_mnd(view);
        bool exact = back.cell == d.cell;
        emit(opt, Json{{"unit_cell_ok", l1.ok()},
                       {"mult_cell_ok", l2.ok()},
                       {"roundtrip_identity", exact}});
        return l1.ok() && l2.ok() && exact ? kExitPass : kExitViolation;
      }
      if (kind_arg == "span") {
        Document d = load(file);
        if (d.kind == "category") {
          auto rt = category_span_roundtrip(std::get<CatPtr>(d.payload), cap);
          emit(opt, Json{{"encoded", doc_of("span-monad", rt.encoded)},
                         {"iso_forward", doc_of("functor", rt.iso_forward)}});
        } else {
          auto m = std::get<SpanMonad>(d.payload);
          FinCategory c = span_to_category(m);
          emit(opt, doc_of("category", c));
        }
        return kExitPass;
      }
      throw InvalidInput("roundtrip expects 'mnd' or 'span'");
    }
    if (*c_oracle) {
      if (kind_arg == "right-extension") {
        auto e = std::get<RightExtension>(load_as(file, "extension").payload);
        auto r = certify_extension(e, cap);
        emit(opt, report_of(r));
        return r.ok() ? kExitPass : kExitViolation;
      }
      if (kind_arg == "universal-monad") {
        auto e = std::get<RightExtension>(load_as(file, "extension").payload);
        auto t = std::get<Monad>(load_as(file2, "monad").payload);
        auto structure = std::get<NatTrans>(load_as(file3, "nattrans").payload);
        emit(opt, doc_of("monad-map", universal_monad_map(e, t, structure, true, cap)));
        return kExitPass;
      }
      if (kind_arg == "preserves") {
        auto e = std::get<RightExtension>(load_as(file, "extension").payload);
        auto f = std::get<FinFunctor>(load_as(file4, "functor").payload);
        auto rep = preserves_right_extension(f, e, cap);
        Json out{{"preserved", rep.preserved}};
        if (!rep.preserved) {
          out["factorizations"] = rep.factorizations;
          out["counterexample_psi"] = doc_of("nattrans", *rep.counterexample_psi);
        }
        emit(opt, out);
        return rep.preserved ? kExitPass : kExitViolation;
      }
      throw InvalidInput("unknown oracle '" + kind_arg + "'");
    }
    if (*c_verify) {
      if (kind_arg != "distem") throw InvalidInput("unknown verification '" + kind_arg + "'");
      auto d = std::get<DistributiveLaw>(load_as(file, "distributive-law").payload);
      auto rep = verify_distem(d, cap);
      Json out = report_of(rep.laws);
      out["em_iso_forward"] = doc_of("functor", rep.em_iso_forward);
      out["kl_iso_forward"] = doc_of("functor", rep.kl_iso_forward);
      emit(opt, out);
      return rep.laws.ok() ? kExitPass : kExitViolation;
    }
    if (*c_export) {
      if (kind_arg != "dot") throw InvalidInput("unknown export format '" + kind_arg + "'");
      auto c = std::get<CatPtr>(load_as(file, "category").payload);
      std::cout << export_dot(*c);
      return kExitPass;
    }
    if (*c_canon) {
      std::ifstream in(file);
      if (!in) throw InvalidInput("cannot open " + file);
      Json j;
      try {
        in >> j;
      } catch (const std::exception& ex) {
        throw SchemaError(std::string("invalid JSON: ") + ex.what());
      }
      std::cout << canonicalize(j, store);
      return kExitPass;
    }
    if (*c_monadstruct) {
      auto e = std::get<RightExtension>(load_as(file, "extension").payload);
      emit(opt, doc_of("monad", monad_structure(e)));
      return kExitPass;
    }
    if (*c_fixtures) {
      fs::create_directories(out_dir);
      for (auto& [name, j] : fixture_documents()) {
        std::ofstream out(fs::path(out_dir) / (name + ".json"));
        out << canonical_text(j);
      }
      fs::create_directories(fs::path(out_dir) / "corpus");
      for (auto& [name, j] : corpus_documents()) {
        std::ofstream out(fs::path(out_dir) / "corpus" / (name + ".json"));
        out << canonical_text(j);
      }
      std::cout << "wrote fixtures to " << out_dir << "\n";
      return kExitPass;
    }
    if (*c_suite) {
      SuiteOptions sopt;
      sopt.seed = opt.seed;
      sopt.cap = cap;
      if (fs::is_directory(opt.fixtures_dir)) sopt.fixtures_dir = opt.fixtures_dir;
      SuiteReport report = run_suite(sopt);
      if (opt.format == "json")
        std::cout << canonical_text(suite_report_json(report));
      else
        std::cout << suite_report_text(report);
      return report.all_pass() ? kExitPass : kExitViolation;
    }
    if (*c_coverage) {
      Json out = Json::array();
      for (const auto& [sub, op] : command_table())
        out.push_back({{"subcommand", sub}, {"operation", op}});
      std::cout << canonical_text(out);
      return kExitPass;
    }
  } catch (const CapExceeded& ex) {
    std::cerr << "size cap exceeded: " << ex.what() << "\n";
    return kExitCap;
  } catch (const SchemaError& ex) {
    std::cerr << ex.what() << "\n";
    return kExitInputError;
  } catch (const BoundaryError& ex) {
    std::cerr << "boundary mismatch: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::bad_variant_access&) {
    std::cerr << "document kind does not match the command\n";
    return kExitInputError;
  } catch (const InvalidInput& ex) {
    std::cerr << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
