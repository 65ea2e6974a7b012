#include "quasicut/quasicut.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace quasicut;

namespace {

struct CliInputError {
  std::string msg;
};

std::string load_input(const std::string& input, const std::string& example_name) {
  if (!input.empty() && !example_name.empty())
    throw CliInputError{"give either --input or --example, not both"};
  if (!example_name.empty()) {
    const BuiltinExample* ex = find_example(example_name);
    if (!ex) throw CliInputError{"unknown example '" + example_name + "'"};
    return ex->text;
  }
  if (input.empty()) throw CliInputError{"no input: give --input FILE or --example NAME"};
  std::ifstream in(input, std::ios::binary);
  if (!in) throw CliInputError{"cannot read '" + input + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_svg(const std::string& path, const std::string& svg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliInputError{"cannot write '" + path + "'"};
  out << svg;
}

Quasilattice doc_lattice(const InputDocument& doc) {
  if (doc.generators.empty())
    throw LatticeError("document declares no generators; this command needs a quasilattice");
  return make_quasilattice(doc.n, doc.generators);
}

DelzantPresentation doc_presentation(const InputDocument& doc) {
  Quasilattice q = doc_lattice(doc);
  PolyhedronAnalysis an = analyze(doc.polyhedron);
  if (!doc.witnesses.empty()) {
    std::vector<MembershipWitness> wit;
    for (const auto& w : doc.witnesses) wit.push_back(MembershipWitness{w});
    return make_presentation(std::move(an), std::move(q), std::move(wit));
  }
  return make_presentation(std::move(an), std::move(q));
}

void print_prelude(std::ostream& os, const InputDocument& doc) {
  report_tower(os, doc.tower);
  report_polyhedron(os, doc.polyhedron);
}

int cmd_analyze(const InputDocument& doc, std::ostream& os) {
  os << "quasicut analyze\n";
  print_prelude(os, doc);
  Examination ex = examine(doc.polyhedron);
  switch (ex.status) {
    case PolyhedronStatus::empty:
      os << "status: empty\n";
      return 1;
    case PolyhedronStatus::low_dimension:
      os << "status: dimension " << ex.dimension << " below ambient " << doc.n << "\n";
      return 1;
    case PolyhedronStatus::ok:
      break;
  }
  os << "status: ok\n";
  report_analysis(os, *ex.analysis);
  return 0;
}

int cmd_delzant(const InputDocument& doc, std::ostream& os) {
  os << "quasicut delzant\n";
  print_prelude(os, doc);
  DelzantPresentation pres = doc_presentation(doc);
  report_analysis(os, pres.analysis);
  report_quasilattice(os, pres.quasilattice);
  os << "facet witnesses over the generators:\n";
  for (std::size_t j = 0; j < pres.witnesses.size(); ++j)
    os << "  [" << j << "] " << format_int_vec(pres.witnesses[j].coefficients) << "\n";
  os << "== model ==\n";
  report_model(os, build_model(std::move(pres)));
  return 0;
}

std::optional<RenderOverlay> cut_overlay(const CutResult& cr) {
  RenderOverlay ov;
  ov.y = cr.spec.y;
  ov.epsilon = cr.spec.epsilon;
  ov.slice = cr.reduced.slice_vertices;
  return ov;
}

int cmd_cut(const InputDocument& doc, std::ostream& os, const std::string& svg_path,
            bool arbitrary) {
  os << (arbitrary ? "quasicut arbitrary-cut\n" : "quasicut cut\n");
  if (!doc.cut) throw CutError("document has no cut block");
  print_prelude(os, doc);
  DelzantPresentation pres = doc_presentation(doc);
  report_analysis(os, pres.analysis);
  report_quasilattice(os, pres.quasilattice);

  CutResult cr;
  if (arbitrary) {
    ArbitraryCutResult ar = arbitrary_cut(pres, *doc.cut);
    os << "== lattice extension ==\n";
    os << "extended: " << (ar.extended ? "yes" : "no") << "\n";
    os << "quotient group Gamma: " << format_group(ar.gamma) << "\n";
    for (const auto& nset : ar.notes) os << "note: " << nset << "\n";
    cr = std::move(ar.result);
  } else {
    os << "== model ==\n";
    DelzantModel model = build_model(pres);
    report_model(os, model);
    cr = cut(model, *doc.cut);
  }
  report_cut(os, cr);
  if (!svg_path.empty()) {
    if (doc.n != 2) throw GeometryError("rendering needs a 2-dimensional polyhedron");
    write_svg(svg_path, render_svg(pres.analysis, cut_overlay(cr)));
    os << "svg written to " << svg_path << "\n";
  }
  return 0;
}

int cmd_blowup(const InputDocument& doc, std::ostream& os, const std::string& svg_path) {
  os << "quasicut blowup\n";
  if (!doc.blowup) throw CutError("document has no blowup block");
  print_prelude(os, doc);
  DelzantPresentation pres = doc_presentation(doc);
  report_analysis(os, pres.analysis);
  report_quasilattice(os, pres.quasilattice);
  DelzantModel model = build_model(pres);
  os << "== model ==\n";
  report_model(os, model);

  std::size_t vi = model.presentation.analysis.vertices.size();
  for (std::size_t i = 0; i < model.presentation.analysis.vertices.size(); ++i) {
    const FieldVec& p = model.presentation.analysis.vertices[i].point;
    bool match = true;
    for (std::size_t k = 0; k < doc.n; ++k)
      if (compare(p[k], doc.blowup->vertex[k]) != 0) { match = false; break; }
    if (match) { vi = i; break; }
  }
  if (vi == model.presentation.analysis.vertices.size())
    throw CutError("no vertex at the given point");
  os << "blow-up vertex: [" << vi << "] " << format_vec(doc.blowup->vertex) << "\n";

  AdmissibilityReport adm = admissible(model, vi, doc.blowup->y);
  report_admissibility(os, adm);
  if (!adm.admissible) return 1;
  report_threshold(os, max_epsilon(model, vi, doc.blowup->y));
  CutResult cr = blow_up(model, BlowupSpec{vi, doc.blowup->y, doc.blowup->epsilon});
  os << "the plus side is the blown-up model, the minus side the sliced-off corner\n";
  report_cut(os, cr);

  HPolyhedron cone = vertex_cone(model.presentation.analysis, vi);
  LocalModel lm = local_model(make_presentation(cone, model.presentation.quasilattice),
                              doc.blowup->y, doc.blowup->epsilon);
  report_local_model(os, lm);

  if (!svg_path.empty()) {
    if (doc.n != 2) throw GeometryError("rendering needs a 2-dimensional polyhedron");
    write_svg(svg_path, render_svg(model.presentation.analysis, cut_overlay(cr)));
    os << "svg written to " << svg_path << "\n";
  }
  return 0;
}

int cmd_render(const InputDocument& doc, std::ostream& os, const std::string& svg_path) {
  Examination ex = examine(doc.polyhedron);
  if (ex.status != PolyhedronStatus::ok)
    throw GeometryError(ex.status == PolyhedronStatus::empty
                            ? "polyhedron is empty"
                            : "polyhedron is lower-dimensional");
  std::optional<RenderOverlay> ov;
  if (doc.cut) {
    CutSpec spec = detail::normalize_spec(*doc.cut);
    ReducedSpace rs = detail::reduced_space(*ex.analysis, spec.y, spec.epsilon, {});
    ov = RenderOverlay{spec.y, spec.epsilon, rs.slice_vertices};
  } else if (doc.blowup) {
    CutSpec spec = detail::normalize_spec(
        CutSpec{doc.blowup->y, doc.blowup->epsilon, CutSide::ge});
    ReducedSpace rs = detail::reduced_space(*ex.analysis, spec.y, spec.epsilon, {});
    ov = RenderOverlay{spec.y, spec.epsilon, rs.slice_vertices};
  }
  std::string svg = render_svg(*ex.analysis, ov);
  if (svg_path.empty()) {
    os << svg;
  } else {
    write_svg(svg_path, svg);
    os << "svg written to " << svg_path << "\n";
  }
  return 0;
}

int cmd_example(const std::string& name, std::ostream& os) {
  std::size_t count = 0;
  const BuiltinExample* list = builtin_examples(count);
  if (name.empty()) {
    for (std::size_t i = 0; i < count; ++i)
      os << list[i].name << " - " << list[i].description << "\n";
    return 0;
  }
  const BuiltinExample* ex = find_example(name);
  if (!ex) throw CliInputError{"unknown example '" + name + "'"};
  os << ex->text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic models of toric quasifolds from polyhedra and quasilattices"};
  app.require_subcommand(1);

  std::string input, svg_path, example_name, example_arg;
  auto add_common = [&](CLI::App* c, bool with_svg) {
    c->add_option("--input", input, "document file");
    c->add_option("--example", example_name, "use a built-in document");
    if (with_svg) c->add_option("--svg", svg_path, "write an SVG drawing to this file");
  };
  CLI::App* c_analyze = app.add_subcommand("analyze", "validate the polyhedron");
  add_common(c_analyze, false);
  CLI::App* c_delzant = app.add_subcommand("delzant", "build the symbolic model");
  add_common(c_delzant, false);
  CLI::App* c_cut = app.add_subcommand("cut", "cut the model along a hyperplane");
  add_common(c_cut, true);
  CLI::App* c_arb = app.add_subcommand("arbitrary-cut",
                                       "cut along a direction outside the quasilattice");
  add_common(c_arb, true);
  CLI::App* c_blow = app.add_subcommand("blowup", "slice off a corner at a vertex");
  add_common(c_blow, true);
  CLI::App* c_render = app.add_subcommand("render", "draw the polyhedron as SVG");
  add_common(c_render, true);
  CLI::App* c_example = app.add_subcommand("example", "print a built-in document");
  c_example->add_option("name", example_arg, "example name; omit to list all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_example->parsed()) return cmd_example(example_arg, std::cout);
    InputDocument doc = parse(load_input(input, example_name));
    if (c_analyze->parsed()) return cmd_analyze(doc, std::cout);
    if (c_delzant->parsed()) return cmd_delzant(doc, std::cout);
    if (c_cut->parsed()) return cmd_cut(doc, std::cout, svg_path, false);
    if (c_arb->parsed()) return cmd_cut(doc, std::cout, svg_path, true);
    if (c_blow->parsed()) return cmd_blowup(doc, std::cout, svg_path);
    if (c_render->parsed()) return cmd_render(doc, std::cout, svg_path);
    return 2;
  } catch (const CliInputError& e) {
    std::cerr << e.msg << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
