#include "inrl/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "inrl/axioms.hpp"
#include "inrl/congruence.hpp"
#include "inrl/decomposition.hpp"
#include "inrl/enumeration.hpp"
#include "inrl/errors.hpp"
#include "inrl/generators.hpp"
#include "inrl/io.hpp"
#include "inrl/partition.hpp"
#include "inrl/properties.hpp"

namespace inrl::cli {

namespace {

namespace fs = std::filesystem;

/// Invalid input: reported on `err`, exit 2.
struct Invalid {
  std::string message;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

FiniteInRL read_input(const Context& ctx, const std::string& file) {
  try {
    if (file == "-") {
      const std::string text(std::istreambuf_iterator<char>(ctx.in), {});
      return parse_algebra(text);
    }
    return load_algebra(file);
  } catch (const Error& e) {
    throw Invalid{file + ": " + e.what()};
  }
}

/// Loads an algebra that must be a member.
FiniteInRL read_member(const Context& ctx, const std::string& file) {
  FiniteInRL alg = read_input(ctx, file);
  const AxiomReport r = validate(alg);
  if (const Check* c = r.first_failure())
    throw Invalid{file + ": not a member: " + c->name + " fails at " + format_witness(*c, alg)};
  return alg;
}

std::string element_list(const FiniteInRL& alg, const std::vector<Elem>& xs) {
  std::string out;
  for (Elem x : xs) {
    if (!out.empty()) out += ' ';
    out += alg.name(x);
  }
  return out;
}

int cmd_check(const Context& ctx, const std::string& file) {
  const FiniteInRL alg = read_input(ctx, file);
  const AxiomReport r = validate(alg);
  if (r.ok()) {
    ctx.out << "member: " << alg.size() << " elements\n";
    return exit_ok;
  }
  for (const Check* c : r.failures()) ctx.out << c->name << ": " << format_witness(*c, alg) << '\n';
  return exit_fails;
}

int cmd_partition(const Context& ctx, const std::string& file) {
  const FiniteInRL alg = read_member(ctx, file);
  const Partition p = partition(alg);
  for (const auto& b : p.blocks)
    ctx.out << "block " << alg.name(b.bottom) << ".." << alg.name(b.top) << ": "
            << element_list(alg, b.elements) << '\n';
  ctx.out << "skeleton: " << element_list(alg, p.skeleton) << '\n';
  return exit_ok;
}

int cmd_congruences(const Context& ctx, const std::string& file) {
  const FiniteInRL alg = read_member(ctx, file);
  const CongruenceLattice lat = congruence_lattice(alg);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    ctx.out << "filter " << alg.name(lat.generators[i]) << ":";
    for (const auto& cls : lat.congruences[i].classes) ctx.out << " {" << element_list(alg, cls) << "}";
    ctx.out << '\n';
  }
  return exit_ok;
}

int cmd_glue(const Context& ctx, const std::string& file) {
  GluingSpec spec = [&] {
    try {
      return load_gluing_spec(file);
    } catch (const Error& e) {
      throw Invalid{file + ": " + e.what()};
    }
  }();
  const Report r = validate_gluing(spec);
  if (!r.ok()) {
    for (const Check* c : r.failures()) {
      ctx.err << "ingredient " << c->name << " fails";
      if (const auto w = format_gluing_witness(*c, spec); !w.empty()) ctx.err << ": " << w;
      ctx.err << '\n';
    }
    throw Invalid{file + ": invalid gluing spec"};
  }
  ctx.out << emit_algebra(glue(spec).result);
  return exit_ok;
}

void print_tree(std::ostream& out, const DecompositionTree& t, int depth) {
  const std::string indent(2 * depth, ' ');
  if (t->is_leaf()) {
    out << indent << "leaf " << t->algebra.size() << ": " << element_list(t->algebra, elements(t->algebra))
        << '\n';
    return;
  }
  out << indent << "glue " << t->algebra.size() << " a=" << t->gluing->a << " b=" << t->gluing->b << '\n';
  print_tree(out, t->lower, depth + 1);
  print_tree(out, t->upper, depth + 1);
}

int cmd_decompose(const Context& ctx, const std::string& file, const std::string& out_dir) {
  const FiniteInRL alg = read_member(ctx, file);
  const DecompositionTree tree = decompose(alg);
  print_tree(ctx.out, tree, 0);
  if (!out_dir.empty()) write_tree(tree, out_dir);
  return exit_ok;
}

int cmd_reassemble(const Context& ctx, const std::string& dir) {
  DecompositionTree tree = [&] {
    try {
      return read_tree(dir);
    } catch (const Error& e) {
      throw Invalid{dir + ": " + e.what()};
    }
  }();
  ctx.out << emit_algebra(reassemble(tree));
  return exit_ok;
}

int cmd_gen(const Context& ctx, const std::string& family, std::size_t k) {
  try {
    if (family == "an") {
      ctx.out << emit_algebra(build_an(k));
    } else if (family == "bool") {
      ctx.out << emit_algebra(boolean_algebra(k));
    } else {
      throw Invalid{"unknown family '" + family + "' (expected an or bool)"};
    }
  } catch (const CapExceeded& e) {
    throw Invalid{e.what()};
  }
  return exit_ok;
}

int cmd_enum(const Context& ctx, std::size_t max_size, const std::string& out_dir) {
  Corpus corpus;
  try {
    corpus = enumerate_up_to_iso(max_size);
  } catch (const CapExceeded& e) {
    throw Invalid{e.what()};
  }
  fs::create_directories(out_dir);
  std::vector<std::size_t> seen(max_size + 1, 0);
  for (const auto& alg : corpus.algebras) {
    const std::size_t k = alg.size();
    const std::string name = "size" + std::to_string(k) + "_" + std::to_string(seen[k]++) + ".rlat";
    write_text(fs::path(out_dir) / name, emit_algebra(alg));
  }
  for (std::size_t k = 1; k <= max_size; ++k) ctx.out << "size " << k << ": " << corpus.counts[k] << '\n';
  return exit_ok;
}

int cmd_prop(const Context& ctx, const std::string& property, const std::string& file) {
  const FiniteInRL alg = read_member(ctx, file);
  PropertyVerdict v;
  if (property == "distr-semilattice")
    v = is_distributive_semilattice(alg);
  else if (property == "distr-lattice")
    v = is_lattice_distributive(alg);
  else if (property == "semilinear")
    v = is_semilinear(alg);
  else
    throw Invalid{"unknown property '" + property + "'"};
  if (v.holds) {
    ctx.out << "holds\n";
    return exit_ok;
  }
  Check c;
  c.passed = false;
  c.witness = *v.witness;
  ctx.out << "fails: " << format_witness(c, alg) << '\n';
  return exit_fails;
}

int cmd_dot(const Context& ctx, const std::string& file, const std::string& order) {
  const FiniteInRL alg = read_member(ctx, file);
  ctx.out << dot_export(alg, order == "monoidal" ? OrderKind::monoidal : OrderKind::lattice);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const Context ctx{in, out, err};
  CLI::App app{"Finite commutative idempotent involutive residuated lattices", "rlat"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string file, dir, out_dir, family, property, order = "lattice";
  std::size_t number = 0;

  auto* check = app.add_subcommand("check", "validate every axiom");
  check->add_option("FILE", file, "algebra file, or - for stdin")->required();
  check->callback([&] { action = [&] { return cmd_check(ctx, file); }; });

  auto* part = app.add_subcommand("partition", "Boolean blocks and skeleton");
  part->add_option("FILE", file)->required();
  part->callback([&] { action = [&] { return cmd_partition(ctx, file); }; });

  auto* cong = app.add_subcommand("congruences", "all congruences, one per negative cone element");
  cong->add_option("FILE", file)->required();
  cong->callback([&] { action = [&] { return cmd_congruences(ctx, file); }; });

  auto* glue_cmd = app.add_subcommand("glue", "glue the algebras named in a spec file");
  glue_cmd->add_option("SPECFILE", file)->required();
  glue_cmd->callback([&] { action = [&] { return cmd_glue(ctx, file); }; });

  auto* dec = app.add_subcommand("decompose", "split into Boolean leaves");
  dec->add_option("FILE", file)->required();
  dec->add_option("--out", out_dir, "write the tree to this directory");
  dec->callback([&] { action = [&] { return cmd_decompose(ctx, file, out_dir); }; });

  auto* re = app.add_subcommand("reassemble", "glue a tree written by decompose --out");
  re->add_option("DIR", dir)->required();
  re->callback([&] { action = [&] { return cmd_reassemble(ctx, dir); }; });

  auto* gen = app.add_subcommand("gen", "generate A_N or the Boolean algebra with K atoms");
  gen->add_option("FAMILY", family)->required()->check(CLI::IsMember({"an", "bool"}));
  gen->add_option("N", number)->required();
  gen->callback([&] { action = [&] { return cmd_gen(ctx, family, number); }; });

  auto* en = app.add_subcommand("enum", "enumerate all members up to isomorphism");
  en->add_option("MAXSIZE", number)->required();
  en->add_option("--out", out_dir)->required();
  en->callback([&] { action = [&] { return cmd_enum(ctx, number, out_dir); }; });

  auto* prop = app.add_subcommand("prop", "decide a property");
  prop->add_option("PROPERTY", property)
      ->required()
      ->check(CLI::IsMember({"distr-semilattice", "distr-lattice", "semilinear"}));
  prop->add_option("FILE", file)->required();
  prop->callback([&] { action = [&] { return cmd_prop(ctx, property, file); }; });

  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("FILE", file)->required();
  dot->add_option("--order", order)->check(CLI::IsMember({"lattice", "monoidal"}));
  dot->callback([&] { action = [&] { return cmd_dot(ctx, file, order); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "rlat: " << e.what() << '\n';
    return exit_invalid;
  }

  try {
    return action();
  } catch (const Invalid& e) {
    err << "rlat: " << e.message << '\n';
    return exit_invalid;
  } catch (const Error& e) {
    err << "rlat: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "rlat: " << e.what() << '\n';
    return exit_invalid;
  }
}

}  // namespace inrl::cli
