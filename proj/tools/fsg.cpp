#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fsg/circle.hpp"
#include "fsg/gamma.hpp"
#include "fsg/group.hpp"
#include "fsg/parse.hpp"
#include "fsg/selftest.hpp"
#include "fsg/skein.hpp"

namespace {

using namespace fsg;

struct Common {
  int n = 0;
  std::string type;
  std::string file;
};

std::optional<GroupType> requested_type(const Common& c) {
  if (c.type.empty()) return std::nullopt;
  if (c.type == "F") return GroupType::F;
  if (c.type == "T") return GroupType::T;
  if (c.type == "V") return GroupType::V;
  throw DomainError("--type must be F, T or V");
}

std::string element_text(const Common& c, const std::string& positional) {
  if (!c.file.empty()) {
    std::ifstream in(c.file);
    if (!in) throw DomainError("cannot read " + c.file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (positional.empty()) throw DomainError("missing element argument (or --file)");
  return positional;
}

GroupElement load_element(const Common& c, const std::string& positional) {
  SkeinContext ctx(c.n);
  return parse_element(element_text(c, positional), ctx, requested_type(c));
}

void add_common(CLI::App* cmd, Common* c, bool with_type = true) {
  cmd->add_option("--n", c->n, "skein parameter, >= 3")->required();
  if (with_type) cmd->add_option("--type", c->type, "element type tag: F, T or V");
  cmd->add_option("--file", c->file, "read the element from a file");
}

int run(int argc, char** argv) {
  CLI::App app{"calculator for the forest-skein groups of tau_n(a) = rho_n(b)"};
  app.require_subcommand(1);

  Common c;
  std::string arg1, arg2;
  int depth = 12;
  int len = 4;
  unsigned seed = 20260823;
  std::string out_path, format = "csv";

  auto* cmd_eval = app.add_subcommand("eval", "apply an element to a point u(p)");
  add_common(cmd_eval, &c);
  cmd_eval->add_option("element", arg1, "");
  cmd_eval->add_option("point", arg2, "")->required();

  auto* cmd_equal = app.add_subcommand("equal", "decide equality of two elements");
  add_common(cmd_equal, &c);
  cmd_equal->add_option("x", arg1, "")->required();
  cmd_equal->add_option("y", arg2, "")->required();

  auto* cmd_ident = app.add_subcommand("identity", "decide whether an element is trivial");
  add_common(cmd_ident, &c);
  cmd_ident->add_option("element", arg1, "");

  auto* cmd_mul = app.add_subcommand("mul", "multiply two elements");
  add_common(cmd_mul, &c);
  cmd_mul->add_option("x", arg1, "")->required();
  cmd_mul->add_option("y", arg2, "")->required();

  auto* cmd_inv = app.add_subcommand("inv", "invert an element");
  add_common(cmd_inv, &c);
  cmd_inv->add_option("element", arg1, "");

  auto* cmd_ab = app.add_subcommand("abelianize", "b-caret count mod n");
  add_common(cmd_ab, &c);
  cmd_ab->add_option("element", arg1, "");

  auto* cmd_cbar = app.add_subcommand("cbar", "boundary colour-word invariants");
  add_common(cmd_cbar, &c);
  cmd_cbar->add_option("element", arg1, "");

  auto* cmd_germ = app.add_subcommand("germ", "germ pair at 0, or classify a point");
  add_common(cmd_germ, &c);
  cmd_germ->add_option("arg", arg1, "element, point u(p), or rational p/q");

  auto* cmd_semi = app.add_subcommand("seminormal", "a-tree denominator, good numerator");
  add_common(cmd_semi, &c);
  cmd_semi->add_option("element", arg1, "");

  auto* cmd_grow = app.add_subcommand("grow-a", "grow a tree to an all-a tree");
  add_common(cmd_grow, &c, false);
  cmd_grow->add_option("tree", arg1, "")->required();

  auto* cmd_graph = app.add_subcommand("graph", "piecewise-affine circle graph");
  add_common(cmd_graph, &c);
  cmd_graph->add_option("element", arg1, "");
  cmd_graph->add_option("--depth", depth, "cone-splitting budget");
  cmd_graph->add_option("--out", out_path, "output path base");
  cmd_graph->add_option("--format", format, "csv, svg or both");

  auto* cmd_free = app.add_subcommand("free-words", "check free-subgroup words");
  cmd_free->add_option("--n", c.n, "skein parameter, >= 3")->required();
  cmd_free->add_option("--len", len, "maximum word length");

  auto* cmd_self = app.add_subcommand("selftest", "run the acceptance suite");
  cmd_self->add_option("--seed", seed, "randomized-suite seed");

  CLI11_PARSE(app, argc, argv);

  if (cmd_eval->parsed()) {
    GroupElement g = load_element(c, arg1);
    std::cout << format_point(canonical_action(g, parse_point(arg2))) << "\n";
  } else if (cmd_equal->parsed()) {
    SkeinContext ctx(c.n);
    GroupElement x = parse_element(arg1, ctx, requested_type(c));
    GroupElement y = parse_element(arg2, ctx, requested_type(c));
    std::cout << (equals(x, y) ? "true" : "false") << "\n";
  } else if (cmd_ident->parsed()) {
    std::cout << (is_identity(load_element(c, arg1)) ? "true" : "false") << "\n";
  } else if (cmd_mul->parsed()) {
    SkeinContext ctx(c.n);
    GroupElement x = parse_element(arg1, ctx, requested_type(c));
    GroupElement y = parse_element(arg2, ctx, requested_type(c));
    std::cout << format_element(multiply(x, y)) << "\n";
  } else if (cmd_inv->parsed()) {
    std::cout << format_element(inverse(load_element(c, arg1))) << "\n";
  } else if (cmd_ab->parsed()) {
    GroupElement g = load_element(c, arg1);
    std::cout << abelianise(g) << " (mod " << c.n << ")\n";
  } else if (cmd_cbar->parsed()) {
    GroupElement g = load_element(c, arg1);
    std::cout << "c+ = " << format_gamma_plus(c_bar_plus(g)) << "\n";
    std::cout << "c- = " << c_bar_minus(g) << "\n";
  } else if (cmd_germ->parsed()) {
    std::string text = element_text(c, arg1);
    if (text.find('[') != std::string::npos) {
      SkeinContext ctx(c.n);
      GermAtZero g = germ_at_zero(parse_element(text, ctx, requested_type(c)));
      std::cout << "(" << format_gamma_plus(g.plus) << ", " << g.minus << ")\n";
    } else if (text.find('/') != std::string::npos) {
      auto slash = text.find('/');
      Rational x(boost::multiprecision::cpp_int(text.substr(0, slash)),
                 boost::multiprecision::cpp_int(text.substr(slash + 1)));
      std::cout << germ_class_name(germ_classify(x)) << "\n";
    } else {
      std::cout << germ_class_name(germ_classify(parse_point(text))) << "\n";
    }
  } else if (cmd_semi->parsed()) {
    std::cout << format_element(seminormal_form(load_element(c, arg1))) << "\n";
  } else if (cmd_grow->parsed()) {
    SkeinContext ctx(c.n);
    GrowthResult g = grow_to_a_tree(ctx, parse_tree(arg1));
    std::cout << format_tree(g.tree) << "\n" << format_trace(g.trace);
  } else if (cmd_graph->parsed()) {
    GroupElement g = load_element(c, arg1);
    PiecewiseGraph ph = render(g, depth);
    if (format != "csv" && format != "svg" && format != "both")
      throw DomainError("--format must be csv, svg or both");
    if (out_path.empty()) {
      if (format != "csv") throw DomainError("--out is required for svg output");
      std::cout << graph_csv(ph);
    } else {
      if (format != "svg") {
        std::ofstream f(out_path + ".csv");
        f << graph_csv(ph);
      }
      if (format != "csv") {
        std::ofstream f(out_path + ".svg");
        f << graph_svg(ph);
      }
    }
  } else if (cmd_free->parsed()) {
    SkeinContext ctx(c.n);
    std::vector<GroupElement> letters;
    for (int i = 1; i < ctx.n; ++i) {
      letters.push_back(free_generator(ctx, i));
      letters.push_back(inverse(letters.back()));
    }
    long words = 0, hits = 0;
    auto dfs = [&](auto&& self, const GroupElement& prod, int last, int l) -> void {
      if (l > 0) {
        ++words;
        if (is_identity(prod)) ++hits;
      }
      if (l >= len) return;
      for (int j = 0; j < static_cast<int>(letters.size()); ++j) {
        if (last >= 0 && j == (last ^ 1)) continue;
        self(self, l == 0 ? letters[static_cast<std::size_t>(j)]
                          : multiply(prod, letters[static_cast<std::size_t>(j)]),
             j, l + 1);
      }
    };
    dfs(dfs, GroupElement::identity(ctx), -1, 0);
    std::cout << "checked " << words << " reduced words up to length " << len
              << ", identity hits: " << hits << "\n";
  } else if (cmd_self->parsed()) {
    bool all = true;
    for (const CriterionResult& r : run_acceptance(seed)) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail
                << "\n";
      all = all && r.pass;
    }
    return all ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fsg::ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const fsg::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
