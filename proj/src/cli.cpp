#include "ultra/cli.hpp"

#include "ultra/brute_force.hpp"
#include "ultra/funcspace.hpp"
#include "ultra/generate.hpp"
#include "ultra/isometry.hpp"
#include "ultra/space_io.hpp"
#include "ultra/twostruct.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>

namespace ultra::cli {

namespace {

std::string join_names(const Space& s, const PointSet& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) out += (i ? ", " : "") + s.name(members[i]);
  return out + "}";
}

std::string set_str(const SpectrumSet& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + "}";
}

const char* verdict(bool b) { return b ? "true" : "false"; }

// Prints a tree given as (members, label, children) callbacks, depth first.
void print_tree(std::ostream& out, const Space& s, std::size_t node, int depth,
                const std::function<const PointSet&(std::size_t)>& members,
                const std::function<const Rational&(std::size_t)>& label,
                const std::function<const std::vector<std::size_t>&(std::size_t)>& children) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << label(node) << " " << join_names(s, members(node)) << "\n";
  for (std::size_t c : children(node)) print_tree(out, s, c, depth + 1, members, label, children);
}

PartialMap parse_map(const Space& s, const std::string& text) {
  PartialMap m;
  if (text.empty()) return m;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "expected source:target in \"" + item + "\"");
    m.emplace_back(s.index_of(item.substr(0, colon)), s.index_of(item.substr(colon + 1)));
    start = end + 1;
  }
  return m;
}

SpectrumSet parse_pool(const std::string& text) {
  SpectrumSet pool;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    pool.push_back(Rational::parse(std::string_view(text).substr(start, end - start)));
    start = end + 1;
  }
  return pool;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Space s = load_space(path);
  out << "valid: " << s.size() << " points\n";
  return exit_true;
}

int cmd_info(const std::string& path, std::ostream& out) {
  const Analysis an(load_space(path));
  const Space& s = an.space();
  const auto seq = degree_sequence(s, an.nerve());
  out << "points: " << s.size() << "\n";
  out << "spectrum: " << set_str(spectrum(s)) << "\n";
  out << "multispectrum: {";
  const auto ms = multispectrum(s);
  for (std::size_t i = 0; i < ms.size(); ++i) out << (i ? ", " : "") << set_str(ms[i]);
  out << "}\n";
  out << "degree sequence: {";
  bool first = true;
  for (const auto& [r, k] : seq.per_radius) {
    out << (first ? "" : ", ") << r << ": " << k;
    first = false;
  }
  out << "}\n";
  out << "nerve nodes: " << an.nerve().size() << "\n";
  return exit_true;
}

int cmd_nerve(const std::string& path, bool json, std::ostream& out) {
  const Space s = load_space(path);
  const NerveTree nerve = build_nerve(s);
  if (json) {
    auto doc = space_to_json(s);
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& node : nerve.nodes()) {
      nlohmann::ordered_json j;
      std::vector<std::string> names;
      for (PointIndex p : node.members) names.push_back(s.name(p));
      j["members"] = names;
      j["diameter"] = node.diameter.str();
      j["parent"] = node.parent ? nlohmann::ordered_json(*node.parent) : nlohmann::ordered_json(nullptr);
      j["children"] = node.children;
      nodes.push_back(std::move(j));
    }
    doc["nodes"] = std::move(nodes);
    out << doc.dump() << "\n";
    return exit_true;
  }
  print_tree(
      out, s, nerve.root(), 0, [&](std::size_t i) -> const PointSet& { return nerve.node(i).members; },
      [&](std::size_t i) -> const Rational& { return nerve.node(i).diameter; },
      [&](std::size_t i) -> const std::vector<std::size_t>& { return nerve.node(i).children; });
  return exit_true;
}

struct CheckFlags {
  bool homogeneous = false, spec_homogeneous = false, transitive = false;
  bool condition_a = false, condition_b = false, property_h = false, brute_force = false;
};

int cmd_check(const std::string& path, CheckFlags f, std::ostream& out) {
  const Analysis an(load_space(path));
  if (!(f.homogeneous || f.spec_homogeneous || f.transitive || f.condition_a || f.condition_b || f.property_h))
    f.homogeneous = f.spec_homogeneous = f.transitive = f.condition_a = f.condition_b = f.property_h = true;
  bool all = true;
  auto report = [&](const char* name, bool value) {
    out << name << ": " << verdict(value) << "\n";
    all = all && value;
  };
  if (f.homogeneous) {
    const bool v = is_homogeneous(an);
    if (f.brute_force && is_homogeneous_brute_force(an) != v) throw std::logic_error("brute force disagrees");
    report("homogeneous", v);
  }
  if (f.spec_homogeneous) {
    const bool v = is_spec_homogeneous(an);
    if (f.brute_force && is_spec_homogeneous_brute_force(an) != v) throw std::logic_error("brute force disagrees");
    report("spec-homogeneous", v);
  }
  if (f.transitive) {
    const bool v = is_transitive(an);
    if (f.brute_force && is_transitive_brute_force(an.space()) != v) throw std::logic_error("brute force disagrees");
    report("transitive", v);
  }
  if (f.condition_a) report("condition A", check_condition_A(an));
  if (f.condition_b) report("condition B", check_condition_B(an));
  if (f.property_h) {
    const PropertyH h = check_property_h(an);
    report("h1", h.h1);
    report("h2", h.h2);
  }
  return all ? exit_true : exit_false;
}

int cmd_extend(const std::string& path, const std::string& map, std::ostream& out) {
  const Analysis an(load_space(path));
  const Space& s = an.space();
  const auto f = extend_isometry(an, parse_map(s, map));
  out << "extends: " << verdict(f.has_value()) << "\n";
  if (!f) return exit_false;
  for (PointIndex x = 0; x < s.size(); ++x) out << s.name(x) << " → " << s.name((*f)[x]) << "\n";
  return exit_true;
}

int cmd_embed(const std::string& path, std::ostream& out) {
  const Space s = load_space(path);
  const Embedding e = embed_space(s);
  for (PointIndex x = 0; x < s.size(); ++x) out << s.name(x) << " → " << e.image[x].str() << "\n";
  out << "degree function: " << e.df->str() << "\n";
  return exit_true;
}

int cmd_isometric(const std::string& a_path, const std::string& b_path, std::ostream& out) {
  const Space a = load_space(a_path);
  const Space b = load_space(b_path);
  const auto f = isometric(a, b);
  out << "isometric: " << verdict(f.has_value()) << "\n";
  if (!f) return exit_false;
  for (PointIndex x = 0; x < a.size(); ++x) out << a.name(x) << " → " << b.name((*f)[x]) << "\n";
  return exit_true;
}

int cmd_decompose(const std::string& path, bool verify, std::ostream& out) {
  const Space s = load_space(path);
  const DecompositionTree tree = decomposition_tree(from_space(s));
  print_tree(
      out, s, 0, 0, [&](std::size_t i) -> const PointSet& { return tree.nodes[i].members; },
      [&](std::size_t i) -> const Rational& { return tree.nodes[i].label; },
      [&](std::size_t i) -> const std::vector<std::size_t>& { return tree.nodes[i].children; });
  if (!verify) return exit_true;
  const bool same = same_tree(tree, build_nerve(s));
  out << "equals nerve: " << verdict(same) << "\n";
  return same ? exit_true : exit_false;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ultrametric spaces with exact rational distances", "ultra"};
  app.require_subcommand(1);

  std::string path, path_b, map, spectrum_text, pool_text = "1";
  bool json = false, verify_nerve = false;
  int depth = 0;
  std::size_t points = 1;
  std::uint64_t seed = 0;
  CheckFlags flags;

  auto* validate = app.add_subcommand("validate", "Check a space file");
  validate->add_option("file", path, "space file")->required();
  auto* info = app.add_subcommand("info", "Spectrum, multispectrum and degree sequence");
  info->add_option("file", path, "space file")->required();
  auto* nerve = app.add_subcommand("nerve", "Print the nerve tree");
  nerve->add_option("file", path, "space file")->required();
  nerve->add_flag("--json", json, "machine-readable output");
  auto* check = app.add_subcommand("check", "Decide structural properties (all when no flag is given)");
  check->add_option("file", path, "space file")->required();
  check->add_flag("--homogeneous", flags.homogeneous);
  check->add_flag("--spec-homogeneous", flags.spec_homogeneous);
  check->add_flag("--transitive", flags.transitive);
  check->add_flag("--condition-a", flags.condition_a);
  check->add_flag("--condition-b", flags.condition_b);
  check->add_flag("--property-h", flags.property_h);
  check->add_flag("--brute-force", flags.brute_force, "also run the exhaustive deciders (small spaces only)");
  auto* extend = app.add_subcommand("extend", "Extend a partial isometry to the whole space");
  extend->add_option("file", path, "space file")->required();
  extend->add_option("--map", map, "pairs such as \"a:b,c:d\"")->required();
  auto* embed = app.add_subcommand("embed", "Embed into the function space");
  embed->add_option("file", path, "space file")->required();
  auto* iso = app.add_subcommand("isometric", "Test two spaces for isometry");
  iso->add_option("first", path, "space file")->required();
  iso->add_option("second", path_b, "space file")->required();
  auto* decompose = app.add_subcommand("decompose", "Print the decomposition tree");
  decompose->add_option("file", path, "space file")->required();
  decompose->add_flag("--verify-nerve", verify_nerve, "compare with the nerve");
  auto* gen = app.add_subcommand("gen", "Generate a space file");
  gen->require_subcommand(1);
  auto* cantor = gen->add_subcommand("cantor", "All n-bit strings");
  cantor->add_option("--depth", depth, "string length, 1 to 12")->required();
  auto* product = gen->add_subcommand("product", "Full function-space product");
  product->add_option("--spectrum", spectrum_text, "radius:count pairs such as \"1/2:2,1:3\"")->required();
  auto* random = gen->add_subcommand("random", "Random dendrogram");
  random->add_option("--points", points, "number of points")->required();
  random->add_option("--seed", seed, "generator seed")->required();
  random->add_option("--pool", pool_text, "distance values such as \"1/2,1\"");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_true : exit_error;
  }

  try {
    if (*validate) return cmd_validate(path, out);
    if (*info) return cmd_info(path, out);
    if (*nerve) return cmd_nerve(path, json, out);
    if (*check) return cmd_check(path, flags, out);
    if (*extend) return cmd_extend(path, map, out);
    if (*embed) return cmd_embed(path, out);
    if (*iso) return cmd_isometric(path, path_b, out);
    if (*decompose) return cmd_decompose(path, verify_nerve, out);
    if (*cantor) out << serialize_space(gen_cantor(depth));
    if (*product) out << serialize_space(materialize_product(DegreeFunction::parse(spectrum_text)).space);
    if (*random) out << serialize_space(gen_random(points, seed, parse_pool(pool_text)));
    return exit_true;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_error;
  }
}

}  // namespace ultra::cli
