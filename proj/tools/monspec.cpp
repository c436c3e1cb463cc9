// monspec: prime spectra of finite and finitely presented commutative monoids.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monspec/congruence.hpp"
#include "monspec/monoid_io.hpp"
#include "monspec/presentation.hpp"
#include "monspec/spectrum.hpp"
#include "monspec/topology.hpp"
#include "monspec/verify.hpp"

namespace {

using namespace monspec;

enum class Exit { kOk = 0, kInput = 1, kIntegrity = 2 };

enum class InputKind { kAuto, kTable, kPresentation };

struct Input {
  bool is_table = true;
  FiniteMonoid monoid;
  Presentation presentation;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Input load(const std::string& path, InputKind kind) {
  if (kind == InputKind::kAuto) {
    if (ends_with(path, ".mon")) {
      kind = InputKind::kTable;
    } else if (ends_with(path, ".pres")) {
      kind = InputKind::kPresentation;
    } else {
      throw InputError("cannot infer input kind of " + path + "; use --kind table|pres");
    }
  }
  const auto text = read_file(path);
  Input in;
  in.is_table = kind == InputKind::kTable;
  if (in.is_table) {
    in.monoid = parse_monoid_table(text);
  } else {
    in.presentation = parse_presentation(text);
  }
  return in;
}

// Idempotent reflection of either input kind, with the names used in output.
JoinSemilattice reflection_of(const Input& in, std::size_t cap) {
  if (in.is_table) return sl_reflection(in.monoid).first;
  return sl_of_presentation(in.presentation, cap).semilattice;
}

struct SpecRoute {
  std::string name;
  Spectrum spectrum;
};

Exit cmd_spec(const Input& in, const std::vector<std::string>& via, std::size_t cap, bool mutate, bool dot) {
  std::vector<std::string> routes;
  for (const auto& v : via) {
    if (v == "all") {
      routes = {"brute", "hom", "alpha"};
      break;
    }
    routes.push_back(v);
  }
  std::vector<SpecRoute> results;
  for (const auto& r : routes) {
    Spectrum s;
    if (in.is_table) {
      if (r == "brute") s = primes_bruteforce(mutate ? mutate_table(in.monoid) : in.monoid, cap);
      if (r == "hom") s = spec_via_homs(in.monoid, cap);
      if (r == "alpha") s = spec_monoid(in.monoid);
    } else {
      if (r == "brute") s = spec_presentation_bruteforce(in.presentation, cap);
      if (r == "hom") s = spec_presentation_homs(in.presentation, cap);
      if (r == "alpha") s = spec_presentation(in.presentation, cap);
    }
    results.push_back({r, std::move(s)});
  }

  bool agree = true;
  for (const auto& r : results) agree = agree && r.spectrum == results.front().spectrum;

  if (dot) {
    std::cout << results.front().spectrum.to_dot();
  } else {
    for (const auto& r : results) {
      std::cout << "via " << r.name << ": " << r.spectrum.size()
                << (r.spectrum.size() == 1 ? " prime\n" : " primes\n");
      for (const auto& p : r.spectrum.rendered_points()) std::cout << "  " << p << "\n";
    }
    if (results.size() > 1) std::cout << (agree ? "routes agree\n" : "routes disagree\n");
  }
  if (!agree) {
    std::cerr << "error: spectrum routes disagree\n";
    return Exit::kIntegrity;
  }
  return Exit::kOk;
}

Exit cmd_sl(const Input& in, std::size_t cap, bool hasse) {
  const auto l = reflection_of(in, cap);
  if (hasse) {
    std::cout << hasse_dot(l);
    return Exit::kOk;
  }
  std::cout << "elements: " << l.size() << "\n";
  if (in.is_table) {
    const auto q = sl_reflection(in.monoid).second;
    for (Elem x = 0; x < in.monoid.size(); ++x) {
      std::cout << "  " << in.monoid.name(x) << " -> " << l.names()[q(x)] << "\n";
    }
  } else {
    const auto ps = sl_of_presentation(in.presentation, cap);
    for (std::size_t g = 0; g < in.presentation.rank(); ++g) {
      std::cout << "  " << in.presentation.generators[g] << " -> " << l.names()[ps.generator_images[g]] << "\n";
    }
  }
  std::cout << "covers:\n";
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = 0; b < l.size(); ++b) {
      if (a == b || !l.leq(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < l.size() && cover; ++c) {
        if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) cover = false;
      }
      if (cover) std::cout << "  " << l.names()[a] << " < " << l.names()[b] << "\n";
    }
  }
  return Exit::kOk;
}

Exit cmd_adjoint(const std::string& source_path, const std::string& target_path, const std::string& images,
                 bool left, bool lenient) {
  const auto src = JoinSemilattice::from_monoid(parse_monoid_table(read_file(source_path)));
  const auto tgt = JoinSemilattice::from_monoid(parse_monoid_table(read_file(target_path)));
  std::istringstream words(images);
  std::vector<Elem> img;
  for (std::string w; words >> w;) {
    const auto e = tgt.monoid().find(w);
    if (!e) throw InputError("unknown target element '" + w + "'");
    img.push_back(*e);
  }
  if (img.size() != src.size()) {
    throw InputError("expected " + std::to_string(src.size()) + " images, got " + std::to_string(img.size()));
  }
  const MonotoneMap f{src, tgt, std::move(img)};
  if (!is_monotone(f)) throw InputError("map is not monotone");
  const auto g = left ? left_adjoint(f, !lenient) : right_adjoint(f, !lenient);
  std::cout << (left ? "left adjoint:\n" : "right adjoint:\n");
  for (Elem y = 0; y < tgt.size(); ++y) {
    std::cout << "  " << tgt.names()[y] << " -> " << src.names()[g(y)] << "\n";
  }
  const bool ok = left ? check_adjunction(g, f) : check_adjunction(f, g);
  std::cout << "adjunction " << (ok ? "holds" : "fails") << "\n";
  if (!left) std::cout << "preserves meets: " << (preserves_meets(g) ? "yes" : "no") << "\n";
  return ok ? Exit::kOk : Exit::kIntegrity;
}

Exit cmd_topology(const Input& in, std::size_t cap) {
  Spectrum s;
  std::vector<std::string> element_names;
  std::vector<ElementSet> d;
  if (in.is_table) {
    s = spec_monoid(in.monoid);
    element_names = in.monoid.names();
    for (Elem a = 0; a < in.monoid.size(); ++a) {
      ElementSet da(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s.point(i).contains(a)) da.insert(static_cast<Elem>(i));
      }
      d.push_back(da);
    }
  } else {
    s = spec_presentation(in.presentation, cap);
    element_names = in.presentation.generators;
    for (Elem g = 0; g < in.presentation.rank(); ++g) {
      ElementSet dg(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s.point(i).contains(g)) dg.insert(static_cast<Elem>(i));
      }
      d.push_back(dg);
    }
  }
  const auto labels = s.rendered_points();
  std::cout << "points: " << s.size() << "\n";
  for (std::size_t i = 0; i < s.size(); ++i) std::cout << "  p" << i << " = " << labels[i] << "\n";
  std::vector<std::string> short_names;
  for (std::size_t i = 0; i < s.size(); ++i) short_names.push_back("p" + std::to_string(i));
  std::cout << "basis:\n";
  for (std::size_t a = 0; a < d.size(); ++a) {
    std::cout << "  D(" << element_names[a] << ") = " << d[a].to_string(short_names) << "\n";
  }
  const auto t = generate_topology(s.size(), d);
  std::cout << "opens: " << t.opens().size() << "\n";
  std::istringstream lines(t.to_text(short_names));
  for (std::string line; std::getline(lines, line);) std::cout << "  " << line << "\n";
  return Exit::kOk;
}

Exit cmd_verify(std::uint64_t seed, bool mutate) {
  VerifyOptions options;
  options.corpus.seed = seed;
  options.mutate = mutate;
  const auto report = run_verify(options);
  std::cout << report.to_text();
  return report.all_passed() ? Exit::kOk : Exit::kIntegrity;
}

Exit cmd_dot(const Input& in, std::size_t cap, bool hasse) {
  if (hasse) {
    std::cout << hasse_dot(reflection_of(in, cap), "semilattice");
  } else {
    std::cout << (in.is_table ? spec_monoid(in.monoid) : spec_presentation(in.presentation, cap)).to_dot();
  }
  return Exit::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime spectra of finite and finitely presented commutative monoids"};
  app.require_subcommand(1);

  std::string input;
  std::string kind_name = "auto";
  std::vector<std::string> via{"alpha"};
  std::size_t cap = 0;
  std::uint64_t seed = 1;
  bool dot = false;
  bool hasse = false;
  bool mutate = false;
  bool left = false;
  bool lenient = false;
  std::string target;
  std::string images;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Table (.mon) or presentation (.pres); '-' reads stdin")->required();
    sub->add_option("--kind", kind_name, "Input kind override")
        ->check(CLI::IsMember({"auto", "table", "pres"}));
    sub->add_option("--cap", cap, "Element or generator limit")->check(CLI::PositiveNumber);
  };

  auto* spec = app.add_subcommand("spec", "List the prime ideals");
  add_input(spec);
  spec->add_option("--via", via, "Routes: brute, hom, alpha, all")
      ->delimiter(',')
      ->check(CLI::IsMember({"brute", "hom", "alpha", "all"}));
  spec->add_flag("--dot", dot, "Print the inclusion order as DOT");
  spec->add_flag("--mutate", mutate, "Corrupt one table entry for the brute route (testing)");

  auto* sl = app.add_subcommand("sl", "Idempotent reflection");
  add_input(sl);
  sl->add_flag("--hasse", hasse, "Print the Hasse diagram as DOT");

  auto* adjoint = app.add_subcommand("adjoint", "Adjoint of a map between semilattice tables");
  adjoint->add_option("source", input, "Source semilattice (.mon)")->required();
  adjoint->add_option("target", target, "Target semilattice (.mon)")->required();
  adjoint->add_option("--images", images, "Target element names, one per source element")->required();
  adjoint->add_flag("--left", left, "Left adjoint instead of right");
  adjoint->add_flag("--lenient", lenient, "Skip the join/meet preservation precondition");

  auto* topology = app.add_subcommand("topology", "Open sets of the spectrum");
  add_input(topology);

  auto* verify = app.add_subcommand("verify", "Run the property suites on a seeded corpus");
  verify->add_option("--seed", seed, "Corpus seed");
  verify->add_flag("--mutate", mutate, "Corrupt one table entry per monoid for the brute route");

  auto* dot_cmd = app.add_subcommand("dot", "DOT of the spectrum ordered by inclusion");
  add_input(dot_cmd);
  dot_cmd->add_flag("--hasse", hasse, "Hasse diagram of the idempotent reflection instead");

  CLI11_PARSE(app, argc, argv);

  const InputKind kind = kind_name == "table" ? InputKind::kTable
                         : kind_name == "pres" ? InputKind::kPresentation
                                               : InputKind::kAuto;
  Exit code = Exit::kOk;
  try {
    if (verify->parsed()) {
      code = cmd_verify(seed, mutate);
    } else if (adjoint->parsed()) {
      code = cmd_adjoint(input, target, images, left, lenient);
    } else {
      const auto in = load(input, kind);
      const std::size_t limit = cap != 0 ? cap : (in.is_table ? kDefaultSubsetCap : kDefaultGeneratorCap);
      if (spec->parsed()) code = cmd_spec(in, via, limit, mutate, dot);
      if (sl->parsed()) code = cmd_sl(in, limit, hasse);
      if (topology->parsed()) code = cmd_topology(in, limit);
      if (dot_cmd->parsed()) code = cmd_dot(in, limit, hasse);
    }
  } catch (const IntegrityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = Exit::kIntegrity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = Exit::kInput;
  }
  return static_cast<int>(code);
}
