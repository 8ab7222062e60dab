// chowlab: enumeration dumps and verification runs from the command line.
//
//   chowlab codes --n N [--extended]
//   chowlab fy --matroid SPEC [--augmented] [--degree D]
//   chowlab bijection (--n N [--augmented] [--degree D] | --n N --monomial TEXT | --n N --code TEXT)
//   chowlab fans --matroid SPEC [--augmented] [--lattice]
//   chowlab verify --suite NAME [--n N] [--matroid SPEC]
//
// Every command takes --format tsv|json and --force. Exit status: 0 success,
// 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chowlab/chowlab.hpp"

using namespace chowlab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxCodeLength = 8;
constexpr int kMaxOracleFlats = 16;

struct Options {
  int n = 0;
  bool extended = false;
  std::string format = "tsv";
  bool force = false;
  std::string matroid;
  std::optional<int> degree;
  std::string monomial;
  std::string code;
  std::string suite;
  bool lattice = false;
};

bool json_out(const Options& o) { return o.format == "json"; }

void require_n(const Options& o, int cap) {
  if (o.n < 1) throw InputError("--n must be >= 1");
  if (o.n > cap && !o.force) {
    throw InputError("--n " + std::to_string(o.n) + " exceeds the limit " + std::to_string(cap) + " (use --force)");
  }
  if (o.n > kMaxGroundSize) throw InputError("--n exceeds the ground-set limit " + std::to_string(kMaxGroundSize));
}

Matroid load_matroid(const Options& o) {
  if (o.matroid.empty()) throw InputError("--matroid is required");
  return parse_matroid_spec(o.matroid);
}

std::string join(const std::vector<std::int64_t>& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

template <bool E>
int emit_codes(const std::map<int, std::vector<BasicCode<E>>>& by_index, const Options& o) {
  if (json_out(o)) {
    json counts = json::array();
    json codes = json::array();
    for (const auto& [j, v] : by_index) {
      counts.push_back({{"index", j}, {"count", v.size()}});
      for (const auto& c : v) {
        json e = to_json(c);
        e["index"] = j;
        e["text"] = to_text(c);
        codes.push_back(e);
      }
    }
    std::cout << json{{"n", o.n}, {"extended", E}, {"counts", counts}, {"codes", codes}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "index\tcode\n";
  std::vector<std::int64_t> counts;
  for (const auto& [j, v] : by_index) {
    for (const auto& c : v) std::cout << j << '\t' << to_text(c) << '\n';
    counts.push_back(static_cast<std::int64_t>(v.size()));
  }
  std::cout << "# counts by index from " << by_index.begin()->first << ": " << join(counts) << "\n";
  return 0;
}

int cmd_codes(const Options& o) {
  require_n(o, kMaxCodeLength);
  return o.extended ? emit_codes(enumerate_extended_codes(o.n), o) : emit_codes(enumerate_codes(o.n), o);
}

int cmd_fy(const Options& o) {
  const Matroid m = load_matroid(o);
  const GradedBasis<Subset> b = o.extended ? aug_fy_basis(m) : fy_basis_matroid(m);
  const std::vector<std::int64_t> h = hilbert_series_fy(b);
  auto keep = [&](int d) { return !o.degree || *o.degree == d; };
  if (json_out(o)) {
    json degrees = json::array();
    for (const json& slice : to_json(b)) {
      if (keep(slice.at("degree").get<int>())) degrees.push_back(slice);
    }
    std::cout << json{{"augmented", o.extended}, {"basis", degrees}, {"hilbert", h}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "degree\tmonomial\n";
  for (const auto& [d, v] : b.by_degree) {
    if (!keep(d)) continue;
    for (const auto& u : v) std::cout << d << '\t' << to_string(u) << '\n';
  }
  std::cout << "# hilbert series: " << join(h) << "\n";
  return 0;
}

int cmd_bijection(const Options& o) {
  if (!o.monomial.empty() || !o.code.empty()) {
    require_n(o, kMaxGroundSize);
    std::string mono;
    std::string text;
    json code;
    if (!o.monomial.empty()) {
      const FYMonomial u = parse_monomial(o.monomial);
      mono = to_string(u);
      if (o.extended) {
        const ExtendedCode c = phi_tilde(o.n, u);
        text = to_text(c);
        code = to_json(c);
      } else {
        const Code c = phi(o.n, u);
        text = to_text(c);
        code = to_json(c);
      }
    } else {
      text = o.code;
      if (o.extended) {
        const ExtendedCode c = parse_code_text<true>(o.code);
        mono = to_string(phi_tilde_inv(o.n, c));
        code = to_json(c);
      } else {
        const Code c = parse_code_text<false>(o.code);
        mono = to_string(phi_inv(o.n, c));
        code = to_json(c);
      }
    }
    if (json_out(o)) {
      std::cout << json{{"monomial", mono}, {"code", text}, {"code_json", code}}.dump(2) << "\n";
    } else {
      std::cout << "monomial\tcode\n" << mono << '\t' << text << '\n';
    }
    return 0;
  }
  require_n(o, kMaxCodeLength);
  const Matroid b = make_boolean(o.n);
  const GradedBasis<Subset> basis = o.extended ? aug_fy_basis(b) : fy_basis_matroid(b);
  json rows = json::array();
  if (!json_out(o)) std::cout << "degree\tmonomial\tcode\n";
  for (const auto& [d, v] : basis.by_degree) {
    if (o.degree && *o.degree != d) continue;
    std::vector<FYMonomial> sorted = v;
    std::sort(sorted.begin(), sorted.end(), table_order);
    for (const auto& u : sorted) {
      const std::string text = o.extended ? to_text(phi_tilde(o.n, u)) : to_text(phi(o.n, u));
      if (json_out(o)) {
        rows.push_back({{"degree", d}, {"monomial", to_string(u)}, {"code", text}});
      } else {
        std::cout << d << '\t' << to_string(u) << '\t' << text << '\n';
      }
    }
  }
  if (json_out(o)) std::cout << json{{"n", o.n}, {"augmented", o.extended}, {"rows", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_fans(const Options& o) {
  const Matroid m = load_matroid(o);
  if (o.lattice) {
    std::cout << to_json(o.extended ? augmented_lattice(m) : lattice_of_flats(m)).dump(2) << "\n";
    return 0;
  }
  std::vector<std::int64_t> f;
  json cones = json::array();
  std::vector<std::string> lines;
  if (o.extended) {
    for (const AugmentedCone& c : aug_bergman_cones(m)) {
      cones.push_back(to_json(c));
      lines.push_back(cone_line(c.pair.flag, c.rays, &c.pair.independent));
    }
    f = f_vector(aug_bergman_complex(m));
  } else {
    for (const BergmanCone& c : bergman_cones(m)) {
      cones.push_back(to_json(c));
      lines.push_back(cone_line(c.flag, c.rays, nullptr));
    }
    f = f_vector(bergman_complex(m));
  }
  if (json_out(o)) {
    std::cout << json{{"augmented", o.extended}, {"cones", cones}, {"f_vector", f}}.dump(2) << "\n";
    return 0;
  }
  for (const std::string& l : lines) std::cout << l << '\n';
  std::cout << "# f-vector: " << join(f) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
    throw InputError("unknown suite '" + o.suite + "'");
  }
  const int n = o.n == 0 ? 4 : o.n;
  Options sized = o;
  sized.n = n;
  require_n(sized, kMaxCodeLength);
  std::vector<NamedMatroid> ms;
  if (!o.matroid.empty()) {
    Matroid m = load_matroid(o);
    const std::size_t nflats = flat_list(m).size();
    if (nflats > static_cast<std::size_t>(kMaxOracleFlats) && !o.force) {
      throw InputError("matroid has " + std::to_string(nflats) + " flats, above the limit " +
                       std::to_string(kMaxOracleFlats) + " (use --force)");
    }
    ms.push_back({o.matroid, std::move(m)});
  }
  const RunReport r = run_suite(o.suite, n, ms);
  std::size_t passed = 0;
  for (const Check& c : r.checks) passed += c.pass;
  if (json_out(o)) {
    json checks = json::array();
    for (const Check& c : r.checks) {
      checks.push_back({{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"expected", c.expected}, {"actual", c.actual}});
    }
    std::cout << json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}}.dump(2) << "\n";
  } else {
    std::cout << "suite\tcheck\tstatus\texpected\tactual\n";
    for (const Check& c : r.checks) {
      std::cout << r.suite << '\t' << c.name << '\t' << (c.pass ? "PASS" : "FAIL") << '\t' << c.expected << '\t'
                << c.actual << '\n';
    }
    std::cout << "# " << passed << "/" << r.checks.size() << " checks passed\n";
  }
  return r.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow rings of matroids, codes, and their bijections"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_flag("--force", o.force, "lift the size limits");
  };

  CLI::App* codes = app.add_subcommand("codes", "list codes of length n by index");
  codes->add_option("--n", o.n, "code length")->required();
  codes->add_flag("--extended", o.extended, "extended codes");
  common(codes);

  CLI::App* fy = app.add_subcommand("fy", "list an FY basis and its Hilbert series");
  fy->add_option("--matroid", o.matroid, "boolean:N, uniform:N,R, or a JSON file")->required();
  fy->add_flag("--augmented", o.extended, "augmented basis");
  fy->add_option("--degree", o.degree, "only this degree");
  common(fy);

  CLI::App* bij = app.add_subcommand("bijection", "monomial/code correspondence for B_n");
  bij->add_option("--n", o.n, "ground-set size")->required();
  bij->add_flag("--augmented", o.extended, "use the augmented basis and extended codes");
  bij->add_option("--degree", o.degree, "only this degree");
  auto* mono = bij->add_option("--monomial", o.monomial, "map one monomial, e.g. x_{14}x_{1247}^2");
  bij->add_option("--code", o.code, "map one code back, e.g. 11*22*")->excludes(mono);
  common(bij);

  CLI::App* fans = app.add_subcommand("fans", "cones of the Bergman or augmented Bergman fan");
  fans->add_option("--matroid", o.matroid, "boolean:N, uniform:N,R, or a JSON file")->required();
  fans->add_flag("--augmented", o.extended, "augmented Bergman fan");
  fans->add_flag("--lattice", o.lattice, "dump the lattice of flats (augmented lattice with --augmented) as JSON");
  common(fans);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "codes, fy, bijection, oracle, fans, frobenius, or all")->required();
  verify->add_option("--n", o.n, "size parameter (default 4)");
  verify->add_option("--matroid", o.matroid, "restrict matroid suites to this matroid");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (codes->parsed()) return cmd_codes(o);
    if (fy->parsed()) return cmd_fy(o);
    if (bij->parsed()) return cmd_bijection(o);
    if (fans->parsed()) return cmd_fans(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "chowlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "chowlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "chowlab: internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
