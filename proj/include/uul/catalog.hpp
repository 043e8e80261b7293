#pragma once

// Named builtin groups, the group file format and catalog directories.
//
// Group file:
//   # comment
//   name D8
//   degree 8
//   gen r (0 1 2 3)(4 7 6 5)
//   gen s (0 4)(1 5)(2 6)(3 7)
// The generator name after `gen` is optional.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "uul/builders.hpp"
#include "uul/error.hpp"
#include "uul/group.hpp"
#include "uul/isomorphism.hpp"
#include "uul/shape.hpp"
#include "uul/subgroup.hpp"

namespace uul {

/// Order census plus |Z|, |Phi|, |Omega|; stored for every fixed-name builtin.
struct GoldenInvariants {
  std::size_t order = 0;
  std::map<std::uint32_t, std::size_t> census;
  std::size_t center = 0;
  std::size_t frattini = 0;
  std::size_t omega = 0;
  bool operator==(const GoldenInvariants&) const = default;
};

inline GoldenInvariants golden_invariants(const FiniteGroup& g) {
  GoldenInvariants v;
  v.order = g.order();
  v.census = order_census(g);
  v.center = center(g).size();
  if (is_p_group(g)) {
    v.frattini = frattini_subgroup(g).size();
    v.omega = omega_subgroup(g).size();
  }
  return v;
}

namespace detail {

using Census = std::map<std::uint32_t, std::size_t>;

/// Expected invariants of the fixed-name builtins.
inline const std::map<std::string, GoldenInvariants>& golden_table() {
  static const std::map<std::string, GoldenInvariants> table = {
      {"modular16", {16, Census{{1, 1}, {2, 3}, {4, 4}, {8, 8}}, 4, 4, 4}},
      {"C4xC4", {16, Census{{1, 1}, {2, 3}, {4, 12}}, 16, 4, 4}},
      {"C4sdC4", {16, Census{{1, 1}, {2, 3}, {4, 12}}, 4, 4, 4}},
      {"C2xC2sdC4", {16, Census{{1, 1}, {2, 7}, {4, 8}}, 4, 4, 8}},
      {"C4cD8", {16, Census{{1, 1}, {2, 7}, {4, 8}}, 4, 2, 16}},
      {"D8xC2", {16, Census{{1, 1}, {2, 11}, {4, 4}}, 4, 2, 16}},
      {"Q8xC2", {16, Census{{1, 1}, {2, 3}, {4, 12}}, 4, 2, 4}},
      {"C4sdQ8", {32, Census{{1, 1}, {2, 3}, {4, 28}}, 4, 4, 4}},
      {"Q8xC4", {32, Census{{1, 1}, {2, 3}, {4, 28}}, 8, 4, 4}},
      {"H32", {32, Census{{1, 1}, {2, 3}, {4, 28}}, 4, 4, 4}},
      {"Q8xQ8", {64, Census{{1, 1}, {2, 3}, {4, 60}}, 4, 4, 4}},
      {"thm12_iv", {64, Census{{1, 1}, {2, 3}, {4, 60}}, 4, 4, 4}},
      {"H245", {64, Census{{1, 1}, {2, 3}, {4, 60}}, 4, 4, 4}},
      {"exponent9_27", {27, Census{{1, 1}, {3, 8}, {9, 18}}, 3, 3, 9}},
  };
  return table;
}

struct ParsedName {
  std::string base;
  std::vector<long long> params;
};

inline ParsedName parse_builtin_name(const std::string& text) {
  ParsedName out;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto open = s.find('(');
  if (open == std::string::npos) {
    out.base = s;
    return out;
  }
  if (s.back() != ')') throw error(errc::bad_params, "missing ')' in " + text);
  out.base = s.substr(0, open);
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.params.push_back(v);
    } catch (const std::exception&) {
      throw error(errc::bad_params, "parameter '" + item + "' of " + text + " is not an integer");
    }
  }
  return out;
}

inline void want_params(const ParsedName& n, std::size_t lo, std::size_t hi) {
  if (n.params.size() < lo || n.params.size() > hi)
    throw error(errc::bad_params, n.base + " takes " + std::to_string(lo) +
                                      (lo == hi ? "" : "-" + std::to_string(hi)) + " parameter(s)");
  for (long long v : n.params)
    if (v < 0) throw error(errc::bad_params, n.base + " parameters must be nonnegative");
}

inline std::size_t checked_size(long long v) {
  if (v <= 0 || v > 1 << 16) throw error(errc::bad_params, "parameter out of range");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Names accepted by builtin(); parametrized names show their parameters.
inline std::vector<std::string> builtin_names() {
  return {"cyclic(n)",        "elementary_abelian(k)",       "abelian(n1,n2,...)",  "dihedral(2n)",
          "quaternion(2^n)",  "semidihedral(2^n)",           "modular16",           "C4xC4",
          "C4sdC4",           "C4sdQ8",                      "H32",                 "H245",
          "Q8xC4",            "Q8xQ8",                       "thm12_iv",            "P(k)",
          "R(k)",             "extraspecial_D8central(m)",   "extraspecial_Q8central(m)",
          "heisenberg(p)",    "exponent9_27",                "metacyclic(m,s,t,r)", "C2xC2sdC4",
          "C4cD8",            "D8xC2",                       "Q8xC2"};
}

/// Builds a named group, e.g. "dihedral(8)", "P(2)", "H245", and checks it
/// against its expected order and, for fixed names, the stored invariants.
inline FiniteGroup builtin(const std::string& text) {
  using detail::checked_size;
  using detail::want_params;
  const detail::ParsedName n = detail::parse_builtin_name(text);
  const auto& b = n.base;
  const auto& p = n.params;
  auto param = [&](std::size_t i) { return p[i]; };

  FiniteGroup g;
  std::size_t expected = 0;
  std::function<bool(const FiniteGroup&)> shape;
  if (b == "cyclic") {
    want_params(n, 1, 1);
    expected = checked_size(param(0));
    g = cyclic_group(expected);
    shape = is_cyclic;
  } else if (b == "elementary_abelian") {
    want_params(n, 1, 1);
    if (param(0) > 10) throw error(errc::bad_params, "elementary_abelian rank must be at most 10");
    expected = std::size_t{1} << param(0);
    g = elementary_abelian_group(static_cast<std::size_t>(param(0)));
    shape = is_elementary_abelian_2;
  } else if (b == "abelian") {
    want_params(n, 1, 16);
    std::vector<std::size_t> f;
    expected = 1;
    for (long long v : p) {
      f.push_back(checked_size(v));
      expected *= f.back();
      if (expected > default_order_cap) throw error(errc::bad_params, "abelian group exceeds the order cap");
    }
    g = abelian_group(f);
    shape = is_abelian;
  } else if (b == "dihedral") {
    want_params(n, 1, 1);
    expected = checked_size(param(0));
    g = dihedral_group(expected);
    shape = is_dihedral;
  } else if (b == "quaternion") {
    want_params(n, 1, 1);
    expected = checked_size(param(0));
    g = quaternion_group(expected);
    shape = is_generalized_quaternion;
  } else if (b == "semidihedral") {
    want_params(n, 1, 1);
    expected = checked_size(param(0));
    g = semidihedral_group(expected);
    shape = is_semidihedral;
  } else if (b == "P" || b == "R") {
    want_params(n, 1, 1);
    const auto k = static_cast<unsigned>(std::min<long long>(param(0), 64));
    if (b == "P") {
      g = p_family(k);
      expected = std::size_t{1} << (k + 2);
    } else {
      g = r_family(k);
      expected = std::size_t{1} << (k + 3);
    }
  } else if (b == "extraspecial_D8central" || b == "extraspecial_Q8central") {
    want_params(n, b == "extraspecial_D8central" ? 1 : 0, 1);
    const long long m = p.empty() ? 1 : param(0);
    if (m < 1 || m > 4) throw error(errc::bad_params, b + " needs 1 <= m <= 4");
    g = extraspecial_group(static_cast<unsigned>(m), b == "extraspecial_Q8central");
    expected = std::size_t{1} << (2 * m + 1);
    shape = is_extraspecial;
  } else if (b == "heisenberg") {
    want_params(n, 1, 1);
    if (param(0) > 10) throw error(errc::bad_params, "heisenberg needs p^3 within the order cap");
    g = heisenberg_group(static_cast<unsigned>(param(0)));
    expected = static_cast<std::size_t>(param(0) * param(0) * param(0));
  } else if (b == "metacyclic") {
    if (p.size() != 4) throw error(errc::bad_params, "metacyclic takes 4 parameters (m,s,t,r)");
    g = metacyclic_group(p[0], p[1], p[2], p[3]);
    expected = static_cast<std::size_t>(p[0] * p[1]);
  } else {
    want_params(n, 0, 0);
    static const std::map<std::string, std::function<FiniteGroup()>> fixed = {
        {"modular16", modular16},   {"C4xC4", [] { return abelian_group({4, 4}, "C4xC4"); }},
        {"C4sdC4", c4_sd_c4},       {"C4sdQ8", c4_sd_q8},
        {"H32", h32},               {"H245", h245},
        {"Q8xC4", q8_x_c4},         {"Q8xQ8", q8_x_q8},
        {"thm12_iv", thm12_iv},     {"exponent9_27", exponent9_order27},
        {"C2xC2sdC4", c2c2_sd_c4},  {"C4cD8", c4_central_d8},
        {"D8xC2", d8_x_c2},         {"Q8xC2", q8_x_c2},
    };
    auto it = fixed.find(b);
    if (it == fixed.end()) throw error(errc::unknown_name, "no builtin group named '" + text + "'");
    g = it->second();
    const GoldenInvariants& want = detail::golden_table().at(b);
    expected = want.order;
    if (!(golden_invariants(g) == want))
      throw error(errc::implementation_mismatch, b + " does not match its stored invariants");
  }
  if (g.order() != expected)
    throw error(errc::implementation_mismatch, text + " has order " + std::to_string(g.order()) + ", expected " +
                                                   std::to_string(expected));
  if (shape && !shape(g)) throw error(errc::implementation_mismatch, text + " fails its shape check");
  return g.renamed(text);
}

// ---------------------------------------------------------------------------
// Group files.

struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::string> generator_names;
};

inline GroupFile parse_group_file(std::istream& in, const std::string& source = "<input>") {
  GroupFile f;
  std::string line;
  std::size_t lineno = 0;
  bool have_name = false, have_degree = false;
  auto fail = [&](const std::string& msg) -> error {
    return error(errc::parse_error, source + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    rest.erase(0, rest.find_first_not_of(" \t"));
    rest.erase(rest.find_last_not_of(" \t\r") + 1);
    if (key == "name") {
      if (have_name) throw fail("duplicate name line");
      if (rest.empty() || rest.find_first_of(" \t") != std::string::npos) throw fail("name must be one identifier");
      f.name = rest;
      have_name = true;
    } else if (key == "degree") {
      if (!have_name) throw fail("degree before name");
      if (have_degree) throw fail("duplicate degree line");
      try {
        std::size_t used = 0;
        long long d = std::stoll(rest, &used);
        if (used != rest.size() || d <= 0 || d > 1 << 16) throw std::invalid_argument(rest);
        f.degree = static_cast<std::size_t>(d);
      } catch (const std::exception&) {
        throw fail("degree must be a positive integer");
      }
      have_degree = true;
    } else if (key == "gen") {
      if (!have_degree) throw fail("gen before degree");
      std::string gname;
      std::string cycles = rest;
      if (!rest.empty() && rest[0] != '(') {
        const auto sp = rest.find_first_of(" \t");
        if (sp == std::string::npos) throw fail("generator has no cycles");
        gname = rest.substr(0, sp);
        cycles = rest.substr(sp + 1);
      }
      try {
        f.generators.push_back(parse_cycles(cycles, f.degree));
      } catch (const error& e) {
        throw error(e.code(), source + ":" + std::to_string(lineno) + ": " + e.what());
      }
      f.generator_names.push_back(gname.empty() ? default_generator_name(f.generator_names.size()) : gname);
    } else {
      throw fail("unknown keyword '" + key + "'");
    }
  }
  if (!have_name) throw fail("missing name line");
  if (!have_degree) throw fail("missing degree line");
  return f;
}

inline FiniteGroup group_from_file(const GroupFile& f, std::size_t cap = default_order_cap) {
  return close_generators(f.degree, f.generators, f.generator_names, cap, f.name);
}

inline FiniteGroup load_group_file(const std::filesystem::path& path, std::size_t cap = default_order_cap) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open " + path.string());
  return group_from_file(parse_group_file(in, path.string()), cap);
}

/// Writes `g` in the group file format using its right-regular representation.
inline std::string format_group_file(const FiniteGroup& g, const std::string& comment = "") {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  std::string name = g.name();
  for (char& c : name)
    if (std::isspace(static_cast<unsigned char>(c))) c = '_';
  os << "name " << name << "\n";
  os << "degree " << g.order() << "\n";
  const auto perms = regular_generators(g);
  for (std::size_t i = 0; i < perms.size(); ++i)
    os << "gen " << g.generator_names()[i] << " " << format_cycles(perms[i]) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Catalog directories: catalog/order<N>/<name>.grp. A file named COMPLETE in
// a directory marks the stratum as complete.

struct CatalogEntry {
  std::string name;
  std::string source;  // "builtin" or a file path
  FiniteGroup group;
  std::vector<std::string> tags;
};

inline std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir,
                                              std::size_t cap = default_order_cap) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw error(errc::parse_error, dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".grp") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  const bool complete = fs::exists(dir / "COMPLETE");
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open " + path.string());
    GroupFile f = parse_group_file(in, path.string());
    if (!names.insert(f.name).second)
      throw error(errc::parse_error, path.string() + ": duplicate group name '" + f.name + "'");
    CatalogEntry entry{f.name, path.string(), group_from_file(f, cap), {}};
    entry.tags.push_back("order" + std::to_string(entry.group.order()));
    if (complete) entry.tags.push_back("complete-stratum");
    out.push_back(std::move(entry));
  }
  return out;
}

/// A group selector: an existing file path or a builtin name.
inline CatalogEntry resolve_group(const std::string& selector) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(selector, ec)) {
    FiniteGroup g = load_group_file(selector);
    std::string name = g.name();
    return {std::move(name), selector, std::move(g), {"file"}};
  }
  FiniteGroup g = builtin(selector);
  return {selector, "builtin", std::move(g), {"builtin"}};
}

}  // namespace uul
