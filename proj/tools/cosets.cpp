// cosets command line front end.
//
//   group-info <spec>                        order, degree, and class data
//   table <spec> --export F | --check F      write a table file, or validate
//                                            an external one and diff it
//   verify <spec> --normal .. --coset ..     run one theorem check on one
//          --thm a|b|c|2.2|lemma31           coset of a normal subgroup
//   search --max-order N | --specs ..        sweep groups for cosets lying
//                                            in at most two classes
//   reproduce-examples [--include-stretch]   the worked examples end to end
//
// Exit status: 0 every check passed, 1 a check failed, 2 usage or parse
// error.  Reports go to stdout, errors to stderr.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "cosets/reproduce.hpp"
#include "cosets/search.hpp"

namespace {

using namespace cosets;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// A class selector is a label ("4c"), an element order ("4"), or an
// order:size pair ("4:180").
struct ClassSelector {
  std::string label;
  unsigned order = 0;
  unsigned long long size = 0;  // 0 when only the order was given
};

ClassSelector parse_class_selector(const std::string& text) {
  ClassSelector sel;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string left = text.substr(0, colon), right = text.substr(colon + 1);
    if (!all_digits(left) || !all_digits(right))
      fail("bad class selector '" + text + "' (want a label, an order, or order:size)");
    sel.order = static_cast<unsigned>(std::stoul(left));
    sel.size = std::stoull(right);
  } else if (all_digits(text)) {
    sel.order = static_cast<unsigned>(std::stoul(text));
  } else {
    sel.label = text;
  }
  return sel;
}

std::string class_brief(const ClassData& cd, std::uint32_t k) {
  return cd.label(k) + " (order " + std::to_string(cd.order_of(k)) + ", size " +
         std::to_string(cd.size(k)) + ")";
}

// Resolves a selector against a candidate list, printing the whole list on
// a miss or a tie so the caller can pick an unambiguous form.
std::uint32_t resolve_class(const ClassData& cd, const std::vector<std::uint32_t>& candidates,
                            const std::string& text, const std::string& where) {
  ClassSelector sel = parse_class_selector(text);
  std::vector<std::uint32_t> hits;
  for (std::uint32_t k : candidates) {
    if (!sel.label.empty()) {
      if (cd.label(k) == sel.label) hits.push_back(k);
    } else if (cd.order_of(k) == sel.order && (sel.size == 0 || cd.size(k) == sel.size)) {
      hits.push_back(k);
    }
  }
  if (hits.size() == 1) return hits[0];
  std::string menu;
  for (std::uint32_t k : (hits.empty() ? candidates : hits)) {
    if (!menu.empty()) menu += ", ";
    menu += class_brief(cd, k);
  }
  if (hits.empty()) fail("no class " + where + " matches '" + text + "'; candidates: " + menu);
  fail("selector '" + text + "' is ambiguous " + where + ": " + menu);
}

// A normal subgroup can be named by its order, by its index in the group,
// or positionally as #k into the printed lattice.
std::size_t resolve_normal(const std::vector<NormalSubgroup>& lattice, const ClassData& cd,
                           const std::string& text, unsigned long long g_order) {
  auto menu = [&] {
    std::string out;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      if (!out.empty()) out += "; ";
      out += "#" + std::to_string(i) + " order " + std::to_string(lattice[i].order) + " classes " +
             detail::class_list(cd, lattice[i].classes);
    }
    return out;
  };
  if (text.size() > 1 && text[0] == '#' && all_digits(text.substr(1))) {
    std::size_t i = std::stoull(text.substr(1));
    if (i >= lattice.size())
      fail("--normal " + text + " is out of range; normal subgroups: " + menu());
    return i;
  }
  if (!all_digits(text))
    fail("bad --normal '" + text + "' (want an order, an index, or #position); normal subgroups: " +
         menu());
  unsigned long long v = std::stoull(text);
  std::vector<std::size_t> by_order, by_index;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice[i].order == v) by_order.push_back(i);
    if (v != 0 && g_order % v == 0 && lattice[i].order == g_order / v) by_index.push_back(i);
  }
  if (by_order.size() == 1) return by_order[0];
  if (by_order.size() > 1)
    fail("--normal " + text + " matches several subgroups by order; use #position: " + menu());
  if (by_index.size() == 1) return by_index[0];
  if (by_index.size() > 1)
    fail("--normal " + text + " matches several subgroups by index; use #position: " + menu());
  fail("--normal " + text + " matches nothing by order or index; normal subgroups: " + menu());
}

int emit(const AnalysisReport& rep, std::FILE* to = stdout) {
  std::fputs(serialize_report(rep).c_str(), to);
  return rep.pass() ? 0 : 1;
}

int cmd_group_info(const RunSettings& rs, const std::string& spec_text) {
  detail::ReportTimer timer(rs.timings);
  GroupSpec spec = GroupSpec::parse(spec_text);
  PermGroup g = make_group(spec);
  ClassData cd(g, rs.element_cap);
  AnalysisReport rep = base_report(rs, spec.str(), g.order());
  std::string sizes, orders, labels;
  for (std::uint32_t k = 0; k < cd.num_classes(); ++k) {
    if (k) {
      sizes += ", ";
      orders += ", ";
      labels += ", ";
    }
    sizes += std::to_string(cd.size(k));
    orders += std::to_string(cd.order_of(k));
    labels += cd.label(k);
  }
  rep.infos.emplace_back("degree", std::to_string(g.degree()));
  rep.infos.emplace_back("classes", std::to_string(cd.num_classes()));
  rep.infos.emplace_back("class sizes", "{" + sizes + "}");
  rep.infos.emplace_back("element orders", "{" + orders + "}");
  rep.infos.emplace_back("class labels", "{" + labels + "}");
  rep.infos.emplace_back("exponent", std::to_string(cd.exponent()));
  timer.stamp(rep);
  return emit(rep);
}

int cmd_table(const RunSettings& rs, const std::string& spec_text, const std::string& export_path,
              const std::string& check_path) {
  detail::ReportTimer timer(rs.timings);
  GroupSpec spec = GroupSpec::parse(spec_text);
  PermGroup g = make_group(spec);
  CharTable tab{ClassData(g, rs.element_cap)};
  AnalysisReport rep = base_report(rs, spec.str(), g.order());
  rep.table_hash = table_hash(tab);
  rep.infos.emplace_back("rows", std::to_string(tab.num_rows()));

  if (!export_path.empty()) {
    if (export_path == "-") {
      std::cout << write_table(tab, spec.str());
    } else {
      std::ofstream out(export_path, std::ios::binary);
      if (!out) fail("cannot open '" + export_path + "' for writing");
      out << write_table(tab, spec.str());
      out.flush();
      if (!out) fail("writing '" + export_path + "' failed");
    }
    rep.infos.emplace_back("exported to", export_path == "-" ? "stdout" : export_path);
  } else {
    std::ifstream in(check_path, std::ios::binary);
    if (!in) fail("cannot open '" + check_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    // A malformed file is a usage-level error and throws out of here; a
    // well-formed file with bad algebra becomes failing check lines.
    TableDocument doc = parse_table(buf.str());
    rep.infos.emplace_back("checked against", check_path);
    TheoremReport sec;
    sec.title = "external table check";
    detail::add_line(sec, "file parses in the table format", true,
                     std::to_string(doc.rows.size()) + " rows over " +
                         std::to_string(doc.labels.size()) + " classes for " + doc.group_name);
    bool valid = true;
    std::string why;
    try {
      validate_table(doc);
    } catch (const std::exception& e) {
      valid = false;
      why = e.what();
    }
    detail::add_line(sec, "orthogonality, degree, and power-map invariants hold", valid,
                     valid ? "all invariants verified" : why);
    bool match = false;
    std::string witness = "skipped, the invariants already failed";
    if (valid) {
      try {
        TableDiff d = diff_table(doc, tab);
        match = d.match;
        witness = d.match ? "every row matched" : d.witness;
      } catch (const std::exception& e) {
        witness = e.what();
      }
    }
    detail::add_line(sec, "matches the computed table up to row order", match, witness);
    rep.sections.push_back(std::move(sec));
  }
  timer.stamp(rep);
  // keep stdout clean for `--export -`, the table already went there
  return emit(rep, export_path == "-" ? stderr : stdout);
}

int cmd_verify(const RunSettings& rs, const std::string& spec_text, const std::string& normal_sel,
               const std::string& coset_sel, const std::string& thm,
               const std::string& class_c_sel) {
  detail::ReportTimer timer(rs.timings);
  GroupSpec spec = GroupSpec::parse(spec_text);
  PermGroup g = make_group(spec);
  CharTable tab{ClassData(g, rs.element_cap)};
  const ClassData& cd = tab.classes();
  std::vector<NormalSubgroup> lattice = all_normal_subgroups(tab);

  std::size_t ni = resolve_normal(lattice, cd, normal_sel, g.order());
  const NormalSubgroup& n = lattice[ni];
  if (n.order == g.order())
    fail("--normal selects the whole group; the coset construction needs a proper subgroup");

  std::vector<std::uint32_t> outside, inside;
  for (std::uint32_t k = 0; k < cd.num_classes(); ++k)
    (std::binary_search(n.classes.begin(), n.classes.end(), k) ? inside : outside).push_back(k);
  std::uint32_t xk = resolve_class(cd, outside, coset_sel, "outside the normal subgroup");
  const Permutation& x = cd.rep(xk);

  AnalysisReport rep = base_report(rs, spec.str(), g.order());
  rep.table_hash = table_hash(tab);
  CosetAnalysis a = classify_coset(cd, n.group, x);
  rep.cosets.push_back(make_coset_block(cd, n.order, a));
  rep.infos.emplace_back("normal subgroup", "order " + std::to_string(n.order) + ", classes " +
                                                detail::class_list(cd, n.classes));

  if (thm == "a") {
    rep.sections.push_back(verify_two_class_coset(tab, n, x));
  } else if (thm == "2.2") {
    rep.sections.push_back(verify_single_class_criterion(tab, n, x));
  } else if (thm == "b") {
    rep.sections.push_back(verify_extension_pairing(tab, n, x));
  } else if (thm == "c") {
    rep.sections.push_back(verify_chief_factor_pipeline(tab, lattice, ni, x));
  } else if (thm == "lemma31") {
    std::vector<std::uint32_t> cs;
    if (class_c_sel.empty())
      cs = inside;
    else
      cs.push_back(resolve_class(cd, inside, class_c_sel, "inside the normal subgroup"));
    for (std::uint32_t ck : cs) {
      TheoremReport sec = product_two_class_check(tab, xk, ck);
      sec.title = "C = " + cd.label(ck) + ": " + sec.title;
      rep.sections.push_back(std::move(sec));
    }
  } else {
    fail("unknown --thm '" + thm + "' (want a, b, c, 2.2, or lemma31)");
  }
  timer.stamp(rep);
  return emit(rep);
}

// Splits a comma-separated spec list, ignoring commas inside parentheses so
// direct:(cyclic:2),(alt:4) survives intact.
std::vector<GroupSpec> split_specs(const std::vector<std::string>& args) {
  std::vector<GroupSpec> out;
  for (const std::string& arg : args) {
    int depth = 0;
    std::string cur;
    for (char c : arg) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        if (!cur.empty()) out.push_back(GroupSpec::parse(cur));
        cur.clear();
        continue;
      }
      cur += c;
    }
    if (!cur.empty()) out.push_back(GroupSpec::parse(cur));
  }
  return out;
}

int cmd_search(const RunSettings& rs, long long max_order, const std::vector<std::string>& specs_args) {
  std::vector<GroupSpec> specs;
  if (max_order >= 0)
    specs = catalog_sweep_list(static_cast<unsigned long long>(max_order));
  else
    specs = split_specs(specs_args);
  std::vector<GroupSearchResult> results = search_groups(specs, rs.parallel);

  std::string out = "cosets-search 1\n";
  out += "tool: " + std::string(kToolName) + " " + kToolVersion + "\n";
  out += "seed: " + std::to_string(rs.seed) + "\n";
  out += "element-cap: " + std::to_string(rs.element_cap) + "\n";
  out += std::string("parallel: ") + (rs.parallel ? "on" : "off") + "\n";
  out += "groups: " + std::to_string(results.size()) + "\n";

  unsigned long long errors = 0, single = 0, two = 0, spread = 0, failed = 0;
  for (const GroupSearchResult& r : results) {
    out += "group: " + r.spec + " | order=" + std::to_string(r.order);
    if (!r.ok) {
      ++errors;
      out += " | status=error | " + r.error + "\n";
      continue;
    }
    out += " | status=ok | cosets=" + std::to_string(r.findings.size()) + "\n";
    for (const SearchFinding& f : r.findings) {
      switch (f.shape) {
        case CosetShape::kSingleClass: ++single; break;
        case CosetShape::kTwoClasses: ++two; break;
        case CosetShape::kSpread: ++spread; break;
      }
      if (!f.checks_pass) ++failed;
      out += "finding: N=" + std::to_string(f.n_order) + " | x=" + f.coset_class +
             " | shape=" + shape_name(f.shape);
      if (f.shape == CosetShape::kTwoClasses)
        out += " | sizeK=" + std::to_string(f.size_k) + " | sizeD=" + std::to_string(f.size_d);
      out += std::string(" | checks=") + (f.checks_pass ? "pass" : "FAIL");
      if (!f.detail.empty()) out += " | " + f.detail;
      out += "\n";
    }
  }
  out += "summary: groups=" + std::to_string(results.size()) + " errors=" + std::to_string(errors) +
         " single-class=" + std::to_string(single) + " two-classes=" + std::to_string(two) +
         " spread=" + std::to_string(spread) + " failed-checks=" + std::to_string(failed) + "\n";
  bool pass = errors == 0 && failed == 0;
  out += pass ? "verdict: pass\n" : "verdict: FAIL\n";
  std::fputs(out.c_str(), stdout);
  return pass ? 0 : 1;
}

int cmd_reproduce(const RunSettings& rs, bool include_stretch) {
  ReproduceOutcome out = reproduce_examples(rs, include_stretch);
  std::string text;
  for (const auto& [label, rep] : out.blocks) {
    text += serialize_report(rep);
    text += "\n";
  }
  text += "== reproduction matrix\n";
  for (const auto& [label, rep] : out.blocks)
    text += label + ": " + (rep.pass() ? "pass" : "FAIL") + "\n";
  text += out.pass ? "verdict: pass\n" : "verdict: FAIL\n";
  std::fputs(text.c_str(), stdout);
  return out.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character tables and two-class coset checks for small finite groups"};
  app.fallthrough();
  app.require_subcommand(1);

  RunSettings rs;
  std::string parallel_text = "off";
  app.add_option("--seed", rs.seed, "run seed, recorded in every report")->capture_default_str();
  app.add_option("--element-cap", rs.element_cap, "largest group order the enumerator accepts")
      ->capture_default_str();
  app.add_option("--parallel", parallel_text, "spread independent groups over threads")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  app.add_flag("--timings", rs.timings, "record wall-clock milliseconds in reports");

  auto* info = app.add_subcommand("group-info", "print order, degree, and class data");
  std::string info_spec;
  info->add_option("spec", info_spec, "group spec, e.g. sym:4 or direct:(cyclic:2),(alt:4)")
      ->required();

  auto* table = app.add_subcommand("table", "compute a character table, export or cross-check it");
  std::string table_spec, export_path, check_path;
  table->add_option("spec", table_spec, "group spec")->required();
  auto* exp = table->add_option("--export", export_path, "write the table to this file");
  auto* chk = table->add_option("--check", check_path,
                                "parse this file, validate it, and diff it against the computed table");
  exp->excludes(chk);

  auto* verify = app.add_subcommand("verify", "run one theorem check on one coset");
  std::string v_spec, v_normal, v_coset, v_thm, v_class_c;
  verify->add_option("spec", v_spec, "group spec")->required();
  verify->add_option("--normal", v_normal, "normal subgroup by order, index, or #position")
      ->required();
  verify
      ->add_option("--coset", v_coset,
                   "class of x outside N: a label (4c), an order (4), or order:size (4:180)")
      ->required();
  verify->add_option("--thm", v_thm, "a | b | c | 2.2 | lemma31")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "2.2", "lemma31"}));
  verify->add_option("--class-c", v_class_c,
                     "lemma31 only: class C inside N (default: every class of N)");

  auto* search = app.add_subcommand("search", "sweep groups for cosets in at most two classes");
  long long max_order = -1;
  std::vector<std::string> specs_args;
  search->add_option("--max-order", max_order, "sweep every catalog group up to this order");
  search->add_option("--specs", specs_args, "comma-separated group specs to sweep");

  auto* repro =
      app.add_subcommand("reproduce-examples", "re-run the worked examples, print a pass/fail matrix");
  bool include_stretch = false;
  repro->add_flag("--include-stretch", include_stretch,
                  "also run the two large pgammal:2:27 blocks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  rs.parallel = parallel_text == "on";

  try {
    if (info->parsed()) return cmd_group_info(rs, info_spec);
    if (table->parsed()) {
      if (export_path.empty() == check_path.empty())
        fail("table needs exactly one of --export or --check");
      return cmd_table(rs, table_spec, export_path, check_path);
    }
    if (verify->parsed()) return cmd_verify(rs, v_spec, v_normal, v_coset, v_thm, v_class_c);
    if (search->parsed()) {
      if ((max_order < 0) == specs_args.empty())
        fail("search needs exactly one of --max-order or --specs");
      return cmd_search(rs, max_order, specs_args);
    }
    return cmd_reproduce(rs, include_stretch);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
}
