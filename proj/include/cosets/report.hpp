// Structured run reports: what was analyzed, with which settings, and the
// verdict of every check, in a line-oriented text form that parses back
// losslessly.  The text form is the tool's primary output, so field order
// is fixed and every value is deterministic.
#ifndef COSETS_REPORT_HPP_
#define COSETS_REPORT_HPP_

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cosets/common.hpp"
#include "cosets/coset_check.hpp"
#include "cosets/version.hpp"

namespace cosets {

inline constexpr const char* kReportFormatTag = "cosets-report 1";

// Settings every command records into its report.
struct RunSettings {
  std::uint64_t seed = kDefaultSeed;
  std::size_t element_cap = kDefaultElementCap;
  bool parallel = false;
  bool timings = false;
};

// One classified coset, flattened for the report.
struct CosetBlock {
  unsigned long long n_order = 0;
  std::string x_class;
  std::string shape;
  std::string classes_met;  // rendered "{3a, 6b}"
  unsigned long long size_k = 0;
  unsigned long long size_d = 0;
  unsigned long long quotient_centralizer = 0;

  friend bool operator==(const CosetBlock&, const CosetBlock&) = default;
};

inline CosetBlock make_coset_block(const ClassData& cd, unsigned long long n_order,
                                   const CosetAnalysis& a) {
  CosetBlock b;
  b.n_order = n_order;
  b.x_class = cd.label(a.class_k);
  b.shape = shape_name(a.shape);
  b.classes_met = detail::class_list(cd, a.coset_classes);
  b.size_k = a.size_k;
  b.size_d = a.size_d;
  b.quotient_centralizer = a.quotient_centralizer;
  return b;
}

struct AnalysisReport {
  std::string tool;  // name and version
  std::string group_spec;
  unsigned long long group_order = 0;
  unsigned long long seed = 0;
  unsigned long long element_cap = 0;
  bool parallel = false;
  unsigned long long timing_ms = 0;  // stays 0 unless timing was requested
  std::string table_hash = "-";      // "-" when no character table was computed
  std::vector<CosetBlock> cosets;
  std::vector<std::pair<std::string, std::string>> infos;
  std::vector<TheoremReport> sections;

  bool pass() const {
    for (const TheoremReport& s : sections)
      if (!s.pass()) return false;
    return true;
  }
};

inline AnalysisReport base_report(const RunSettings& rs, std::string group_spec,
                                  unsigned long long order) {
  AnalysisReport r;
  r.tool = std::string(kToolName) + " " + kToolVersion;
  r.group_spec = std::move(group_spec);
  r.group_order = order;
  r.seed = rs.seed;
  r.element_cap = rs.element_cap;
  r.parallel = rs.parallel;
  return r;
}

inline bool operator==(const CheckLine& a, const CheckLine& b) {
  return a.name == b.name && a.pass == b.pass && a.detail == b.detail;
}
inline bool operator==(const TheoremReport& a, const TheoremReport& b) {
  return a.title == b.title && a.applicable == b.applicable && a.skip_reason == b.skip_reason &&
         a.lines == b.lines;
}
inline bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
  return a.tool == b.tool && a.group_spec == b.group_spec && a.group_order == b.group_order &&
         a.seed == b.seed && a.element_cap == b.element_cap && a.parallel == b.parallel &&
         a.timing_ms == b.timing_ms && a.table_hash == b.table_hash && a.cosets == b.cosets &&
         a.infos == b.infos && a.sections == b.sections;
}

namespace detail {

inline void require_clean(const std::string& s, const char* what) {
  if (s.find('\n') != std::string::npos || s.find('\r') != std::string::npos)
    fail(std::string("report field (") + what + ") contains a line break");
}

inline void require_name_clean(const std::string& s, const char* what) {
  require_clean(s, what);
  if (s.find(" :: ") != std::string::npos)
    fail(std::string("report field (") + what + ") contains the ' :: ' separator");
}

}  // namespace detail

inline std::string serialize_report(const AnalysisReport& r) {
  static constexpr const char* kNaSuffix = " (not applicable)";
  std::ostringstream out;
  detail::require_clean(r.tool, "tool");
  detail::require_clean(r.group_spec, "group spec");
  detail::require_clean(r.table_hash, "table hash");
  out << kReportFormatTag << "\n";
  out << "tool: " << r.tool << "\n";
  out << "group: " << r.group_spec << "\n";
  out << "order: " << r.group_order << "\n";
  out << "seed: " << r.seed << "\n";
  out << "element-cap: " << r.element_cap << "\n";
  out << "parallel: " << (r.parallel ? "on" : "off") << "\n";
  out << "timing-ms: " << r.timing_ms << "\n";
  out << "table-hash: " << r.table_hash << "\n";
  for (const CosetBlock& c : r.cosets) {
    detail::require_clean(c.x_class, "coset class");
    detail::require_clean(c.shape, "coset shape");
    detail::require_clean(c.classes_met, "coset classes");
    out << "coset: N=" << c.n_order << " | x=" << c.x_class << " | shape=" << c.shape
        << " | meets=" << c.classes_met << " | sizeK=" << c.size_k << " | sizeD=" << c.size_d
        << " | centralizer=" << c.quotient_centralizer << "\n";
  }
  for (const auto& [key, value] : r.infos) {
    detail::require_name_clean(key, "info key");
    detail::require_clean(value, "info value");
    out << "info: " << key << " :: " << value << "\n";
  }
  for (const TheoremReport& s : r.sections) {
    detail::require_clean(s.title, "section title");
    if (s.title.size() >= std::string(kNaSuffix).size() &&
        s.title.rfind(kNaSuffix) == s.title.size() - std::string(kNaSuffix).size())
      fail("section title collides with the not-applicable marker");
    out << "== " << s.title << (s.applicable ? "" : kNaSuffix) << "\n";
    if (!s.applicable) {
      detail::require_clean(s.skip_reason, "skip reason");
      out << "reason: " << s.skip_reason << "\n";
    }
    for (const CheckLine& l : s.lines) {
      detail::require_name_clean(l.name, "check name");
      detail::require_clean(l.detail, "check detail");
      out << (l.pass ? "[ok] " : "[FAIL] ") << l.name << " :: " << l.detail << "\n";
    }
  }
  out << "verdict: " << (r.pass() ? "pass" : "FAIL") << "\n";
  return out.str();
}

namespace detail {

struct ReportLineReader {
  std::istringstream in;
  std::string line;
  std::size_t number = 0;
  bool held = false;  // line already read but not consumed

  explicit ReportLineReader(const std::string& text) : in(text) {}

  bool next() {
    if (held) {
      held = false;
      return true;
    }
    if (!std::getline(in, line)) return false;
    ++number;
    return true;
  }
  void put_back() { held = true; }
  [[noreturn]] void die(const std::string& msg) const {
    fail("report parse: line " + std::to_string(number) + ": " + msg);
  }
  // consumes a "key: value" line with the exact key, returns the value
  std::string expect(const std::string& key) {
    if (!next()) fail("report parse: unexpected end of input before '" + key + "'");
    const std::string prefix = key + ": ";
    if (line.rfind(prefix, 0) != 0) die("expected '" + key + ": ...', got '" + line + "'");
    return line.substr(prefix.size());
  }
};

inline unsigned long long parse_count(const std::string& s, ReportLineReader& r) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    r.die("expected an unsigned number, got '" + s + "'");
  return std::stoull(s);
}

}  // namespace detail

inline AnalysisReport parse_report(const std::string& text) {
  static constexpr const char* kNaSuffix = " (not applicable)";
  detail::ReportLineReader r(text);
  if (!r.next() || r.line != kReportFormatTag)
    fail("report parse: line 1: missing format tag '" + std::string(kReportFormatTag) + "'");
  AnalysisReport rep;
  rep.tool = r.expect("tool");
  rep.group_spec = r.expect("group");
  rep.group_order = detail::parse_count(r.expect("order"), r);
  rep.seed = detail::parse_count(r.expect("seed"), r);
  rep.element_cap = detail::parse_count(r.expect("element-cap"), r);
  std::string par = r.expect("parallel");
  if (par != "on" && par != "off") r.die("parallel must be 'on' or 'off'");
  rep.parallel = (par == "on");
  rep.timing_ms = detail::parse_count(r.expect("timing-ms"), r);
  rep.table_hash = r.expect("table-hash");

  bool saw_verdict = false;
  while (r.next()) {
    if (r.line.rfind("coset: ", 0) == 0) {
      if (!rep.infos.empty() || !rep.sections.empty())
        r.die("coset lines must precede info lines and sections");
      std::string rest = r.line.substr(7);
      std::vector<std::string> parts;
      std::size_t pos = 0;
      while (true) {
        std::size_t bar = rest.find(" | ", pos);
        if (bar == std::string::npos) {
          parts.push_back(rest.substr(pos));
          break;
        }
        parts.push_back(rest.substr(pos, bar - pos));
        pos = bar + 3;
      }
      if (parts.size() != 7) r.die("coset line needs 7 fields, got " + std::to_string(parts.size()));
      auto field = [&](std::size_t i, const char* key) {
        std::string prefix = std::string(key) + "=";
        if (parts[i].rfind(prefix, 0) != 0)
          r.die("coset field " + std::to_string(i) + " must start with '" + prefix + "'");
        return parts[i].substr(prefix.size());
      };
      CosetBlock c;
      c.n_order = detail::parse_count(field(0, "N"), r);
      c.x_class = field(1, "x");
      c.shape = field(2, "shape");
      c.classes_met = field(3, "meets");
      c.size_k = detail::parse_count(field(4, "sizeK"), r);
      c.size_d = detail::parse_count(field(5, "sizeD"), r);
      c.quotient_centralizer = detail::parse_count(field(6, "centralizer"), r);
      rep.cosets.push_back(std::move(c));
    } else if (r.line.rfind("info: ", 0) == 0) {
      if (!rep.sections.empty()) r.die("info lines must precede sections");
      std::string rest = r.line.substr(6);
      std::size_t sep = rest.find(" :: ");
      if (sep == std::string::npos) r.die("info line needs ' :: '");
      rep.infos.emplace_back(rest.substr(0, sep), rest.substr(sep + 4));
    } else if (r.line.rfind("== ", 0) == 0) {
      TheoremReport sec;
      sec.title = r.line.substr(3);
      std::string suffix = kNaSuffix;
      if (sec.title.size() > suffix.size() &&
          sec.title.rfind(suffix) == sec.title.size() - suffix.size()) {
        sec.applicable = false;
        sec.title.resize(sec.title.size() - suffix.size());
        sec.skip_reason = r.expect("reason");
      }
      while (r.next()) {
        bool ok_line = r.line.rfind("[ok] ", 0) == 0;
        bool fail_line = r.line.rfind("[FAIL] ", 0) == 0;
        if (!ok_line && !fail_line) {
          r.put_back();
          break;
        }
        std::string rest = r.line.substr(ok_line ? 5 : 7);
        std::size_t sep = rest.find(" :: ");
        if (sep == std::string::npos) r.die("check line needs ' :: '");
        sec.lines.push_back(CheckLine{rest.substr(0, sep), ok_line, rest.substr(sep + 4)});
      }
      rep.sections.push_back(std::move(sec));
    } else if (r.line.rfind("verdict: ", 0) == 0) {
      std::string v = r.line.substr(9);
      if (v != "pass" && v != "FAIL") r.die("verdict must be 'pass' or 'FAIL'");
      if ((v == "pass") != rep.pass()) r.die("verdict does not match the recorded checks");
      saw_verdict = true;
      if (r.next()) r.die("content after the verdict line");
      break;
    } else if (r.line.empty()) {
      r.die("blank line inside a report");
    } else {
      r.die("unrecognized line '" + r.line + "'");
    }
  }
  if (!saw_verdict) fail("report parse: missing verdict line");
  return rep;
}

}  // namespace cosets

#endif
