// Character table text format: export, parse, validation, diff, content hash.
//
// The document is line oriented.  All character values are written at the
// group exponent e, each as a sum of rational multiples of powers of z<e>
// in the reduced canonical form, so files diff cleanly across runs.
#ifndef COSETS_TABLE_IO_HPP_
#define COSETS_TABLE_IO_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosets/char_table.hpp"
#include "cosets/class_data.hpp"
#include "cosets/common.hpp"
#include "cosets/cyclotomic.hpp"
#include "cosets/modp.hpp"
#include "cosets/rational.hpp"

namespace cosets {

inline constexpr const char* kTableFormatTag = "cosets-chartable 1";

// Parsed form of a table document.  Values are kept at the conductor named
// by the exponent line.
struct TableDocument {
  std::string group_name;
  unsigned long long order = 0;
  unsigned long long exponent = 0;
  std::vector<unsigned long long> sizes;
  std::vector<unsigned long long> element_orders;
  std::vector<std::string> labels;
  // one entry per prime dividing the exponent: (p, class index of g^p per class)
  std::vector<std::pair<unsigned long long, std::vector<std::size_t>>> power_maps;
  std::vector<unsigned long long> degrees;
  std::vector<std::vector<Cyclotomic>> rows;
};

inline std::string write_table(const CharTable& table, const std::string& group_name) {
  const ClassData& cd = table.classes();
  const std::size_t t = cd.num_classes();
  const unsigned long long e = cd.exponent();
  std::ostringstream out;
  out << kTableFormatTag << "\n";
  out << "group " << group_name << "\n";
  out << "order " << cd.group().order() << "\n";
  out << "exponent " << e << "\n";
  out << "classes " << t << "\n";
  out << "sizes";
  for (std::size_t k = 0; k < t; ++k) out << " " << cd.size(k);
  out << "\norders";
  for (std::size_t k = 0; k < t; ++k) out << " " << cd.order_of(k);
  out << "\nlabels";
  for (std::size_t k = 0; k < t; ++k) out << " " << cd.label(k);
  out << "\n";
  for (unsigned long long p : prime_factors(e)) {
    out << "pow " << p;
    for (std::size_t k = 0; k < t; ++k) out << " " << cd.power_class(k, static_cast<long long>(p));
    out << "\n";
  }
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    out << "char " << table.degree(r);
    for (std::size_t k = 0; k < t; ++k) out << " " << table.value(r, k).embedded(e).str();
    out << "\n";
  }
  return out.str();
}

namespace detail {

// One value in the exported syntax: terms joined by +/-, each term a
// rational, z<e>, z<e>^k, or <rational>*z<e>^k.
inline Cyclotomic parse_table_value(std::string_view text, unsigned long long e,
                                    const std::string& where) {
  if (text.empty()) fail("table parse (" + where + "): empty value");
  std::vector<std::pair<unsigned long long, Rational>> terms;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = pos + 1;  // a sign at pos belongs to this term
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string_view piece = text.substr(pos, end - pos);
    if (piece == "+" || piece == "-") fail("table parse (" + where + "): dangling sign");
    if (piece[0] == '+') piece.remove_prefix(1);
    bool negate = false;
    if (!piece.empty() && piece[0] == '-' && piece.find('z') != std::string_view::npos) {
      negate = true;
      piece.remove_prefix(1);
    }
    auto zpos = piece.find('z');
    Rational coeff(1);
    unsigned long long expo = 0;
    if (zpos == std::string_view::npos) {
      coeff = parse_rational(piece);
    } else {
      if (zpos > 0) {
        if (piece[zpos - 1] != '*')
          fail("table parse (" + where + "): expected '*' before root symbol");
        coeff = parse_rational(piece.substr(0, zpos - 1));
      }
      std::string_view mono = piece.substr(zpos + 1);
      auto caret = mono.find('^');
      std::string_view root_str = mono.substr(0, caret);
      unsigned long long root = 0;
      for (char c : root_str) {
        if (c < '0' || c > '9') fail("table parse (" + where + "): bad root symbol");
        root = root * 10 + static_cast<unsigned long long>(c - '0');
      }
      if (root != e)
        fail("table parse (" + where + "): root z" + std::to_string(root) +
             " does not match the exponent line");
      if (caret != std::string_view::npos) {
        std::string_view es = mono.substr(caret + 1);
        if (es.empty()) fail("table parse (" + where + "): empty exponent");
        for (char c : es) {
          if (c < '0' || c > '9') fail("table parse (" + where + "): bad exponent");
          expo = expo * 10 + static_cast<unsigned long long>(c - '0');
        }
      } else {
        expo = 1;
      }
    }
    if (negate) coeff = Rational(0) - coeff;
    terms.emplace_back(expo, coeff);
    pos = end;
  }
  return Cyclotomic::from_terms(e, std::move(terms));
}

}  // namespace detail

inline TableDocument parse_table(const std::string& text) {
  TableDocument doc;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  auto where = [&]() { return "line " + std::to_string(lineno); };
  auto fields = [&](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream fs(s);
    std::string f;
    while (fs >> f) out.push_back(f);
    return out;
  };
  auto to_u64 = [&](const std::string& s) -> unsigned long long {
    if (s.empty()) fail("table parse (" + where() + "): empty number");
    unsigned long long v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') fail("table parse (" + where() + "): bad number '" + s + "'");
      v = v * 10 + static_cast<unsigned long long>(c - '0');
    }
    return v;
  };

  if (!next_line() || line != kTableFormatTag)
    fail("table parse (line 1): missing '" + std::string(kTableFormatTag) + "' header");

  std::size_t t = 0;
  bool have_classes = false;
  auto read_row = [&](const std::string& keyword) {
    if (!next_line()) fail("table parse (line " + std::to_string(lineno) + "): truncated file");
    auto fs = fields(line);
    if (fs.empty() || fs[0] != keyword)
      fail("table parse (" + where() + "): expected '" + keyword + "' line");
    fs.erase(fs.begin());
    return fs;
  };

  auto group_fields = read_row("group");
  if (group_fields.size() != 1) fail("table parse (" + where() + "): bad group line");
  doc.group_name = group_fields[0];
  auto order_fields = read_row("order");
  if (order_fields.size() != 1) fail("table parse (" + where() + "): bad order line");
  doc.order = to_u64(order_fields[0]);
  auto exp_fields = read_row("exponent");
  if (exp_fields.size() != 1) fail("table parse (" + where() + "): bad exponent line");
  doc.exponent = to_u64(exp_fields[0]);
  auto class_fields = read_row("classes");
  if (class_fields.size() != 1) fail("table parse (" + where() + "): bad classes line");
  t = to_u64(class_fields[0]);
  have_classes = t > 0;
  if (!have_classes) fail("table parse (" + where() + "): class count must be positive");

  auto sizes = read_row("sizes");
  if (sizes.size() != t) fail("table parse (" + where() + "): expected " + std::to_string(t) + " sizes");
  for (auto& s : sizes) doc.sizes.push_back(to_u64(s));
  auto orders = read_row("orders");
  if (orders.size() != t) fail("table parse (" + where() + "): expected " + std::to_string(t) + " orders");
  for (auto& s : orders) doc.element_orders.push_back(to_u64(s));
  auto labels = read_row("labels");
  if (labels.size() != t) fail("table parse (" + where() + "): expected " + std::to_string(t) + " labels");
  doc.labels = labels;

  while (next_line()) {
    auto fs = fields(line);
    if (fs.empty()) continue;
    if (fs[0] == "pow") {
      if (fs.size() != t + 2) fail("table parse (" + where() + "): bad pow line");
      unsigned long long p = to_u64(fs[1]);
      std::vector<std::size_t> img;
      for (std::size_t k = 0; k < t; ++k) {
        unsigned long long v = to_u64(fs[k + 2]);
        if (v >= t) fail("table parse (" + where() + "): pow target out of range");
        img.push_back(static_cast<std::size_t>(v));
      }
      doc.power_maps.emplace_back(p, std::move(img));
    } else if (fs[0] == "char") {
      if (fs.size() != t + 2) fail("table parse (" + where() + "): bad char line");
      doc.degrees.push_back(to_u64(fs[1]));
      std::vector<Cyclotomic> row;
      for (std::size_t k = 0; k < t; ++k)
        row.push_back(detail::parse_table_value(fs[k + 2], doc.exponent,
                                                where() + ", class " + std::to_string(k)));
      doc.rows.push_back(std::move(row));
    } else {
      fail("table parse (" + where() + "): unknown keyword '" + fs[0] + "'");
    }
  }
  if (doc.rows.empty()) fail("table parse: no char lines");
  return doc;
}

// Checks every character-level invariant an external table must satisfy:
// consistent counts, size/order arithmetic, degree divisibility, the degree
// column, the degree-sum identity, and full column orthogonality.
inline void validate_table(const TableDocument& doc) {
  const std::size_t t = doc.sizes.size();
  check(doc.rows.size() == t,
        "table validate: " + std::to_string(doc.rows.size()) + " characters for " +
            std::to_string(t) + " classes (table must be square)");
  unsigned long long size_sum = 0;
  for (unsigned long long s : doc.sizes) size_sum += s;
  check(size_sum == doc.order, "table validate: class sizes sum to " + std::to_string(size_sum) +
                                   ", not the group order");
  check(t > 0 && doc.sizes[0] == 1 && doc.element_orders[0] == 1,
        "table validate: first class must be the identity class");
  unsigned long long order_lcm = 1;
  for (std::size_t k = 0; k < t; ++k) {
    check(doc.sizes[k] > 0 && doc.order % doc.sizes[k] == 0,
          "table validate: class size " + std::to_string(doc.sizes[k]) +
              " does not divide the group order");
    check(doc.element_orders[k] > 0 && doc.order % doc.element_orders[k] == 0,
          "table validate: element order " + std::to_string(doc.element_orders[k]) +
              " does not divide the group order");
    order_lcm = lcm_u64(order_lcm, doc.element_orders[k]);
  }
  check(order_lcm == doc.exponent, "table validate: exponent line is not the lcm of the orders");
  for (std::size_t k = 0; k < t; ++k)
    for (std::size_t j = k + 1; j < t; ++j)
      check(doc.labels[k] != doc.labels[j], "table validate: duplicate label " + doc.labels[k]);
  for (const auto& [p, img] : doc.power_maps) {
    check(p >= 2 && doc.exponent % p == 0, "table validate: pow line prime must divide the exponent");
    for (std::size_t k = 0; k < t; ++k) {
      unsigned long long n = doc.element_orders[k];
      unsigned long long want = n / std::gcd(n, p);
      check(doc.element_orders[img[k]] == want,
            "table validate: pow " + std::to_string(p) + " image of class " + std::to_string(k) +
                " has element order " + std::to_string(doc.element_orders[img[k]]) + ", expected " +
                std::to_string(want));
    }
  }

  unsigned long long degree_square_sum = 0;
  for (std::size_t r = 0; r < t; ++r) {
    unsigned long long d = doc.degrees[r];
    check(d > 0 && doc.order % d == 0,
          "table validate: degree " + std::to_string(d) + " does not divide the group order");
    degree_square_sum += d * d;
    check(doc.rows[r][0] == Cyclotomic(Rational(BigInt(d))),
          "table validate: character " + std::to_string(r) + " has identity value != its degree");
  }
  check(degree_square_sum == doc.order,
        "table validate: degrees squared sum to " + std::to_string(degree_square_sum) +
            ", not the group order");

  // Second orthogonality across every column pair; for a square table this
  // is equivalent to row orthogonality and keeps conductors small.
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i; j < t; ++j) {
      Cyclotomic sum(Rational(0));
      for (std::size_t r = 0; r < t; ++r) sum = sum + doc.rows[r][i] * doc.rows[r][j].conj();
      Cyclotomic want = (i == j) ? Cyclotomic(Rational(BigInt(doc.order / doc.sizes[i])))
                                 : Cyclotomic(Rational(0));
      if (sum != want)
        fail("table validate: column-orthogonality violation at classes " + doc.labels[i] + ", " +
             doc.labels[j] + " (got " + sum.str() + ", want " + want.str() + ")");
    }
}

struct TableDiff {
  bool match = true;
  std::string witness;  // empty on match
};

// Compares an ingested document against a computed table up to row
// permutation.  Class structure must agree exactly (same canonical order).
inline TableDiff diff_table(const TableDocument& doc, const CharTable& table) {
  const ClassData& cd = table.classes();
  const std::size_t t = cd.num_classes();
  TableDiff diff;
  auto mismatch = [&diff](std::string msg) {
    diff.match = false;
    diff.witness = std::move(msg);
    return diff;
  };
  if (doc.sizes.size() != t)
    return mismatch("class count: file has " + std::to_string(doc.sizes.size()) + ", computed " +
                    std::to_string(t));
  if (doc.order != cd.group().order())
    return mismatch("group order: file has " + std::to_string(doc.order));
  if (doc.exponent != cd.exponent())
    return mismatch("exponent: file has " + std::to_string(doc.exponent));
  for (std::size_t k = 0; k < t; ++k) {
    if (doc.sizes[k] != cd.size(k) || doc.element_orders[k] != cd.order_of(k) ||
        doc.labels[k] != cd.label(k))
      return mismatch("class " + std::to_string(k) + ": file has " + doc.labels[k] + " (size " +
                      std::to_string(doc.sizes[k]) + ", order " +
                      std::to_string(doc.element_orders[k]) + "), computed " + cd.label(k) +
                      " (size " + std::to_string(cd.size(k)) + ", order " +
                      std::to_string(cd.order_of(k)) + ")");
  }
  std::vector<bool> used(t, false);
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    bool found = false;
    for (std::size_t s = 0; s < table.num_rows() && !found; ++s) {
      if (used[s] || table.degree(s) != doc.degrees[r]) continue;
      bool same = true;
      for (std::size_t k = 0; k < t && same; ++k) same = (doc.rows[r][k] == table.value(s, k));
      if (same) {
        used[s] = true;
        found = true;
      }
    }
    if (!found)
      return mismatch("character " + std::to_string(r) + " of the file (degree " +
                      std::to_string(doc.degrees[r]) + ") matches no computed row");
  }
  return diff;
}

// Stable content hash of a computed table: class structure plus every value
// in its natural-conductor canonical text, row major.
inline std::string table_hash(const CharTable& table) {
  const ClassData& cd = table.classes();
  Fnv1a h;
  h.feed("order=" + std::to_string(cd.group().order()) + ";");
  for (std::size_t k = 0; k < cd.num_classes(); ++k)
    h.feed(cd.label(k) + ":" + std::to_string(cd.size(k)) + ";");
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    h.feed("deg=" + std::to_string(table.degree(r)) + ":");
    for (std::size_t k = 0; k < cd.num_classes(); ++k) h.feed(table.value(r, k).str() + ",");
  }
  return h.hex();
}

}  // namespace cosets

#endif
