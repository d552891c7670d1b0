// Group catalog: named families of concrete permutation groups, and the
// spec-string grammar that selects them.
//
// Grammar (lowercase, ':'-separated parameters):
//   cyclic:N  sym:N  alt:N  dihedral:N  q8  sl:2:3
//   agl1:Q  agammal1:Q  psl:2:Q  pgl:2:Q  pgammal:2:Q
//   direct:(SPEC),(SPEC)[,(SPEC)...]
// Every constructor asserts its group order against the closed formula.
#ifndef COSETS_CATALOG_HPP_
#define COSETS_CATALOG_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cosets/common.hpp"
#include "cosets/gf.hpp"
#include "cosets/perm_group.hpp"
#include "cosets/permutation.hpp"

namespace cosets {

struct GroupSpec {
  std::string name;
  std::vector<unsigned> params;
  std::vector<GroupSpec> parts;  // for direct products

  std::string str() const {
    std::string s = name;
    for (unsigned v : params) s += ":" + std::to_string(v);
    if (!parts.empty()) {
      s += ":";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += "(" + parts[i].str() + ")";
      }
    }
    return s;
  }

  static GroupSpec parse(std::string_view text);
};

namespace detail {

inline unsigned long long factorial_u64(unsigned n) {
  unsigned long long r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline GroupSpec parse_spec_impl(std::string_view s, size_t& pos) {
  GroupSpec spec;
  size_t start = pos;
  while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) != 0))
    ++pos;
  spec.name = std::string(s.substr(start, pos - start));
  if (spec.name.empty()) fail("group spec: missing family name in '" + std::string(s) + "'");
  if (spec.name == "direct") {
    if (pos >= s.size() || s[pos] != ':') fail("group spec: direct needs factor list");
    ++pos;
    while (true) {
      if (pos >= s.size() || s[pos] != '(') fail("group spec: expected '(' in direct factors");
      ++pos;
      spec.parts.push_back(parse_spec_impl(s, pos));
      if (pos >= s.size() || s[pos] != ')') fail("group spec: expected ')' in direct factors");
      ++pos;
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (spec.parts.size() < 2) fail("group spec: direct needs at least two factors");
    return spec;
  }
  while (pos < s.size() && s[pos] == ':') {
    ++pos;
    size_t nstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) ++pos;
    if (pos == nstart) fail("group spec: expected number after ':'");
    unsigned long long v = std::stoull(std::string(s.substr(nstart, pos - nstart)));
    if (v > 1u << 20) fail("group spec: parameter too large");
    spec.params.push_back(static_cast<unsigned>(v));
  }
  return spec;
}

// Moebius action of an invertible matrix [[a,b],[c,d]] over F_q on the
// projective line. Point 0 is infinity; point 1+i is the field element i.
inline Permutation moebius_perm(const GaloisField& F, unsigned a, unsigned b, unsigned c,
                                unsigned d) {
  unsigned q = F.q();
  std::vector<std::uint32_t> img(q + 1);
  auto enc = [](unsigned x) { return x + 1; };
  img[0] = (c == 0) ? 0 : enc(F.mul(a, F.inv(c)));
  for (unsigned x = 0; x < q; ++x) {
    unsigned den = F.add(F.mul(c, x), d);
    unsigned num = F.add(F.mul(a, x), b);
    img[enc(x)] = (den == 0) ? 0 : enc(F.mul(num, F.inv(den)));
  }
  return Permutation(std::move(img));
}

inline Permutation frobenius_on_line(const GaloisField& F) {
  unsigned q = F.q();
  std::vector<std::uint32_t> img(q + 1);
  img[0] = 0;
  for (unsigned x = 0; x < q; ++x) img[x + 1] = F.frobenius(x) + 1;
  return Permutation(std::move(img));
}

// Affine map x -> a*x + b on the q field elements.
inline Permutation affine_perm(const GaloisField& F, unsigned a, unsigned b) {
  std::vector<std::uint32_t> img(F.q());
  for (unsigned x = 0; x < F.q(); ++x) img[x] = F.add(F.mul(a, x), b);
  return Permutation(std::move(img));
}

inline Permutation frobenius_on_field(const GaloisField& F) {
  std::vector<std::uint32_t> img(F.q());
  for (unsigned x = 0; x < F.q(); ++x) img[x] = F.frobenius(x);
  return Permutation(std::move(img));
}

}  // namespace detail

inline GroupSpec GroupSpec::parse(std::string_view text) {
  size_t pos = 0;
  GroupSpec spec = detail::parse_spec_impl(text, pos);
  if (pos != text.size()) fail("group spec: trailing junk in '" + std::string(text) + "'");
  return spec;
}

// Group order from the family formula, without building the group.
inline unsigned long long spec_order(const GroupSpec& spec) {
  using detail::factorial_u64;
  const auto& P = spec.params;
  auto need = [&](size_t n) {
    if (P.size() != n) fail("group spec: " + spec.name + " expects " + std::to_string(n) +
                            " parameter(s)");
  };
  if (spec.name == "cyclic") {
    need(1);
    if (P[0] < 1) fail("cyclic:n needs n >= 1");
    return P[0];
  }
  if (spec.name == "sym") {
    need(1);
    if (P[0] < 1 || P[0] > 12) fail("sym:n needs 1 <= n <= 12");
    return factorial_u64(P[0]);
  }
  if (spec.name == "alt") {
    need(1);
    if (P[0] < 3 || P[0] > 12) fail("alt:n needs 3 <= n <= 12");
    return factorial_u64(P[0]) / 2;
  }
  if (spec.name == "dihedral") {
    need(1);
    if (P[0] < 3) fail("dihedral:n needs n >= 3");
    return 2ULL * P[0];
  }
  if (spec.name == "q8") {
    need(0);
    return 8;
  }
  if (spec.name == "sl") {
    need(2);
    if (P[0] != 2 || P[1] != 3) fail("only sl:2:3 is in the catalog");
    return 24;
  }
  if (spec.name == "agl1" || spec.name == "agammal1") {
    need(1);
    const GaloisField& F = GaloisField::get(P[0]);
    unsigned long long base = static_cast<unsigned long long>(F.q()) * (F.q() - 1);
    return spec.name == "agl1" ? base : base * F.f();
  }
  if (spec.name == "psl" || spec.name == "pgl" || spec.name == "pgammal") {
    need(2);
    if (P[0] != 2) fail(spec.name + " supports dimension 2 only");
    const GaloisField& F = GaloisField::get(P[1]);
    unsigned long long q = F.q();
    unsigned long long pgl = q * (q * q - 1);
    if (spec.name == "psl") return (q % 2 == 0) ? pgl : pgl / 2;
    if (spec.name == "pgl") return pgl;
    return pgl * F.f();
  }
  if (spec.name == "direct") {
    unsigned long long r = 1;
    for (const GroupSpec& part : spec.parts) r *= spec_order(part);
    return r;
  }
  fail("unknown group family '" + spec.name + "'");
}

inline PermGroup make_group(const GroupSpec& spec) {
  const auto& P = spec.params;
  std::vector<Permutation> gens;
  std::uint32_t degree = 1;

  auto cycle_all = [](std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = (i + 1) % n;
    return Permutation(std::move(v));
  };

  if (spec.name == "cyclic") {
    spec_order(spec);  // parameter validation
    degree = P[0];
    if (degree > 1) gens.push_back(cycle_all(degree));
  } else if (spec.name == "sym") {
    spec_order(spec);
    degree = P[0];
    if (degree >= 2) {
      std::vector<std::uint32_t> t(degree);
      for (std::uint32_t i = 0; i < degree; ++i) t[i] = i;
      std::swap(t[0], t[1]);
      gens.push_back(Permutation(std::move(t)));
      if (degree >= 3) gens.push_back(cycle_all(degree));
    }
  } else if (spec.name == "alt") {
    spec_order(spec);
    degree = P[0];
    std::vector<std::uint32_t> c3(degree);
    for (std::uint32_t i = 0; i < degree; ++i) c3[i] = i;
    c3[0] = 1;
    c3[1] = 2;
    c3[2] = 0;
    gens.push_back(Permutation(std::move(c3)));
    if (degree > 3) {
      std::vector<std::uint32_t> v(degree);
      if (degree % 2 == 1) {
        for (std::uint32_t i = 0; i < degree; ++i) v[i] = (i + 1) % degree;
      } else {
        v[0] = 0;
        for (std::uint32_t i = 1; i < degree; ++i) v[i] = 1 + (i % (degree - 1));
      }
      gens.push_back(Permutation(std::move(v)));
    }
  } else if (spec.name == "dihedral") {
    spec_order(spec);
    degree = P[0];
    gens.push_back(cycle_all(degree));
    std::vector<std::uint32_t> r(degree);
    for (std::uint32_t i = 0; i < degree; ++i) r[i] = (degree - i) % degree;
    gens.push_back(Permutation(std::move(r)));
  } else if (spec.name == "q8") {
    // Left multiplication on {1,-1,i,-i,j,-j,k,-k} (indices 0..7).
    degree = 8;
    gens.push_back(Permutation({2, 3, 1, 0, 6, 7, 5, 4}));  // left mult by i
    gens.push_back(Permutation({4, 5, 7, 6, 1, 0, 2, 3}));  // left mult by j
  } else if (spec.name == "sl") {
    spec_order(spec);
    // Action on the 8 nonzero vectors of F3^2; vector (x,y) has index 3x+y-1
    // after skipping (0,0).
    degree = 8;
    auto vec_index = [](unsigned x, unsigned y) { return 3 * x + y - 1; };
    auto matrix_perm = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
      std::vector<std::uint32_t> img(8);
      for (unsigned x = 0; x < 3; ++x)
        for (unsigned y = 0; y < 3; ++y) {
          if (x == 0 && y == 0) continue;
          unsigned nx = (a * x + b * y) % 3, ny = (c * x + d * y) % 3;
          img[vec_index(x, y)] = vec_index(nx, ny);
        }
      return Permutation(std::move(img));
    };
    gens.push_back(matrix_perm(1, 1, 0, 1));
    gens.push_back(matrix_perm(0, 2, 1, 0));  // det = -2 = 1 mod 3
  } else if (spec.name == "agl1" || spec.name == "agammal1") {
    spec_order(spec);
    const GaloisField& F = GaloisField::get(P[0]);
    degree = F.q();
    gens.push_back(detail::affine_perm(F, 1, 1));
    if (F.q() > 2) gens.push_back(detail::affine_perm(F, F.primitive(), 0));
    if (spec.name == "agammal1" && F.f() > 1)
      gens.push_back(detail::frobenius_on_field(F));
  } else if (spec.name == "psl" || spec.name == "pgl" || spec.name == "pgammal") {
    spec_order(spec);
    const GaloisField& F = GaloisField::get(P[1]);
    degree = F.q() + 1;
    unsigned g = F.primitive();
    gens.push_back(detail::moebius_perm(F, 1, 1, 0, 1));  // x -> x + 1
    if (spec.name == "psl" && F.q() % 2 == 1) {
      unsigned g2 = F.mul(g, g);
      if (g2 != 1) gens.push_back(detail::moebius_perm(F, g2, 0, 0, 1));
      gens.push_back(detail::moebius_perm(F, 0, F.neg(1), 1, 0));  // x -> -1/x
    } else {
      if (F.q() > 2) gens.push_back(detail::moebius_perm(F, g, 0, 0, 1));
      gens.push_back(detail::moebius_perm(F, 0, 1, 1, 0));  // x -> 1/x
    }
    if (spec.name == "pgammal" && F.f() > 1)
      gens.push_back(detail::frobenius_on_line(F));
  } else if (spec.name == "direct") {
    // Factors act on disjoint blocks of points.
    std::vector<PermGroup> factors;
    std::uint32_t total = 0;
    for (const GroupSpec& part : spec.parts) {
      factors.push_back(make_group(part));
      total += factors.back().degree();
    }
    degree = total;
    std::uint32_t offset = 0;
    for (const PermGroup& f : factors) {
      for (const Permutation& h : f.generators()) {
        std::vector<std::uint32_t> v(total);
        for (std::uint32_t i = 0; i < total; ++i) v[i] = i;
        for (std::uint32_t i = 0; i < f.degree(); ++i) v[offset + i] = offset + h[i];
        gens.push_back(Permutation(std::move(v)));
      }
      offset += f.degree();
    }
  } else {
    fail("unknown group family '" + spec.name + "'");
  }

  PermGroup g(std::move(gens), degree);
  unsigned long long expected = spec_order(spec);
  if (g.order() != expected)
    fail("catalog group " + spec.str() + " built with order " + std::to_string(g.order()) +
         ", expected " + std::to_string(expected));
  return g;
}

inline PermGroup make_group(std::string_view spec_text) {
  return make_group(GroupSpec::parse(spec_text));
}

// The deterministic instantiation list behind order-bounded sweeps. Finite by
// construction; parameter ranges are part of the catalog's contract.
inline std::vector<GroupSpec> catalog_sweep_list(unsigned long long max_order) {
  std::vector<GroupSpec> all;
  auto add = [&all](const std::string& text) { all.push_back(GroupSpec::parse(text)); };
  for (unsigned n = 1; n <= 24; ++n) add("cyclic:" + std::to_string(n));
  for (unsigned n = 2; n <= 7; ++n) add("sym:" + std::to_string(n));
  for (unsigned n = 3; n <= 7; ++n) add("alt:" + std::to_string(n));
  for (unsigned n = 3; n <= 16; ++n) add("dihedral:" + std::to_string(n));
  add("q8");
  add("sl:2:3");
  add("direct:(cyclic:2),(alt:4)");
  add("agl1:8");
  add("agammal1:8");
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 27u}) {
    add("psl:2:" + std::to_string(q));
    add("pgl:2:" + std::to_string(q));
  }
  for (unsigned q : {4u, 8u, 9u, 27u}) add("pgammal:2:" + std::to_string(q));

  std::vector<GroupSpec> out;
  for (GroupSpec& s : all)
    if (spec_order(s) <= max_order) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
    unsigned long long oa = spec_order(a), ob = spec_order(b);
    if (oa != ob) return oa < ob;
    return a.str() < b.str();
  });
  return out;
}

}  // namespace cosets

#endif
