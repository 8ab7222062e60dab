#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chowlab/chow.hpp"
#include "chowlab/codes.hpp"
#include "chowlab/fans.hpp"
#include "chowlab/lattice.hpp"
#include "chowlab/matroid.hpp"
#include "chowlab/symfunc.hpp"

namespace chowlab {

using json = nlohmann::json;

// --- matroids ---------------------------------------------------------------

/// {"family":"boolean","n":N}, {"family":"uniform","n":N,"r":R} or
/// {"n":N,"bases":[[1,2],...]}.
inline Matroid matroid_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InputError("matroid JSON must be an object");
    if (!j.contains("n")) throw InputError("matroid JSON needs \"n\"");
    const int n = j.at("n").get<int>();
    if (j.contains("family")) {
      const std::string fam = j.at("family").get<std::string>();
      if (fam == "boolean") return make_boolean(n);
      if (fam == "uniform") {
        if (!j.contains("r")) throw InputError("uniform matroid needs \"r\"");
        return make_uniform(n, j.at("r").get<int>());
      }
      throw InputError("unknown matroid family '" + fam + "'");
    }
    if (!j.contains("bases")) throw InputError("matroid JSON needs \"family\" or \"bases\"");
    std::vector<Subset> bases;
    for (const json& b : j.at("bases")) {
      Subset s;
      for (const json& e : b) {
        const int x = e.get<int>();
        if (x < 1 || x > n) throw InputError("basis element " + std::to_string(x) + " outside 1.." + std::to_string(n));
        s.insert(x);
      }
      bases.push_back(s);
    }
    return from_bases(n, std::move(bases));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed matroid JSON: ") + e.what());
  }
}

/// "boolean:N", "uniform:N,R", or the path of a JSON file.
inline Matroid parse_matroid_spec(const std::string& spec) {
  auto ints = [&](const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("bad integer '" + tok + "' in matroid spec '" + spec + "'");
      }
    }
    return v;
  };
  if (spec.rfind("boolean:", 0) == 0) {
    const auto v = ints(spec.substr(8));
    if (v.size() != 1) throw InputError("expected boolean:N");
    return make_boolean(v[0]);
  }
  if (spec.rfind("uniform:", 0) == 0) {
    const auto v = ints(spec.substr(8));
    if (v.size() != 2) throw InputError("expected uniform:N,R");
    return make_uniform(v[0], v[1]);
  }
  std::ifstream in(spec);
  if (!in) throw InputError("cannot open matroid file '" + spec + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("matroid file '" + spec + "' is not JSON: " + e.what());
  }
  return matroid_from_json(j);
}

inline json to_json(Subset s) { return s.members(); }

inline json to_json(const Matroid& m) {
  json bases = json::array();
  for (Subset b : m.bases()) bases.push_back(to_json(b));
  return {{"n", m.n()}, {"bases", bases}};
}

// --- bases and monomials ----------------------------------------------------

inline json to_json(const FYMonomial& u) {
  json chain = json::array();
  for (Subset f : u.chain) chain.push_back(to_json(f));
  return {{"chain", chain}, {"exps", u.exps}};
}

/// One object per degree: {"degree": d, "monomials": [...]}.
inline json to_json(const GradedBasis<Subset>& b) {
  json out = json::array();
  for (const auto& [d, v] : b.by_degree) {
    json mons = json::array();
    for (const FYMonomial& u : v) mons.push_back(to_json(u));
    out.push_back({{"degree", d}, {"monomials", mons}});
  }
  return out;
}

inline FYMonomial monomial_from_json(const json& j) {
  FYMonomial u;
  for (const json& f : j.at("chain")) {
    Subset s;
    for (const json& e : f) s.insert(e.get<int>());
    u.chain.push_back(s);
  }
  u.exps = j.at("exps").get<std::vector<int>>();
  if (u.exps.size() != u.chain.size()) throw InputError("monomial: chain and exps differ in length");
  return u;
}

/// Parses "x_{14}x_{1247}x_{1245679}^2" (braces optional for one digit,
/// elements 1..9 written as digits, larger ones comma-separated inside
/// braces) or "1".
inline FYMonomial parse_monomial(const std::string& text) {
  FYMonomial u;
  if (text == "1") return u;
  std::size_t i = 0;
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c) {
      throw InputError("monomial '" + text + "': expected '" + std::string(1, c) + "' at " + std::to_string(i));
    }
    ++i;
  };
  while (i < text.size()) {
    expect('x');
    expect('_');
    Subset s;
    if (i < text.size() && text[i] == '{') {
      const std::size_t close = text.find('}', ++i);
      if (close == std::string::npos) throw InputError("monomial '" + text + "': unterminated '{'");
      const std::string body = text.substr(i, close - i);
      if (body.find(',') != std::string::npos) {
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) s.insert(std::stoi(tok));
      } else {
        for (std::size_t k = 0; k < body.size(); ++k) {
          if (body[k] == '(') {
            const std::size_t end = body.find(')', k);
            if (end == std::string::npos) throw InputError("monomial '" + text + "': unterminated '('");
            s.insert(std::stoi(body.substr(k + 1, end - k - 1)));
            k = end;
          } else if (body[k] >= '1' && body[k] <= '9') {
            s.insert(body[k] - '0');
          } else {
            throw InputError("monomial '" + text + "': bad element '" + body[k] + "'");
          }
        }
      }
      i = close + 1;
    } else {
      if (i >= text.size() || text[i] < '1' || text[i] > '9') throw InputError("monomial '" + text + "': bad flat");
      s.insert(text[i++] - '0');
    }
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t used = 0;
      e = std::stoi(text.substr(i), &used);
      i += used;
    }
    u.chain.push_back(s);
    u.exps.push_back(e);
  }
  for (std::size_t k = 1; k < u.chain.size(); ++k) {
    if (!u.chain[k - 1].is_proper_subset_of(u.chain[k])) throw InputError("monomial '" + text + "': not a chain");
  }
  return u;
}

// --- codes --------------------------------------------------------------------

/// {"alpha":[1,1,0,"inf"], "f":{"1":1}}
template <bool E>
json to_json(const BasicCode<E>& c) {
  json alpha = json::array();
  for (int a : c.alpha) {
    if (a == kInfinity) alpha.push_back("inf");
    else alpha.push_back(a);
  }
  json f = json::object();
  for (std::size_t k = 0; k < c.marks.size(); ++k) f[std::to_string(k + 1)] = c.marks[k];
  return {{"alpha", alpha}, {"f", f}};
}

template <bool E>
BasicCode<E> code_from_json(const json& j) {
  try {
    BasicCode<E> c;
    for (const json& a : j.at("alpha")) {
      if (a.is_string()) {
        if (a.template get<std::string>() != "inf") throw InputError("alpha entries are integers or \"inf\"");
        c.alpha.push_back(kInfinity);
      } else {
        c.alpha.push_back(a.template get<int>());
      }
    }
    c.marks.assign(static_cast<std::size_t>(c.max_letter()), 0);
    for (const auto& [k, v] : j.at("f").items()) {
      const int letter = std::stoi(k);
      if (letter < 1 || letter > c.max_letter()) throw InputError("mark for absent letter " + k);
      c.marks[letter - 1] = v.template get<int>();
    }
    validate(c);
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed code JSON: ") + e.what());
  }
}

// --- symmetric functions ------------------------------------------------------

/// [{"lambda":[2,1],"coeff":1}, ...]
inline json to_json(const HPolynomial& p) {
  json out = json::array();
  for (const auto& [l, c] : p.terms()) out.push_back({{"lambda", l.parts()}, {"coeff", c}});
  return out;
}

/// Array indexed by t-degree.
inline json to_json(const TGradedSym& q) {
  json out = json::array();
  const int top = q.by_t.empty() ? -1 : q.by_t.rbegin()->first;
  for (int j = 0; j <= top; ++j) out.push_back(to_json(q.slice(j)));
  return out;
}

// --- lattices and fans --------------------------------------------------------

/// {"nodes":[{"id":0,"label":"{}","rank":0},...], "covers":[[0,1],...]}
inline json to_json(const FiniteLattice& l) {
  json nodes = json::array();
  for (int i = 0; i < l.size(); ++i) nodes.push_back({{"id", i}, {"label", l.label(i).to_string()}, {"rank", l.rank(i)}});
  json covers = json::array();
  for (auto [a, b] : l.covers()) covers.push_back({a, b});
  return {{"nodes", nodes}, {"covers", covers}};
}

inline json to_json(const BergmanCone& c) {
  json flag = json::array();
  for (Subset f : c.flag) flag.push_back(to_json(f));
  return {{"flag", flag}, {"rays", c.rays}};
}

inline json to_json(const AugmentedCone& c) {
  json flag = json::array();
  for (Subset f : c.pair.flag) flag.push_back(to_json(f));
  return {{"I", to_json(c.pair.independent)}, {"flag", flag}, {"rays", c.rays}};
}

}  // namespace chowlab
