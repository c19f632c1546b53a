#include "qpos/io.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

#include "qpos/errors.hpp"

namespace qpos {

namespace {

using ordered_json = nlohmann::ordered_json;

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

PosetDocument parse_json_document(const std::string& text) {
  PosetDocument doc;
  try {
    auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) {
      throw ParseError("missing integer field \"n\"");
    }
    doc.n = j["n"].get<int>();
    if (j.contains("relations")) {
      if (!j["relations"].is_array()) throw ParseError("\"relations\" must be an array");
      for (const auto& e : j["relations"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
          throw ParseError("each relation must be a pair of integers");
        }
        doc.relations.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    }
    if (j.contains("name")) {
      if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
      doc.name = j["name"].get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return doc;
}

PosetDocument parse_dsl_document(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("expected \"n: i<j i<j ...\"");
  }
  PosetDocument doc;
  std::string head = text.substr(0, colon);
  std::istringstream hs(head);
  std::string headtok;
  hs >> headtok;
  std::string rest;
  if (hs >> rest) throw ParseError("expected a single integer before ':'");
  doc.n = parse_int(headtok);
  std::istringstream ts(text.substr(colon + 1));
  std::string tok;
  while (ts >> tok) {
    auto lt = tok.find('<');
    if (lt == std::string::npos) throw ParseError("expected \"i<j\", got '" + tok + "'");
    doc.relations.emplace_back(parse_int(std::string_view(tok).substr(0, lt)),
                               parse_int(std::string_view(tok).substr(lt + 1)));
  }
  return doc;
}

ordered_json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<long>(v.get_si());
  return v.get_str();
}

ordered_json coeff_array(const QPoly& c) {
  auto arr = ordered_json::array();
  for (int e = 0; e <= c.degree(); ++e) arr.push_back(mpz_json(c.coeff(e)));
  return arr;
}

ordered_json qsym_terms_json(const std::map<Composition, QPoly>& terms) {
  auto arr = ordered_json::array();
  for (const auto& [alpha, c] : terms) {
    ordered_json t;
    t["alpha"] = alpha.parts();
    t["coeff"] = coeff_array(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

}  // namespace

PosetDocument parse_poset_document(const std::string& text) {
  size_t at = text.find_first_not_of(" \t\r\n");
  if (at == std::string::npos) throw ParseError("empty poset document");
  if (text[at] == '{') return parse_json_document(text);
  return parse_dsl_document(text);
}

std::string to_json(const PosetDocument& doc) {
  ordered_json j;
  j["n"] = doc.n;
  if (!doc.name.empty()) j["name"] = doc.name;
  auto rels = ordered_json::array();
  for (auto [i, k] : doc.relations) rels.push_back(ordered_json::array({i, k}));
  j["relations"] = std::move(rels);
  return j.dump();
}

std::string to_dsl(const PosetDocument& doc) {
  std::ostringstream os;
  os << doc.n << ':';
  for (auto [i, j] : doc.relations) os << ' ' << i << '<' << j;
  return os.str();
}

Poset build_poset(const PosetDocument& doc) {
  return Poset::from_relations(doc.n, doc.relations);
}

PosetDocument document_of(const Poset& p, std::string name) {
  PosetDocument doc;
  doc.n = p.size();
  doc.relations = cover_pairs(p);
  doc.name = std::move(name);
  return doc;
}

std::string render_text(const QSym& f, Basis basis) {
  if (basis == Basis::monomial) return f.to_string("M");
  QSym holder;
  for (const auto& [alpha, c] : to_fundamental(f)) holder.add_term(alpha, c);
  return holder.to_string("L");
}

std::string render_json(const QSym& f, Basis basis) {
  ordered_json j;
  if (basis == Basis::monomial) {
    j["basis"] = "M";
    j["terms"] = qsym_terms_json(f.terms());
  } else {
    j["basis"] = "L";
    j["terms"] = qsym_terms_json(to_fundamental(f));
  }
  return j.dump();
}

std::string render_text(const QPoly& p) { return p.to_string(); }

std::string render_json(const QPoly& p) {
  ordered_json j;
  j["coefficients"] = coeff_array(p);
  return j.dump();
}

std::string render_text(const TruncatedExpansion& e) { return e.to_string(); }

std::string render_json(const TruncatedExpansion& e) {
  ordered_json j;
  j["m"] = e.variables();
  auto arr = ordered_json::array();
  for (const auto& [exps, c] : e.monomials()) {
    ordered_json t;
    t["exponents"] = exps;
    t["coeff"] = coeff_array(c);
    arr.push_back(std::move(t));
  }
  j["terms"] = std::move(arr);
  return j.dump();
}

}  // namespace qpos
