#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qpos/expansion.hpp"
#include "qpos/poset.hpp"
#include "qpos/qpoly.hpp"
#include "qpos/qsym.hpp"

namespace qpos {

// On-disk poset description. Relations need not be covers or transitively
// closed; closure happens when the poset is built.
struct PosetDocument {
  int n = 0;
  std::vector<std::pair<int, int>> relations;
  std::string name;
  bool operator==(const PosetDocument& o) const = default;
};

// Accepts either JSON {"n":4,"name":"K22","relations":[[1,3],...]} or the
// one-line form "4: 1<3 1<4 2<3 2<4". ParseError on malformed text.
PosetDocument parse_poset_document(const std::string& text);

std::string to_json(const PosetDocument& doc);
std::string to_dsl(const PosetDocument& doc);

Poset build_poset(const PosetDocument& doc);  // CycleError/IndexError propagate
PosetDocument document_of(const Poset& p, std::string name = "");

enum class Basis { monomial, fundamental };

// Term order everywhere: weight, then length, then lexicographic.
std::string render_text(const QSym& f, Basis basis);
std::string render_json(const QSym& f, Basis basis);
std::string render_text(const QPoly& p);
std::string render_json(const QPoly& p);
std::string render_text(const TruncatedExpansion& e);
std::string render_json(const TruncatedExpansion& e);

}  // namespace qpos
