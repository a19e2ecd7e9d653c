#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "hopfrec/errors.hpp"
#include "hopfrec/examples.hpp"
#include "hopfrec/fusion.hpp"
#include "hopfrec/hopf.hpp"
#include "hopfrec/repcat.hpp"

// Text format: a JSON object with a "kind" field. Scalars are strings "p" or
// "p/q"; a cyclotomic scalar is {"conductor": n, "coeffs": ["p", ...]} in
// the power basis of Q(zeta_n). Tensors are nested arrays.
//
//   hopf:    dim, mult[i][j][k], unit[k], comult[i][j][k], counit[i],
//            antipode[j][i] (column i is S(e_i)), optional basis[p] = [a,i,j]
//   fusion:  simples, unit, dual[a], fusion[a][b][c], assoc[a][b][c][d]
//            (each a matrix, [] when empty)
//   fiber:   dims[a], iota, tensorator[a][b] (a matrix), ev[a], coev[a]
//   modules: algebra_dim, modules[] = {label, dim, action[i] (a matrix)}
//   group:   names, table[a][b]
//
// A matrix is an array of rows. Unknown fields are rejected.

namespace hopfrec {

struct HopfDocument {
  HopfPresentation hopf;
  /// Labels (a, i, j) of a matrix-unit basis; empty when absent.
  std::vector<std::array<std::size_t, 3>> basis;

  friend bool operator==(const HopfDocument&, const HopfDocument&) = default;
};

struct ModulesDocument {
  std::size_t algebra_dim = 0;
  std::vector<ModuleRep> modules;

  friend bool operator==(const ModulesDocument&, const ModulesDocument&) = default;
};

using Document =
    std::variant<HopfDocument, FusionSkeleton, FiberData, ModulesDocument, GroupTable>;

/// "hopf", "fusion", "fiber", "modules" or "group".
std::string document_kind(const Document& doc);

/// Throws ParseError (syntax, malformed scalar) or SchemaError.
Document parse_document(const std::string& text);
std::string serialize(const Document& doc);

/// Reads and parses a file; an unreadable file raises hopfrec::Error.
Document load_document(const std::string& path);
void save_document(const std::string& path, const Document& doc);

/// parse_document and require the given alternative; SchemaError on "kind".
template <class T>
T parse_as(const std::string& text) {
  Document d = parse_document(text);
  if (!std::holds_alternative<T>(d))
    throw SchemaError("kind", "unexpected document kind '" + document_kind(d) + "'");
  return std::get<T>(std::move(d));
}

template <class T>
T load_as(const std::string& path) {
  Document d = load_document(path);
  if (!std::holds_alternative<T>(d))
    throw SchemaError("kind", "unexpected document kind '" + document_kind(d) + "' in " + path);
  return std::get<T>(std::move(d));
}

/// Shipped example by name (see example_names()). Throws hopfrec::Error for
/// an unknown name.
Document named_example(const std::string& name);

}  // namespace hopfrec
