#pragma once

// Text, graph and snapshot renderings of a form's DAG.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "surreal/form_store.hpp"

namespace surreal {

// Fully expanded "{ L | R }" notation with "phi" for empty sets. Members of a
// set are listed by value, then generation, then id.
//
// With a depth limit, subforms nested depth_limit levels below the root are
// abbreviated to their value in angle brackets, e.g. "<3/2>". Abbreviated
// output does not parse back.
std::string print_form(FormStore& store, FormId x, std::optional<std::size_t> depth_limit = {});

// Graphviz digraph with one record box per distinct reachable form: value on
// top, left set bottom-left, right set bottom-right. Left-parent edges are red,
// right-parent edges blue. Boxes are numbered n0, n1, ... in id order, so the
// output depends only on the DAG.
std::string to_dot(FormStore& store, FormId x);

// {"format": "surreal-dag", "version": 1, "root": r,
//  "nodes": [{"id", "left": [ids], "right": [ids], "value", "generation"}, ...]}
// Nodes are renumbered 0..N-1 in topological order; every set member refers
// to an earlier node.
std::string to_json(FormStore& store, FormId x);

// Re-interns a snapshot and returns its root. "value" and "generation" are
// optional, but must match the rebuilt form when present. Throws
// MalformedSnapshot on any schema violation or non-numeric node.
FormId from_json(FormStore& store, std::string_view text);

}  // namespace surreal
