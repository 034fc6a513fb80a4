#include "surreal/formats.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "surreal/canonical.hpp"
#include "surreal/error.hpp"

namespace surreal {

namespace {

std::vector<FormId> display_order(FormStore& store, std::span<const FormId> set) {
  std::vector<std::pair<Dyadic, FormId>> keyed;
  keyed.reserve(set.size());
  for (FormId id : set) keyed.emplace_back(value_of(store, id), id);
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    Generation ga = store.generation(a.second);
    Generation gb = store.generation(b.second);
    if (ga != gb) return ga < gb;
    return a.second < b.second;
  });
  std::vector<FormId> out;
  out.reserve(keyed.size());
  for (auto& [value, id] : keyed) out.push_back(id);
  return out;
}

class Printer {
 public:
  Printer(FormStore& store, std::optional<std::size_t> limit) : store_(store), limit_(limit) {}

  std::string print(FormId x, std::size_t depth) {
    if (limit_ && depth >= *limit_) return "<" + value_of(store_, x).to_string() + ">";
    if (!limit_) {
      if (auto it = memo_.find(x.index); it != memo_.end()) return it->second;
    }
    std::string out = "{ " + print_set(store_.left(x), depth) + " | " +
                      print_set(store_.right(x), depth) + " }";
    if (!limit_) memo_.emplace(x.index, out);
    return out;
  }

 private:
  std::string print_set(std::span<const FormId> set, std::size_t depth) {
    if (set.empty()) return "phi";
    std::string out;
    bool first = true;
    for (FormId id : display_order(store_, set)) {
      if (!first) out += ", ";
      first = false;
      out += print(id, depth + 1);
    }
    return out;
  }

  FormStore& store_;
  std::optional<std::size_t> limit_;
  std::unordered_map<std::uint32_t, std::string> memo_;
};

// Local numbering of the reachable sub-DAG, in id order.
struct LocalDag {
  std::vector<FormId> nodes;
  std::unordered_map<std::uint32_t, std::size_t> local;

  LocalDag(const FormStore& store, FormId root) : nodes(store.reachable(root)) {
    for (std::size_t i = 0; i < nodes.size(); ++i) local.emplace(nodes[i].index, i);
  }
};

std::string record_section(FormStore& store, std::span<const FormId> set) {
  if (set.empty()) return "phi";
  std::string out;
  bool first = true;
  for (FormId id : display_order(store, set)) {
    if (!first) out += ", ";
    first = false;
    out += value_of(store, id).to_string();
  }
  return out;
}

}  // namespace

std::string print_form(FormStore& store, FormId x, std::optional<std::size_t> depth_limit) {
  return Printer(store, depth_limit).print(x, 0);
}

std::string to_dot(FormStore& store, FormId x) {
  LocalDag dag(store, x);
  std::ostringstream out;
  out << "digraph surreal {\n";
  out << "  node [shape=record];\n";
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    FormId id = dag.nodes[i];
    out << "  n" << i << " [label=\"{" << value_of(store, id).to_string() << "|{<L>"
        << record_section(store, store.left(id)) << "|<R>" << record_section(store, store.right(id))
        << "}}\"];\n";
  }
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    FormId id = dag.nodes[i];
    for (FormId p : display_order(store, store.left(id))) {
      out << "  n" << i << ":L -> n" << dag.local.at(p.index) << " [color=red];\n";
    }
    for (FormId p : display_order(store, store.right(id))) {
      out << "  n" << i << ":R -> n" << dag.local.at(p.index) << " [color=blue];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_json(FormStore& store, FormId x) {
  LocalDag dag(store, x);
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    FormId id = dag.nodes[i];
    nlohmann::json left = nlohmann::json::array();
    nlohmann::json right = nlohmann::json::array();
    for (FormId p : store.left(id)) left.push_back(dag.local.at(p.index));
    for (FormId p : store.right(id)) right.push_back(dag.local.at(p.index));
    nodes.push_back({{"id", i},
                     {"left", std::move(left)},
                     {"right", std::move(right)},
                     {"value", value_of(store, id).to_string()},
                     {"generation", store.generation(id)}});
  }
  nlohmann::json doc = {{"format", "surreal-dag"},
                        {"version", 1},
                        {"root", dag.local.at(x.index)},
                        {"nodes", std::move(nodes)}};
  return doc.dump(2) + "\n";
}

namespace {

std::vector<FormId> snapshot_set(const nlohmann::json& node, const char* field, std::size_t self,
                                 const std::vector<FormId>& built) {
  if (!node.contains(field)) {
    throw MalformedSnapshot("node " + std::to_string(self) + " has no '" + field + "'");
  }
  const auto& set = node.at(field);
  if (!set.is_array()) {
    throw MalformedSnapshot("node " + std::to_string(self) + " '" + field + "' is not an array");
  }
  std::vector<FormId> out;
  for (const auto& member : set) {
    if (!member.is_number_unsigned() || member.get<std::uint64_t>() >= self) {
      throw MalformedSnapshot("node " + std::to_string(self) + " '" + field +
                              "' must hold ids of earlier nodes");
    }
    out.push_back(built[member.get<std::size_t>()]);
  }
  return out;
}

}  // namespace

FormId from_json(FormStore& store, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedSnapshot(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedSnapshot("snapshot must be a JSON object");
  if (doc.contains("format") && doc.at("format") != "surreal-dag") {
    throw MalformedSnapshot("unknown snapshot format");
  }
  if (doc.contains("version") && doc.at("version") != 1) {
    throw MalformedSnapshot("unsupported snapshot version");
  }
  if (!doc.contains("nodes") || !doc.at("nodes").is_array() || doc.at("nodes").empty()) {
    throw MalformedSnapshot("snapshot needs a non-empty 'nodes' array");
  }

  const auto& nodes = doc.at("nodes");
  std::vector<FormId> built;
  built.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (!node.is_object()) throw MalformedSnapshot("node " + std::to_string(i) + " is not an object");
    if (!node.contains("id") || !node.at("id").is_number_unsigned() ||
        node.at("id").get<std::uint64_t>() != i) {
      throw MalformedSnapshot("node " + std::to_string(i) + " must carry id " + std::to_string(i));
    }
    auto left = snapshot_set(node, "left", i, built);
    auto right = snapshot_set(node, "right", i, built);
    FormId id;
    try {
      id = store.make_form(std::move(left), std::move(right));
    } catch (const NotANumber& e) {
      throw MalformedSnapshot("node " + std::to_string(i) + " is not a number: " + e.what());
    }
    if (node.contains("generation")) {
      const auto& g = node.at("generation");
      if (!g.is_number_unsigned() || g.get<Generation>() != store.generation(id)) {
        throw MalformedSnapshot("node " + std::to_string(i) + " generation does not match its sets");
      }
    }
    if (node.contains("value")) {
      const auto& v = node.at("value");
      bool ok = false;
      if (v.is_string()) {
        try {
          ok = Dyadic::parse(v.get<std::string>()) == value_of(store, id);
        } catch (const Error&) {
          ok = false;
        }
      }
      if (!ok) throw MalformedSnapshot("node " + std::to_string(i) + " value does not match its sets");
    }
    built.push_back(id);
  }

  std::size_t root = built.size() - 1;
  if (doc.contains("root")) {
    const auto& r = doc.at("root");
    if (!r.is_number_unsigned() || r.get<std::uint64_t>() >= built.size()) {
      throw MalformedSnapshot("'root' must be the id of a node");
    }
    root = r.get<std::size_t>();
  }
  return built[root];
}

}  // namespace surreal
