#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octekg/df_builder.hpp"
#include "octekg/export.hpp"
#include "octekg/ocel_json.hpp"
#include "octekg/transform.hpp"

namespace py = pybind11;
using namespace octekg;

namespace {

py::object atom_to_py(const AttributeValue& atom) {
  switch (atom.type()) {
    case ValueType::String: return py::cast(atom.as_string());
    case ValueType::Integer: return py::cast(atom.as_integer());
    case ValueType::Real: return py::cast(atom.as_real());
    case ValueType::Boolean: return py::cast(atom.as_boolean());
    case ValueType::Time: return py::cast(atom.as_time().to_iso8601());
  }
  return py::none();
}

py::object property_to_py(const PropertyValue& value) {
  if (value.is_atom()) return atom_to_py(value.atom());
  if (value.is_pair()) {
    return py::make_tuple(atom_to_py(value.pair().first), atom_to_py(value.pair().second));
  }
  const auto& [a, b] = value.pair_of_pairs();
  return py::make_tuple(py::make_tuple(atom_to_py(a.first), atom_to_py(a.second)),
                        py::make_tuple(atom_to_py(b.first), atom_to_py(b.second)));
}

py::dict properties_to_py(const PropertyMap& properties) {
  py::dict out;
  for (const auto& [key, value] : properties) out[py::cast(key)] = property_to_py(value);
  return out;
}

Timestamp parse_time_arg(const std::string& iso) {
  auto t = Timestamp::parse(iso);
  if (!t) throw py::value_error("unparseable timestamp: " + iso);
  return *t;
}

}  // namespace

PYBIND11_MODULE(_octekg, m) {
  m.doc() = "OCEL 2.0 to temporal event knowledge graph transformation";

  // translators run newest-first, so the base goes in before the subtypes
  py::register_exception<Error>(m, "OctekgError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "OcelParseError", PyExc_ValueError);
  py::register_exception<LogInvalidError>(m, "LogInvalidError", PyExc_ValueError);
  py::register_exception<LookupError>(m, "OcelLookupError", PyExc_KeyError);
  py::register_exception<GraphError>(m, "GraphHandleError", PyExc_IndexError);

  py::class_<OcelLog>(m, "OcelLog")
      .def_property_readonly("event_count", [](const OcelLog& log) { return log.events().size(); })
      .def_property_readonly("object_count",
                             [](const OcelLog& log) { return log.objects().size(); })
      .def_property_readonly("e2o_count", [](const OcelLog& log) { return log.e2o().size(); })
      .def_property_readonly("o2o_count", [](const OcelLog& log) { return log.o2o().size(); })
      .def("event_ids",
           [](const OcelLog& log) {
             std::vector<std::string> out;
             for (const auto& e : log.events()) out.push_back(e.id);
             return out;
           })
      .def("object_ids",
           [](const OcelLog& log) {
             std::vector<std::string> out;
             for (const auto& o : log.objects()) out.push_back(o.id);
             return out;
           })
      .def("observed_event_types",
           [](const OcelLog& log) { return observed_event_types(log); })
      .def(
          "resolve_attribute_at",
          [](const OcelLog& log, const std::string& object_id, const std::string& attribute,
             const std::string& at) -> py::object {
            auto value = resolve_attribute_at(log, object_id, attribute, parse_time_arg(at));
            if (!value) return py::none();
            return atom_to_py(*value);
          },
          py::arg("object_id"), py::arg("attribute"), py::arg("at"),
          "Latest value at or before the ISO-8601 instant, or None.")
      .def("change_times",
           [](const OcelLog& log, const std::string& object_id) {
             std::vector<std::string> out;
             for (const Timestamp& t : change_times(log, object_id)) out.push_back(t.to_iso8601());
             return out;
           })
      .def("validate", [](const OcelLog& log) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : validate_log(log)) out.emplace_back(v.constraint, v.message);
        return out;
      });

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("node_labels", &Graph::node_labels)
      .def("edge_labels", &Graph::edge_labels)
      .def("nodes_with_label",
           [](const Graph& g, const std::string& label) { return g.nodes_with_label(label); })
      .def("edges_with_label",
           [](const Graph& g, const std::string& label) { return g.edges_with_label(label); })
      .def("node_label", [](const Graph& g, NodeId id) { return g.node(id).label; })
      .def("node_properties",
           [](const Graph& g, NodeId id) { return properties_to_py(g.node(id).properties); })
      .def("edge",
           [](const Graph& g, EdgeId id) {
             const Edge& e = g.edge(id);
             py::dict out;
             out["source"] = e.source;
             out["target"] = e.target;
             out["label"] = e.label;
             out["properties"] = properties_to_py(e.properties);
             return out;
           })
      .def("__repr__", [](const Graph& g) {
        return "<octekg.Graph nodes=" + std::to_string(g.node_count()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse_ocel_json", [](const std::string& text) { return parse_ocel_json(text); },
        py::arg("text"), "Parse an OCEL 2.0 JSON document into a log.");
  m.def("write_ocel_json", &write_ocel_json, py::arg("log"));
  m.def(
      "transform",
      [](const OcelLog& log, bool reify_update_edges, bool include_class_dfc) {
        TransformConfig config;
        config.reify_update_edges = reify_update_edges;
        config.include_class_dfc = include_class_dfc;
        return transform(log, config);
      },
      py::arg("log"), py::arg("reify_update_edges") = false, py::arg("include_class_dfc") = false,
      "Build the temporal event knowledge graph for a validated log.");
  m.def("add_dfs", &add_dfs, py::arg("graph"),
        "Add directly-follows edges to a graph with corr edges.");
  m.def(
      "conforms_to_tekg",
      [](const Graph& graph) {
        std::vector<std::string> out;
        for (const auto& v : conforms_to(graph, tekg_schema())) {
          out.push_back("edge " + std::to_string(v.edge) + ": (" + v.found.source_label + ", " +
                        v.found.edge_label + ", " + v.found.target_label + ")");
        }
        return out;
      },
      py::arg("graph"), "Schema violations against the temporal schema; empty when conforming.");
  m.def("validate_node_contracts",
        [](const Graph& graph) { return validate_node_contracts(graph); });
  m.def(
      "export_graph",
      [](const Graph& graph, const std::string& format) {
        auto f = export_format_from_name(format);
        if (!f) throw py::value_error("unknown export format: " + format);
        return export_graph(graph, *f);
      },
      py::arg("graph"), py::arg("format"), "Serialize to 'cypher', 'graphml' or 'jsonl'.");
  m.def("stats_json",
        [](const Graph& graph) { return stats_to_json(compute_stats(graph)); });

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
