#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "octekg/lpg.hpp"
#include "support/testing.hpp"

using namespace octekg;
using octekg::testing::ts;

namespace {

PropertyValue atom(const char* s) { return AttributeValue::string(s); }

// the Entity/Event portion of the education example graph
struct EkgFixture {
  Graph g;
  NodeId c1, a1, reified, e1, e2;

  EkgFixture() {
    c1 = g.create_node(labels::Entity, {{props::id, atom("c1")}, {props::type, atom("Course")}});
    a1 = g.create_node(labels::Entity,
                       {{props::id, atom("a1")}, {props::type, atom("Assignment")}});
    reified = g.create_node(
        labels::Entity,
        {{props::id, PropertyValue(AttributeValue::string("c1"), AttributeValue::string("a1"))},
         {props::type,
          PropertyValue(AttributeValue::string("Course"), AttributeValue::string("Assignment"))}});
    e1 = g.create_node(labels::Event,
                       {{props::id, atom("e1")},
                        {props::act, atom("Create Assignment")},
                        {props::time, AttributeValue::time(ts("2023-09-01T08:00:00Z"))}});
    e2 = g.create_node(labels::Event,
                       {{props::id, atom("e2")},
                        {props::act, atom("Read Instructions")},
                        {props::time, AttributeValue::time(ts("2023-09-10T10:00:00Z"))}});
    g.create_edge(c1, a1, edges::rel, {{props::qual, atom("includes")}});
    g.create_edge(reified, c1, edges::derived);
    g.create_edge(reified, a1, edges::derived);
    g.create_edge(e1, a1, edges::corr);
    g.create_edge(e2, a1, edges::corr);
  }
};

}  // namespace

TEST(GraphNodes, CreateNodeAssignsLabelAndIndex) {
  Graph g;
  const NodeId h = g.create_node(labels::Entity,
                                 {{props::id, atom("a1")}, {props::type, atom("Assignment")}});
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.node(h).label, labels::Entity);
  EXPECT_EQ(g.nodes_with_label(labels::Entity), std::vector<NodeId>{h});
  EXPECT_EQ(*g.node_property(h, props::id), atom("a1"));
}

TEST(GraphNodes, ManyCreationsYieldDistinctHandles) {
  Graph g;
  std::set<NodeId> handles;
  for (int i = 0; i < 10000; ++i) handles.insert(g.create_node(labels::Event));
  EXPECT_EQ(handles.size(), 10000u);
  EXPECT_EQ(g.node_count(), 10000u);
}

TEST(GraphNodes, LabelsPartitionTheNodeSet) {
  const EkgFixture f;
  std::set<NodeId> unioned;
  for (const auto& label : f.g.node_labels()) {
    for (NodeId n : f.g.nodes_with_label(label)) EXPECT_TRUE(unioned.insert(n).second);
  }
  EXPECT_EQ(unioned.size(), f.g.node_count());
}

TEST(GraphNodes, EntityLabelSetMatchesFixture) {
  const EkgFixture f;
  EXPECT_EQ(f.g.nodes_with_label(labels::Entity), (std::vector<NodeId>{f.c1, f.a1, f.reified}));
  EXPECT_TRUE(f.g.nodes_with_label("Unknown").empty());
}

TEST(GraphEdges, CreateEdgePopulatesLabelIndex) {
  const EkgFixture f;
  EXPECT_EQ(f.g.edges_with_label(edges::rel).size(), 1u);
  const Edge& e = f.g.edge(f.g.edges_with_label(edges::rel)[0]);
  EXPECT_EQ(e.source, f.c1);
  EXPECT_EQ(e.target, f.a1);
}

TEST(GraphEdges, SelfLoopsAndParallelEdgesAllowed) {
  Graph g;
  const NodeId n = g.create_node(labels::Entity, {{props::id, atom("x")}});
  const NodeId m = g.create_node(labels::Entity, {{props::id, atom("y")}});
  const EdgeId loop = g.create_edge(n, n, edges::rel);
  EXPECT_EQ(g.edge(loop).source, g.edge(loop).target);
  g.create_edge(n, m, edges::rel);
  g.create_edge(n, m, edges::derived);
  g.create_edge(n, m, edges::rel);
  EXPECT_EQ(g.edges_with_label(edges::rel).size(), 3u);
  EXPECT_EQ(g.edges_with_label(edges::derived).size(), 1u);
}

TEST(GraphEdges, DanglingHandleThrows) {
  Graph g;
  const NodeId n = g.create_node(labels::Event);
  EXPECT_THROW(g.create_edge(n, 99, edges::df), GraphError);
  EXPECT_THROW(g.create_edge(99, n, edges::df), GraphError);
}

TEST(GraphEdges, RemoveEdgePurgesCompletely) {
  Graph g;
  const NodeId a = g.create_node(labels::Event);
  const NodeId b = g.create_node(labels::Event);
  const EdgeId e = g.create_edge(a, b, edges::df, {{props::ent, atom("x")}});
  g.remove_edge(e);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_TRUE(g.edges_with_label(edges::df).empty());
  EXPECT_FALSE(g.edge_alive(e));
  EXPECT_THROW(g.edge(e), GraphError);
  EXPECT_THROW(g.edge_property(e, props::ent), GraphError);
  EXPECT_THROW(g.remove_edge(e), GraphError);
}

TEST(GraphEdges, RemovingOneParallelEdgeKeepsTheOther) {
  Graph g;
  const NodeId a = g.create_node(labels::Event);
  const NodeId b = g.create_node(labels::Event);
  const EdgeId first = g.create_edge(a, b, edges::df, {{props::ent, atom("x")}});
  const EdgeId second = g.create_edge(a, b, edges::df, {{props::ent, atom("y")}});
  g.remove_edge(first);
  EXPECT_EQ(g.edges_with_label(edges::df), std::vector<EdgeId>{second});
  EXPECT_EQ(*g.edge_property(second, props::ent), atom("y"));
}

TEST(PropertyValues, StructuralEqualityAndShapes) {
  const PropertyValue a(AttributeValue::string("a1"), AttributeValue::time(ts("2023-09-01T08:00:00Z")));
  const PropertyValue b(AttributeValue::string("a1"), AttributeValue::time(ts("2023-09-01T08:00:00Z")));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.is_pair());
  EXPECT_FALSE(a.is_atom());

  const PropertyValue pp({AttributeValue::string("c1"), AttributeValue::time(ts("2023-09-01T08:00:00Z"))},
                         {AttributeValue::string("a1"), AttributeValue::time(ts("2023-09-01T08:00:00Z"))});
  EXPECT_TRUE(pp.is_pair_of_pairs());
  EXPECT_NE(a, pp);
}

TEST(Flatten, CanonicalFormsAndEscaping) {
  EXPECT_EQ(flatten(atom("a1")), "a1");
  EXPECT_EQ(flatten(PropertyValue(AttributeValue::string("c1"), AttributeValue::string("a1"))),
            "(c1,a1)");
  EXPECT_EQ(flatten(PropertyValue(AttributeValue::string("a1"),
                                  AttributeValue::time(ts("2023-09-01T08:00:00Z")))),
            "(a1,2023-09-01T08:00:00.000Z)");
  // delimiters inside atoms stay distinguishable from structure
  EXPECT_EQ(flatten(atom("(a,b)")), "\\(a\\,b\\)");
  EXPECT_NE(flatten(atom("(a,b)")),
            flatten(PropertyValue(AttributeValue::string("a"), AttributeValue::string("b"))));
}

TEST(Schema, TemporalSchemaExtendsBase) {
  const auto base = ekg_schema();
  const auto temporal = tekg_schema();
  EXPECT_EQ(base.size(), 7u);
  EXPECT_EQ(temporal.size(), 11u);
  for (const auto& triple : base) {
    EXPECT_NE(std::find(temporal.begin(), temporal.end(), triple), temporal.end());
  }
}

TEST(Schema, ConformingTemporalGraph) {
  Graph g;
  const NodeId log_node = g.create_node(labels::Log);
  const NodeId cls = g.create_node(labels::Class, {{props::id, atom("A")}, {props::type, atom("A")}});
  const NodeId event = g.create_node(labels::Event,
                                     {{props::id, atom("e1")},
                                      {props::act, atom("A")},
                                      {props::time, AttributeValue::time(ts("2024-01-01T00:00:00Z"))}});
  const NodeId entity = g.create_node(labels::Entity,
                                      {{props::id, atom("o1")}, {props::type, atom("T")}});
  const PropertyValue snap_id(AttributeValue::string("o1"),
                              AttributeValue::time(ts("2024-01-01T00:00:00Z")));
  const NodeId snap = g.create_node(labels::Snapshot,
                                    {{props::id, snap_id},
                                     {props::type, atom("T")},
                                     {props::time, AttributeValue::time(ts("2024-01-01T00:00:00Z"))}});
  g.create_edge(log_node, event, edges::has);
  g.create_edge(event, cls, edges::observed);
  g.create_edge(event, entity, edges::corr);
  g.create_edge(event, snap, edges::corr);
  g.create_edge(entity, snap, edges::snapshot);
  g.create_edge(snap, snap, edges::rel);
  g.create_edge(entity, entity, edges::rel);
  g.create_edge(event, event, edges::df);

  EXPECT_TRUE(conforms_to(g, tekg_schema()).empty());
  EXPECT_TRUE(validate_node_contracts(g).empty());

  // the df and rel edges alone also satisfy the base schema; corr to a
  // snapshot does not
  EXPECT_FALSE(conforms_to(g, ekg_schema()).empty());
}

TEST(Schema, BaseConformingGraphAlsoConformsToTemporalSchema) {
  Graph g;
  const NodeId log_node = g.create_node(labels::Log);
  const NodeId cls = g.create_node(labels::Class);
  const NodeId event = g.create_node(labels::Event);
  const NodeId entity = g.create_node(labels::Entity);
  g.create_edge(log_node, event, edges::has);
  g.create_edge(event, cls, edges::observed);
  g.create_edge(event, entity, edges::corr);
  g.create_edge(entity, entity, edges::rel);
  g.create_edge(event, event, edges::df);
  g.create_edge(cls, cls, edges::dfc);
  ASSERT_TRUE(conforms_to(g, ekg_schema()).empty());
  EXPECT_TRUE(conforms_to(g, tekg_schema()).empty());
}

TEST(Schema, ReversedCorrEdgeViolates) {
  Graph g;
  const NodeId event = g.create_node(labels::Event);
  const NodeId entity = g.create_node(labels::Entity);
  g.create_edge(entity, event, edges::corr);  // wrong direction
  const auto violations = conforms_to(g, tekg_schema());
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].found.source_label, labels::Entity);
  EXPECT_EQ(violations[0].found.edge_label, edges::corr);
  EXPECT_EQ(violations[0].found.target_label, labels::Event);
}

TEST(Schema, SnapshotToEntitySnapshotEdgeViolates) {
  Graph g;
  const NodeId entity = g.create_node(labels::Entity);
  const NodeId snap = g.create_node(labels::Snapshot);
  g.create_edge(snap, entity, edges::snapshot);  // only (Entity, snapshot, Snapshot) is admissible
  EXPECT_EQ(conforms_to(g, tekg_schema()).size(), 1u);
}

TEST(NodeContracts, MissingEventPropertiesAreReported) {
  Graph g;
  g.create_node(labels::Event, {{props::id, atom("e1")}});
  EXPECT_FALSE(validate_node_contracts(g).empty());
}

TEST(NodeContracts, ReifiedShapesAreChecked) {
  Graph g;
  // reified entity with pair id and pair type: fine
  g.create_node(labels::Entity,
                {{props::id, PropertyValue(AttributeValue::string("a"), AttributeValue::string("b"))},
                 {props::type, PropertyValue(AttributeValue::string("T"), AttributeValue::string("U"))}});
  EXPECT_TRUE(validate_node_contracts(g).empty());

  // snapshot id must pair an object with a timestamp
  g.create_node(labels::Snapshot,
                {{props::id, PropertyValue(AttributeValue::string("a"), AttributeValue::string("b"))},
                 {props::type, atom("T")}});
  EXPECT_FALSE(validate_node_contracts(g).empty());
}
