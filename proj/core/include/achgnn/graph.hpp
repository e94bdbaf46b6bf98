#pragma once

#include <Eigen/Dense>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace achgnn {

enum class NodeKind : std::uint8_t { Paper = 0, Author = 1 };

struct NodeId {
  NodeKind kind{NodeKind::Paper};
  std::uint32_t index{0};

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

inline NodeId paper_node(std::uint32_t i) { return {NodeKind::Paper, i}; }
inline NodeId author_node(std::uint32_t i) { return {NodeKind::Author, i}; }

using AspectId = std::uint32_t;

// Ordered (seed, recommendation, aspect) triple as listed in the dataset.
// The seed side is the query during training and evaluation.
struct LabeledPair {
  std::uint32_t query{0};
  std::uint32_t candidate{0};
  AspectId aspect{0};

  friend auto operator<=>(const LabeledPair&, const LabeledPair&) = default;
};

enum class Severity { Error, Warning };

struct ValidationIssue {
  Severity severity{Severity::Error};
  std::string message;
  std::string location;
};

// Heterogeneous paper/author graph. Immutable after construction; adjacency
// lists are kept sorted ascending so traversal and aggregation order is
// deterministic. Citations are stored symmetrized and self-loop free.
// Aspect-labeled pairs never feed message passing; they are supervision only.
class HeteroGraph {
 public:
  HeteroGraph() = default;

  // Feature matrices are (num_nodes x dim); both kinds share one dim.
  HeteroGraph(Eigen::MatrixXd paper_features, Eigen::MatrixXd author_features,
              std::uint32_t num_aspects);

  std::uint32_t num_papers() const { return static_cast<std::uint32_t>(paper_features_.rows()); }
  std::uint32_t num_authors() const { return static_cast<std::uint32_t>(author_features_.rows()); }
  std::uint32_t feature_dim() const { return static_cast<std::uint32_t>(paper_features_.cols()); }
  std::uint32_t num_aspects() const { return num_aspects_; }

  const Eigen::MatrixXd& paper_features() const { return paper_features_; }
  const Eigen::MatrixXd& author_features() const { return author_features_; }

  Eigen::VectorXd node_features(NodeId v) const {
    return v.kind == NodeKind::Paper ? paper_features_.row(v.index).transpose()
                                     : author_features_.row(v.index).transpose();
  }

  const std::vector<std::uint32_t>& citation_neighbors(std::uint32_t paper) const {
    return citation_adj_[paper];
  }
  const std::vector<std::uint32_t>& paper_authors(std::uint32_t paper) const {
    return paper_authors_[paper];
  }
  const std::vector<std::uint32_t>& author_papers(std::uint32_t author) const {
    return author_papers_[author];
  }

  std::size_t num_citation_edges() const;    // undirected edge count
  std::size_t num_authorship_edges() const;  // author-paper pair count

  // Canonical unordered triple set (min, max, aspect), sorted, duplicate free.
  const std::vector<LabeledPair>& aspect_edges() const { return aspect_edges_; }
  // Ordered pairs exactly as ingested (seed first), exact duplicates dropped.
  const std::vector<LabeledPair>& aspect_pairs() const { return aspect_pairs_; }

  bool has_aspect_edge(std::uint32_t a, std::uint32_t b, AspectId aspect) const;

  const std::vector<std::string>& aspect_names() const { return aspect_names_; }
  std::optional<AspectId> resolve_aspect(const std::string& name) const;

  // Directed citation sidecar, retained when the input declared direction.
  // Used only by coupling diagnostics; the message-passing graph stays
  // undirected either way.
  const std::optional<std::vector<std::pair<std::uint32_t, std::uint32_t>>>& directed_citations() const {
    return directed_citations_;
  }

  // Mutating construction API, used by the loader and the synthetic
  // generator. Callers must finalize() before handing the graph out.
  void add_citation(std::uint32_t a, std::uint32_t b);
  void add_authorship(std::uint32_t author, std::uint32_t paper);
  void add_aspect_pair(const LabeledPair& pair);
  void set_aspect_names(std::vector<std::string> names);
  void set_directed_citations(std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
  // Sorts and deduplicates adjacency; reports dropped duplicates/self-loops.
  void finalize(std::vector<ValidationIssue>* issues = nullptr);

 private:
  Eigen::MatrixXd paper_features_;
  Eigen::MatrixXd author_features_;
  std::uint32_t num_aspects_{0};
  std::vector<std::string> aspect_names_;

  std::vector<std::vector<std::uint32_t>> citation_adj_;
  std::vector<std::vector<std::uint32_t>> paper_authors_;
  std::vector<std::vector<std::uint32_t>> author_papers_;

  std::vector<LabeledPair> aspect_edges_;
  std::vector<LabeledPair> aspect_pairs_;

  std::optional<std::vector<std::pair<std::uint32_t, std::uint32_t>>> directed_citations_;
};

// All invariant violations found in g; empty iff the graph is well formed.
// Issues are data, not failures: callers decide whether Errors abort.
std::vector<ValidationIssue> validate_graph(const HeteroGraph& g);

inline bool has_errors(const std::vector<ValidationIssue>& issues) {
  for (const auto& i : issues)
    if (i.severity == Severity::Error) return true;
  return false;
}

}  // namespace achgnn
