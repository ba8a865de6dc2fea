#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nodal {

/// Weighted forest with parent and proximity relations, encoding the
/// equisingularity class of a planar curve singularity: one vertex per
/// (possibly infinitely near) singular point, carrying its multiplicity.
struct DiagramVertex {
    std::string id;
    int mult = 1;
    std::optional<std::string> parent;      // absent exactly on roots
    std::vector<std::string> proximities;   // all targets, parent included
};

class EnriquesDiagram {
  public:
    EnriquesDiagram() = default;
    explicit EnriquesDiagram(std::vector<DiagramVertex> vertices);

    const std::vector<DiagramVertex>& vertices() const& { return vertices_; }
    const std::vector<DiagramVertex>& vertices() const&& = delete;
    int index_of(const std::string& id) const;

    static EnriquesDiagram from_json_text(const std::string& text);
    std::string to_json_text() const;

    /// Built-in named diagrams reconstructed from their textual descriptions:
    /// A1, A2, A3, D4, D6, E7, X1,0 (ordinary quadruple point).
    static EnriquesDiagram builtin(const std::string& name);
    static std::vector<std::string> builtin_names();

  private:
    std::vector<DiagramVertex> vertices_;
};

/// delta (genus drop), mu (total Milnor number), r (branch count), and the
/// dimension bookkeeping of the equisingular stratum.
struct EquisingularityInvariants {
    long delta = 0, mu = 0, r = 0, roots = 0, free_pts = 0, deg = 0, dim = 0, expcod = 0;
    friend bool operator==(const EquisingularityInvariants&,
                           const EquisingularityInvariants&) = default;
};

namespace enriques {

/// Checks every diagram invariant; returns the list of violations (empty
/// means the diagram is valid), each naming the offending vertices.
std::vector<std::string> validate(const EnriquesDiagram& d);

EquisingularityInvariants invariants(const EnriquesDiagram& d);

/// Number of singularity sequences of type (2^r) arising from the given
/// collection, processed one distinguished point at a time: a node is
/// consumed, a triple point blows up to three nodes, D6 to D4 + A1, E7 to
/// D6. Supported types: A1, D4, D6, E7.
long long sequence_count(const std::map<std::string, int>& types);

/// Relabeling-invariant canonical encoding; two diagrams are isomorphic
/// exactly when their encodings agree.
std::string canonical_form(const EnriquesDiagram& d);
bool iso(const EnriquesDiagram& a, const EnriquesDiagram& b);

/// All valid diagrams up to isomorphism with expcod <= max_expcod and at
/// most max_roots roots, by bounded search. Guarded at max_expcod <= 8.
std::vector<EnriquesDiagram> enumerate_classes(int max_expcod, int max_roots = 1);

}  // namespace enriques
}  // namespace nodal
