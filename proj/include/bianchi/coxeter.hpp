#pragma once

// Coxeter diagrams of the accepted roots: exact edge classification,
// catalog-based subdiagram classification, the finite-volume criterion and
// cusp counting.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/linalg.hpp"
#include "bianchi/qform.hpp"

namespace bianchi {

class NonCrystallographicAngle : public std::runtime_error {
public:
    explicit NonCrystallographicAngle(const std::string& what) : std::runtime_error(what) {}
};

enum class EdgeType { RightAngle, Angle, Cusp, Divergent };

struct EdgeKind {
    EdgeType type = EdgeType::RightAngle;
    int n = 2;                // dihedral angle pi/n for Angle (3, 4 or 6)
    Rational distance_sq{0};  // c^2 = B^2 / (k_i k_j) > 1 for Divergent

    bool is_elliptic_pair() const { return type == EdgeType::RightAngle || type == EdgeType::Angle; }
    friend bool operator==(const EdgeKind& a, const EdgeKind& b) {
        return a.type == b.type && a.n == b.n && a.distance_sq == b.distance_sq;
    }
};

std::string to_string(const EdgeKind& e);

/// Classifies the pair by q = 4 B(ei,ej)^2 / (ki kj): 0 right angle,
/// 1, 2, 3 angles pi/3, pi/4, pi/6, 4 cusp, > 4 divergent.
EdgeKind gram_entry(const FormSpec& form, const Root& a, const Root& b);

struct DiagramVertex {
    Root root;
    bool filled = false;
};

class CoxeterDiagram {
public:
    explicit CoxeterDiagram(const FormSpec& form) : form_(form) {}

    const FormSpec& form() const { return form_; }
    std::size_t size() const { return vertices_.size(); }
    const DiagramVertex& vertex(std::size_t i) const { return vertices_[i]; }
    const EdgeKind& edge(std::size_t i, std::size_t j) const { return edges_[i][j]; }
    const std::vector<std::size_t>& cusp_neighbours(std::size_t i) const { return cusp_adj_[i]; }

    void add_vertex(const Root& root);
    void set_filled(std::size_t i, bool filled) { vertices_[i].filled = filled; }
    std::vector<std::size_t> filled_vertices() const;

private:
    FormSpec form_;
    std::vector<DiagramVertex> vertices_;
    std::vector<std::vector<EdgeKind>> edges_;
    std::vector<std::vector<std::size_t>> cusp_adj_;
};

CoxeterDiagram build_diagram(const FormSpec& form, const std::vector<Root>& roots);

/// Connected Coxeter diagrams of rank <= 3 that can occur in H^3.
enum class Component { A1, A2, A3, B2, B3, G2, AffineA1, AffineA2, AffineC2, AffineG2 };

const char* to_string(Component c);
bool is_affine(Component c);

enum class SubdiagramType { Elliptic, Parabolic, Indefinite };

struct SubdiagramClass {
    SubdiagramType type = SubdiagramType::Indefinite;
    std::vector<Component> components;  // sorted; empty for Indefinite
    std::size_t vertex_count = 0;

    int rank() const;
    friend bool operator==(const SubdiagramClass& a, const SubdiagramClass& b) {
        return a.type == b.type && a.components == b.components;
    }
};

/// Renders e.g. "3xA1", "A1+B2", "2xA~1", "B3".
std::string to_string(const SubdiagramClass& c);

SubdiagramClass classify_subdiagram(const CoxeterDiagram& diagram,
                                    std::span<const std::size_t> vertices);

struct Completion {
    std::vector<std::size_t> added;
    SubdiagramClass cls;
};

/// Minimal extensions of a rank-2 elliptic pair to a rank-3 elliptic or a
/// rank-2 parabolic subdiagram.
std::vector<Completion> completions(const CoxeterDiagram& diagram, std::size_t a, std::size_t b);

struct EdgeWitness {
    std::size_t a;
    std::size_t b;
    std::size_t count;
    bool all_elliptic;
};

struct FiniteVolumeResult {
    bool finite_volume = false;
    bool compact = false;
    std::vector<EdgeWitness> witnesses;  // one per rank-2 elliptic subdiagram
};

FiniteVolumeResult finite_volume(const CoxeterDiagram& diagram);

/// Same verdict as finite_volume(d).finite_volume with early exit.
bool has_finite_volume(const CoxeterDiagram& diagram);

/// Distinct ideal vertices: rank-2 parabolic subdiagrams grouped by their
/// isotropic kernel vector, normalized primitive with x1 + x2 > 0.
std::vector<LatticeVector> cusp_points(const CoxeterDiagram& diagram);
std::size_t count_cusps(const CoxeterDiagram& diagram);

/// The vertex sets of all rank-2 parabolic subdiagrams.
std::vector<std::vector<std::size_t>> parabolic_rank2_subdiagrams(const CoxeterDiagram& diagram);

/// Isotropic vector orthogonal to every root of a parabolic subdiagram.
LatticeVector isotropic_kernel(const CoxeterDiagram& diagram, std::span<const std::size_t> vertices);

std::size_t cusp_pairs_at_vertex(const CoxeterDiagram& diagram, std::size_t v);

/// DOT text with 1-based vertex ids in diagram order.
std::string export_dot(const CoxeterDiagram& diagram);

}  // namespace bianchi
