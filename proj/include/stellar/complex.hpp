#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stellar {

using VertexId = std::uint32_t;

// Faces are bitmasks over vertex ids, which caps complexes at 64 vertices.
inline constexpr int kMaxVertices = 64;

class Error : public std::runtime_error {
public:
    enum class Kind { Input, Range, Structure, NotAFace, Admissibility, Budget, Precondition, Internal };
    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class Face {
public:
    constexpr Face() noexcept = default;
    constexpr explicit Face(std::uint64_t bits) noexcept : bits_(bits) {}
    Face(std::initializer_list<VertexId> ids);
    static Face from_ids(std::span<const VertexId> ids);
    static constexpr Face range(int n) noexcept
    {
        return Face(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr int dim() const noexcept { return size() - 1; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(VertexId v) const noexcept { return (bits_ >> v) & 1u; }
    constexpr bool subset_of(Face other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(Face other) const noexcept { return (bits_ & other.bits_) == 0; }
    constexpr Face with(VertexId v) const noexcept { return Face(bits_ | (std::uint64_t{1} << v)); }
    constexpr Face without(VertexId v) const noexcept { return Face(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr Face operator|(Face o) const noexcept { return Face(bits_ | o.bits_); }
    constexpr Face operator&(Face o) const noexcept { return Face(bits_ & o.bits_); }
    constexpr Face minus(Face o) const noexcept { return Face(bits_ & ~o.bits_); }
    constexpr VertexId lowest() const noexcept { return static_cast<VertexId>(std::countr_zero(bits_)); }
    std::vector<VertexId> vertices() const;

    friend constexpr bool operator==(Face a, Face b) noexcept { return a.bits_ == b.bits_; }

    template <typename Fn>
    void for_each_vertex(Fn&& fn) const
    {
        for (std::uint64_t b = bits_; b; b &= b - 1) fn(static_cast<VertexId>(std::countr_zero(b)));
    }

private:
    std::uint64_t bits_ = 0;
};

// Lexicographic order on sorted vertex lists; shorter prefixes first.
bool lex_less(Face a, Face b) noexcept;

struct FaceHash {
    std::size_t operator()(Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};

struct DualGraph {
    std::size_t nodes = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    bool connected() const;
    bool is_tree() const { return connected() && edges.size() + 1 == nodes; }
    bool is_path() const;
};

using FacetList = std::vector<std::vector<std::string>>;

class Complex {
public:
    // The empty complex {∅}.
    Complex();

    static Complex from_facets(const FacetList& facets, std::vector<std::string>* warnings = nullptr);
    // Keeps the maximal faces, then drops unused names while preserving their relative order.
    static Complex from_faces(std::vector<std::string> names, std::vector<Face> faces);
    static Complex empty() { return Complex(); }

    int dim() const noexcept { return dim_; }
    int vertex_count() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(VertexId v) const { return names_.at(v); }
    Face vertex_set() const noexcept { return Face::range(vertex_count()); }
    bool is_empty() const noexcept { return names_.empty(); }
    bool is_pure() const;

    VertexId id_of(const std::string& name) const;
    bool has_vertex(const std::string& name) const;
    Face face_of(const std::vector<std::string>& vertex_names) const;
    std::vector<std::string> names_of(Face f) const;
    std::string format_face(Face f) const;

    bool contains(Face f) const;
    // All faces of the given dimension, in lexicographic order. dim -1 yields the empty face.
    const std::vector<Face>& faces(int dim) const;
    std::size_t face_count(int dim) const { return dim < -1 || dim > dim_ ? 0 : faces(dim).size(); }

    // Sorted name lists of the facets; vertex names sorted inside each facet.
    FacetList canonical_facets() const;
    std::string canonical_text() const;
    std::string digest() const;

    friend bool operator==(const Complex& a, const Complex& b) { return a.canonical_facets() == b.canonical_facets(); }

private:
    struct FaceIndex;
    std::vector<std::string> names_;
    std::vector<Face> facets_;
    int dim_ = -1;
    std::shared_ptr<FaceIndex> index_;

    const FaceIndex& index() const;
};

// Elementary constructions.
Complex skeleton(const Complex& x, int t);
Complex link(const Complex& x, Face f);
Complex star(const Complex& x, Face f);
Complex antistar(const Complex& x, VertexId v);
Complex induced(const Complex& x, Face vertices);
Complex join(const Complex& x, const Complex& y);
Complex cone(const Complex& x, const std::string& apex);
// The (d-1)-faces lying in exactly one facet; throws Structure on a (d-1)-face in three or more facets.
Complex boundary(const Complex& x);
DualGraph dual_graph(const Complex& x);
bool is_weak_pseudomanifold(const Complex& x);
bool is_pseudomanifold(const Complex& x);
bool is_closed_pseudomanifold(const Complex& x);
int neighbourliness(const Complex& x);
bool is_connected(const Complex& x);
long long euler_characteristic(const Complex& x);

struct VertexMatch {
    std::string from;
    std::string to;
};
// Removes facet sigma_x from x and sigma_y from y, renames y's vertices of sigma_y by the matching
// and unites the rest. Other vertex names of y must not occur in x.
Complex connected_sum(const Complex& x, const Complex& y, Face sigma_x, Face sigma_y,
                      const std::vector<VertexMatch>& matching);
// Gluing of two balls along boundary faces (kept, not removed).
Complex boundary_connected_sum(const Complex& x, const Complex& y, Face tau_x, Face tau_y,
                               const std::vector<VertexMatch>& matching);

Complex rename(const Complex& x, const std::function<std::string(const std::string&)>& fn);
// Image of x under the vertex map v -> permutation[v] (same name table).
Complex relabel(const Complex& x, const std::vector<VertexId>& permutation);

// Backtracking search for a facet-preserving vertex bijection, pruned by vertex invariants (m <= 20).
bool isomorphic(const Complex& x, const Complex& y);

// Facet file format: '#' comments, one facet per line, whitespace separated vertex tokens.
Complex parse_facet_text(const std::string& text, std::vector<std::string>* warnings = nullptr);
Complex load_facet_file(const std::string& path, std::vector<std::string>* warnings = nullptr);
std::string to_facet_text(const Complex& x);
void save_facet_file(const Complex& x, const std::string& path);

std::string sha256_hex(const std::string& bytes);

}  // namespace stellar
