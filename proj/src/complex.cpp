#include "stellar/complex.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <openssl/evp.h>

namespace stellar {

Face::Face(std::initializer_list<VertexId> ids)
{
    for (VertexId v : ids) bits_ |= std::uint64_t{1} << v;
}

Face Face::from_ids(std::span<const VertexId> ids)
{
    std::uint64_t bits = 0;
    for (VertexId v : ids) bits |= std::uint64_t{1} << v;
    return Face(bits);
}

std::vector<VertexId> Face::vertices() const
{
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_vertex([&](VertexId v) { out.push_back(v); });
    return out;
}

bool lex_less(Face a, Face b) noexcept
{
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const int v = std::countr_zero(diff);
    if (a.contains(static_cast<VertexId>(v))) {
        // b either continues with a larger vertex (a first) or stops here (b is a prefix of a).
        return (b.bits() >> v) != 0;
    }
    return (a.bits() >> v) == 0;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a)
    {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

void sort_lex(std::vector<Face>& faces)
{
    std::sort(faces.begin(), faces.end(), lex_less);
}

std::vector<Face> maximal_faces(std::vector<Face> faces)
{
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.bits() < b.bits();
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (Face f : faces) {
        bool dominated = false;
        for (Face k : kept) {
            if (f.subset_of(k)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(f);
    }
    return kept;
}

std::string join_names(const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ' ';
        out += names[i];
    }
    return out;
}

}  // namespace

bool DualGraph::connected() const
{
    if (nodes == 0) return false;
    UnionFind uf(nodes);
    std::size_t components = nodes;
    for (auto [a, b] : edges)
        if (uf.unite(static_cast<int>(a), static_cast<int>(b))) --components;
    return components == 1;
}

bool DualGraph::is_path() const
{
    if (!is_tree()) return false;
    std::vector<int> degree(nodes, 0);
    for (auto [a, b] : edges) {
        ++degree[a];
        ++degree[b];
    }
    return std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
}

struct Complex::FaceIndex {
    std::once_flag once;
    std::vector<std::vector<Face>> by_dim;  // slot 0 holds the empty face
    std::vector<std::unordered_set<std::uint64_t>> lookup;
};

Complex::Complex() : facets_{Face()}, dim_(-1), index_(std::make_shared<FaceIndex>()) {}

Complex Complex::from_faces(std::vector<std::string> names, std::vector<Face> faces)
{
    if (names.size() > static_cast<std::size_t>(kMaxVertices))
        throw Error(Error::Kind::Range, "complexes are limited to 64 vertices");
    std::vector<Face> kept = maximal_faces(std::move(faces));
    std::uint64_t used = 0;
    for (Face f : kept) used |= f.bits();
    if (used == 0) return Complex();

    std::vector<VertexId> remap(names.size(), 0);
    std::vector<std::string> compact;
    for (std::size_t v = 0; v < names.size(); ++v) {
        if ((used >> v) & 1u) {
            remap[v] = static_cast<VertexId>(compact.size());
            compact.push_back(std::move(names[v]));
        }
    }
    Complex out;
    out.names_ = std::move(compact);
    out.facets_.clear();
    out.dim_ = -1;
    for (Face f : kept) {
        std::uint64_t bits = 0;
        f.for_each_vertex([&](VertexId v) { bits |= std::uint64_t{1} << remap[v]; });
        out.facets_.push_back(Face(bits));
        out.dim_ = std::max(out.dim_, f.dim());
    }
    sort_lex(out.facets_);
    return out;
}

Complex Complex::from_facets(const FacetList& facets, std::vector<std::string>* warnings)
{
    if (facets.empty()) throw Error(Error::Kind::Input, "facet list is empty");
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<Face> faces;
    faces.reserve(facets.size());
    for (const auto& facet : facets) {
        if (facet.empty()) throw Error(Error::Kind::Input, "empty facet in facet list");
        Face f;
        for (const auto& token : facet) {
            auto [it, inserted] = ids.emplace(token, static_cast<VertexId>(names.size()));
            if (inserted) {
                if (names.size() >= static_cast<std::size_t>(kMaxVertices))
                    throw Error(Error::Kind::Range, "complexes are limited to 64 vertices");
                names.push_back(token);
            }
            if (f.contains(it->second))
                throw Error(Error::Kind::Input,
                            "duplicate vertex '" + token + "' in facet [" + join_names(facet) + "]");
            f = f.with(it->second);
        }
        faces.push_back(f);
    }
    if (warnings) {
        std::unordered_set<std::uint64_t> seen;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (!seen.insert(faces[i].bits()).second) {
                warnings->push_back("duplicate facet [" + join_names(facets[i]) + "] dropped");
                continue;
            }
            for (std::size_t j = 0; j < faces.size(); ++j) {
                if (faces[j] != faces[i] && faces[i].subset_of(faces[j])) {
                    warnings->push_back("facet [" + join_names(facets[i]) + "] is contained in [" +
                                        join_names(facets[j]) + "] and was dropped");
                    break;
                }
            }
        }
    }
    return from_faces(std::move(names), std::move(faces));
}

bool Complex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(), [&](Face f) { return f.dim() == dim_; });
}

VertexId Complex::id_of(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error(Error::Kind::Input, "unknown vertex '" + name + "'");
    return static_cast<VertexId>(it - names_.begin());
}

bool Complex::has_vertex(const std::string& name) const
{
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Face Complex::face_of(const std::vector<std::string>& vertex_names) const
{
    Face f;
    for (const auto& n : vertex_names) f = f.with(id_of(n));
    return f;
}

std::vector<std::string> Complex::names_of(Face f) const
{
    std::vector<std::string> out;
    f.for_each_vertex([&](VertexId v) { out.push_back(names_.at(v)); });
    return out;
}

std::string Complex::format_face(Face f) const
{
    auto names = names_of(f);
    std::sort(names.begin(), names.end());
    return "{" + join_names(names) + "}";
}

const Complex::FaceIndex& Complex::index() const
{
    std::call_once(index_->once, [this] {
        auto& idx = *index_;
        const int levels = dim_ + 2;
        idx.by_dim.assign(static_cast<std::size_t>(levels), {});
        idx.lookup.assign(static_cast<std::size_t>(levels), {});
        for (Face facet : facets_) {
            const std::uint64_t full = facet.bits();
            std::uint64_t sub = full;
            while (true) {
                const int slot = std::popcount(sub);
                if (idx.lookup[slot].insert(sub).second) idx.by_dim[slot].push_back(Face(sub));
                if (sub == 0) break;
                sub = (sub - 1) & full;
            }
        }
        for (auto& level : idx.by_dim) sort_lex(level);
    });
    return *index_;
}

bool Complex::contains(Face f) const
{
    if (f.empty()) return true;
    if (f.dim() > dim_) return false;
    if (!f.subset_of(vertex_set())) return false;
    return index().lookup[static_cast<std::size_t>(f.size())].count(f.bits()) != 0;
}

const std::vector<Face>& Complex::faces(int dim) const
{
    static const std::vector<Face> none;
    if (dim < -1 || dim > dim_) return none;
    return index().by_dim[static_cast<std::size_t>(dim + 1)];
}

FacetList Complex::canonical_facets() const
{
    FacetList out;
    out.reserve(facets_.size());
    for (Face f : facets_) {
        auto names = names_of(f);
        std::sort(names.begin(), names.end());
        out.push_back(std::move(names));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Complex::canonical_text() const
{
    std::string out;
    bool first = true;
    for (const auto& facet : canonical_facets()) {
        if (!first) out += '\n';
        first = false;
        out += join_names(facet);
    }
    return out;
}

std::string Complex::digest() const { return sha256_hex(canonical_text()); }

Complex skeleton(const Complex& x, int t)
{
    if (t < 0 || t > x.dim())
        throw Error(Error::Kind::Range, "skeleton dimension " + std::to_string(t) + " outside 0.." +
                                            std::to_string(x.dim()));
    std::vector<Face> faces = x.faces(t);
    for (Face f : x.facets())
        if (f.dim() < t) faces.push_back(f);
    return Complex::from_faces(x.names(), std::move(faces));
}

Complex link(const Complex& x, Face f)
{
    if (!x.contains(f)) throw Error(Error::Kind::NotAFace, "link of a non-face " + x.format_face(f));
    std::vector<Face> faces;
    for (Face facet : x.facets())
        if (f.subset_of(facet)) faces.push_back(facet.minus(f));
    return Complex::from_faces(x.names(), std::move(faces));
}

Complex star(const Complex& x, Face f)
{
    if (!x.contains(f)) throw Error(Error::Kind::NotAFace, "star of a non-face " + x.format_face(f));
    std::vector<Face> faces;
    for (Face facet : x.facets())
        if (f.subset_of(facet)) faces.push_back(facet);
    return Complex::from_faces(x.names(), std::move(faces));
}

Complex antistar(const Complex& x, VertexId v)
{
    if (v >= static_cast<VertexId>(x.vertex_count()))
        throw Error(Error::Kind::NotAFace, "antistar of a vertex outside the complex");
    std::vector<Face> faces;
    for (Face facet : x.facets()) faces.push_back(facet.without(v));
    return Complex::from_faces(x.names(), std::move(faces));
}

Complex induced(const Complex& x, Face vertices)
{
    std::vector<Face> faces;
    for (Face facet : x.facets()) faces.push_back(facet & vertices);
    return Complex::from_faces(x.names(), std::move(faces));
}

Complex join(const Complex& x, const Complex& y)
{
    for (const auto& n : y.names())
        if (x.has_vertex(n)) throw Error(Error::Kind::Input, "join: vertex name '" + n + "' occurs in both complexes");
    if (x.vertex_count() + y.vertex_count() > kMaxVertices)
        throw Error(Error::Kind::Range, "complexes are limited to 64 vertices");
    std::vector<std::string> names = x.names();
    names.insert(names.end(), y.names().begin(), y.names().end());
    const int shift = x.vertex_count();
    std::vector<Face> faces;
    for (Face a : x.facets())
        for (Face b : y.facets()) faces.push_back(a | Face(shift >= 64 ? 0 : b.bits() << shift));
    return Complex::from_faces(std::move(names), std::move(faces));
}

Complex cone(const Complex& x, const std::string& apex)
{
    return join(x, Complex::from_facets({{apex}}));
}

namespace {

std::unordered_map<std::uint64_t, std::vector<std::size_t>> ridge_incidence(const Complex& x)
{
    if (!x.is_pure()) throw Error(Error::Kind::Structure, "complex is not pure");
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> inc;
    const auto& facets = x.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
        facets[i].for_each_vertex([&](VertexId v) { inc[facets[i].without(v).bits()].push_back(i); });
    }
    return inc;
}

void require_weak_pseudomanifold(const Complex& x,
                                 const std::unordered_map<std::uint64_t, std::vector<std::size_t>>& inc)
{
    for (const auto& [bits, list] : inc)
        if (list.size() >= 3)
            throw Error(Error::Kind::Structure, "not a weak pseudomanifold: face " + x.format_face(Face(bits)) +
                                                    " lies in " + std::to_string(list.size()) + " facets");
}

}  // namespace

Complex boundary(const Complex& x)
{
    if (x.dim() <= 0) return Complex();
    auto inc = ridge_incidence(x);
    require_weak_pseudomanifold(x, inc);
    std::vector<Face> faces;
    for (const auto& [bits, list] : inc)
        if (list.size() == 1) faces.push_back(Face(bits));
    if (faces.empty()) return Complex();
    return Complex::from_faces(x.names(), std::move(faces));
}

DualGraph dual_graph(const Complex& x)
{
    auto inc = ridge_incidence(x);
    require_weak_pseudomanifold(x, inc);
    DualGraph g;
    g.nodes = x.facets().size();
    for (const auto& [bits, list] : inc)
        if (list.size() == 2) g.edges.emplace_back(std::min(list[0], list[1]), std::max(list[0], list[1]));
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool is_weak_pseudomanifold(const Complex& x)
{
    if (!x.is_pure()) return false;
    auto inc = ridge_incidence(x);
    return std::all_of(inc.begin(), inc.end(), [](const auto& kv) { return kv.second.size() <= 2; });
}

bool is_pseudomanifold(const Complex& x)
{
    return is_weak_pseudomanifold(x) && dual_graph(x).connected();
}

bool is_closed_pseudomanifold(const Complex& x)
{
    if (x.dim() < 1 || !is_pseudomanifold(x)) return false;
    auto inc = ridge_incidence(x);
    return std::all_of(inc.begin(), inc.end(), [](const auto& kv) { return kv.second.size() == 2; });
}

int neighbourliness(const Complex& x)
{
    const int m = x.vertex_count();
    int best = 0;
    std::uint64_t binom = 1;  // C(m, l)
    for (int l = 1; l <= x.dim() + 1; ++l) {
        binom = binom * static_cast<std::uint64_t>(m - l + 1) / static_cast<std::uint64_t>(l);
        if (x.face_count(l - 1) != binom) break;
        best = l;
    }
    return best;
}

bool is_connected(const Complex& x)
{
    const int m = x.vertex_count();
    if (m == 0) return false;
    UnionFind uf(static_cast<std::size_t>(m));
    int components = m;
    for (Face f : x.facets()) {
        const int root = static_cast<int>(f.lowest());
        f.for_each_vertex([&](VertexId v) {
            if (uf.unite(root, static_cast<int>(v))) --components;
        });
    }
    return components == 1;
}

long long euler_characteristic(const Complex& x)
{
    long long chi = 0;
    for (int i = 0; i <= x.dim(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(x.face_count(i));
    return chi;
}

namespace {

Complex glue(const Complex& x, const Complex& y, Face part_x, Face part_y, const std::vector<VertexMatch>& matching,
             bool remove_parts)
{
    if (part_x.size() != part_y.size())
        throw Error(Error::Kind::Input, "connected sum: faces of different dimension");
    if (static_cast<int>(matching.size()) != part_y.size())
        throw Error(Error::Kind::Input, "connected sum: matching must pair every vertex of the glued face");
    std::unordered_map<VertexId, VertexId> map_y;  // y id -> x id
    Face image;
    for (const auto& m : matching) {
        const VertexId from = y.id_of(m.from);
        const VertexId to = x.id_of(m.to);
        if (!part_y.contains(from) || !part_x.contains(to) || image.contains(to) || map_y.count(from))
            throw Error(Error::Kind::Input, "connected sum: matching is not a bijection between the glued faces");
        map_y[from] = to;
        image = image.with(to);
    }
    std::vector<std::string> names = x.names();
    std::vector<VertexId> y_to_out(static_cast<std::size_t>(y.vertex_count()));
    for (VertexId v = 0; v < static_cast<VertexId>(y.vertex_count()); ++v) {
        if (auto it = map_y.find(v); it != map_y.end()) {
            y_to_out[v] = it->second;
            continue;
        }
        if (x.has_vertex(y.name(v)))
            throw Error(Error::Kind::Input, "connected sum: vertex name '" + y.name(v) + "' occurs in both complexes");
        y_to_out[v] = static_cast<VertexId>(names.size());
        names.push_back(y.name(v));
    }
    if (names.size() > static_cast<std::size_t>(kMaxVertices))
        throw Error(Error::Kind::Range, "complexes are limited to 64 vertices");
    std::vector<Face> faces;
    for (Face f : x.facets())
        if (!remove_parts || f != part_x) faces.push_back(f);
    for (Face f : y.facets()) {
        if (remove_parts && f == part_y) continue;
        Face g;
        f.for_each_vertex([&](VertexId v) { g = g.with(y_to_out[v]); });
        faces.push_back(g);
    }
    return Complex::from_faces(std::move(names), std::move(faces));
}

bool is_facet(const Complex& x, Face f)
{
    return std::find(x.facets().begin(), x.facets().end(), f) != x.facets().end();
}

}  // namespace

Complex connected_sum(const Complex& x, const Complex& y, Face sigma_x, Face sigma_y,
                      const std::vector<VertexMatch>& matching)
{
    if (!is_facet(x, sigma_x) || !is_facet(y, sigma_y))
        throw Error(Error::Kind::NotAFace, "connected sum: glued faces must be facets");
    if (sigma_x.dim() != sigma_y.dim()) throw Error(Error::Kind::Input, "connected sum: dimension mismatch");
    return glue(x, y, sigma_x, sigma_y, matching, true);
}

Complex boundary_connected_sum(const Complex& x, const Complex& y, Face tau_x, Face tau_y,
                               const std::vector<VertexMatch>& matching)
{
    if (x.dim() != y.dim()) throw Error(Error::Kind::Input, "boundary connected sum: dimension mismatch");
    const Complex bx = boundary(x);
    const Complex by = boundary(y);
    if (tau_x.dim() != x.dim() - 1 || !bx.contains(bx.face_of(x.names_of(tau_x))))
        throw Error(Error::Kind::NotAFace, "boundary connected sum: " + x.format_face(tau_x) + " is not a boundary facet");
    if (tau_y.dim() != y.dim() - 1 || !by.contains(by.face_of(y.names_of(tau_y))))
        throw Error(Error::Kind::NotAFace, "boundary connected sum: " + y.format_face(tau_y) + " is not a boundary facet");
    return glue(x, y, tau_x, tau_y, matching, false);
}

Complex rename(const Complex& x, const std::function<std::string(const std::string&)>& fn)
{
    std::vector<std::string> names;
    std::unordered_set<std::string> seen;
    for (const auto& n : x.names()) {
        names.push_back(fn(n));
        if (!seen.insert(names.back()).second)
            throw Error(Error::Kind::Input, "rename produced duplicate vertex '" + names.back() + "'");
    }
    return Complex::from_faces(std::move(names), x.facets());
}

Complex relabel(const Complex& x, const std::vector<VertexId>& permutation)
{
    if (permutation.size() != static_cast<std::size_t>(x.vertex_count()))
        throw Error(Error::Kind::Input, "relabel: permutation size mismatch");
    std::vector<Face> faces;
    for (Face f : x.facets()) {
        Face g;
        f.for_each_vertex([&](VertexId v) { g = g.with(permutation[v]); });
        faces.push_back(g);
    }
    return Complex::from_faces(x.names(), std::move(faces));
}

namespace {

struct IsoData {
    int m = 0;
    std::vector<std::uint64_t> adjacency;
    std::vector<std::vector<Face>> facets_at;
    std::vector<std::array<std::size_t, 2>> invariant;
    std::unordered_set<std::uint64_t> facet_set;

    explicit IsoData(const Complex& x) : m(x.vertex_count())
    {
        adjacency.assign(static_cast<std::size_t>(m), 0);
        facets_at.assign(static_cast<std::size_t>(m), {});
        for (Face f : x.facets()) {
            facet_set.insert(f.bits());
            f.for_each_vertex([&](VertexId v) {
                adjacency[v] |= f.without(v).bits();
                facets_at[v].push_back(f);
            });
        }
        for (int v = 0; v < m; ++v)
            invariant.push_back({static_cast<std::size_t>(std::popcount(adjacency[v])), facets_at[v].size()});
    }
};

bool extend(const IsoData& a, const IsoData& b, const std::vector<VertexId>& order, std::size_t depth,
            std::vector<int>& map, std::vector<bool>& used)
{
    if (depth == order.size()) return true;
    const VertexId v = order[depth];
    for (int w = 0; w < b.m; ++w) {
        if (used[w] || a.invariant[v] != b.invariant[w]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i) {
            const VertexId u = order[i];
            const bool adj_a = (a.adjacency[v] >> u) & 1u;
            const bool adj_b = (b.adjacency[w] >> map[u]) & 1u;
            ok = adj_a == adj_b;
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        for (Face f : a.facets_at[v]) {
            std::uint64_t img = 0;
            bool complete = true;
            f.for_each_vertex([&](VertexId u) {
                if (map[u] < 0) complete = false;
                else img |= std::uint64_t{1} << map[u];
            });
            if (complete && !b.facet_set.count(img)) {
                ok = false;
                break;
            }
        }
        if (ok && extend(a, b, order, depth + 1, map, used)) return true;
        map[v] = -1;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const Complex& x, const Complex& y)
{
    if (x.vertex_count() != y.vertex_count() || x.dim() != y.dim() || x.facets().size() != y.facets().size())
        return false;
    if (x.vertex_count() > 20) throw Error(Error::Kind::Range, "isomorphism test limited to 20 vertices");
    for (int i = 0; i <= x.dim(); ++i)
        if (x.face_count(i) != y.face_count(i)) return false;
    IsoData a(x), b(y);
    auto ia = a.invariant, ib = b.invariant;
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (ia != ib) return false;
    // Visit vertices in breadth-first order so that each new vertex has mapped neighbours.
    std::vector<VertexId> order;
    std::vector<bool> seen(static_cast<std::size_t>(a.m), false);
    for (int s = 0; s < a.m; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        order.push_back(static_cast<VertexId>(s));
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            Face(a.adjacency[order[head]]).for_each_vertex([&](VertexId u) {
                if (!seen[u]) {
                    seen[u] = true;
                    order.push_back(u);
                }
            });
        }
    }
    std::vector<int> map(static_cast<std::size_t>(a.m), -1);
    std::vector<bool> used(static_cast<std::size_t>(b.m), false);
    return extend(a, b, order, 0, map, used);
}

Complex parse_facet_text(const std::string& text, std::vector<std::string>* warnings)
{
    FacetList facets;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> facet;
        for (std::string t; tokens >> t;) facet.push_back(t);
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    if (facets.empty()) {
        if (warnings) warnings->push_back("no facets given; using the empty complex");
        return Complex();
    }
    return Complex::from_facets(facets, warnings);
}

Complex load_facet_file(const std::string& path, std::vector<std::string>* warnings)
{
    std::ifstream in(path);
    if (!in) throw Error(Error::Kind::Input, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_facet_text(buffer.str(), warnings);
}

std::string to_facet_text(const Complex& x)
{
    if (x.is_empty()) return "# empty complex\n";
    std::string text = x.canonical_text();
    text += '\n';
    return text;
}

void save_facet_file(const Complex& x, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw Error(Error::Kind::Input, "cannot write '" + path + "'");
    out << to_facet_text(x);
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw Error(Error::Kind::Internal, "SHA-256 computation failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

}  // namespace stellar
