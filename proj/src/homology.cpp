#include "stellar/homology.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

#include "linalg.hpp"

namespace stellar {

using linalg::Column;
using linalg::Reducer;
using linalg::SignedColumn;

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p)) throw Error(Error::Kind::Input, "field characteristic " + std::to_string(p) + " is not prime");
    return Field{p};
}

Field Field::parse(const std::string& text)
{
    std::string t;
    for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "q" || t == "rationals") return rationals();
    if (t.size() >= 2 && t[0] == 'z' && std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(c); })) {
        const unsigned long long p = std::stoull(t.substr(1));
        if (p >= (1ull << 31)) throw Error(Error::Kind::Input, "field characteristic too large");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw Error(Error::Kind::Input, "unknown field '" + text + "' (expected q, z2, z3, z5 or zP)");
}

std::string Field::name() const { return p == 0 ? "Q" : "Z" + std::to_string(p); }

struct InducedHomology::Data {
    Field field;
    int d = -1;
    int m = 0;
    std::vector<std::vector<Face>> faces;                // faces[j], lexicographic
    std::vector<std::vector<SignedColumn>> boundary;     // boundary[j][i]: ∂ of faces[j][i] in faces[j-1]
    std::vector<std::pair<VertexId, VertexId>> edges;

    std::vector<long long> ranks_and_counts(Face a, std::vector<long long>& counts) const;
};

InducedHomology::InducedHomology(const Complex& x, Field field) : data_(std::make_unique<Data>())
{
    auto& D = *data_;
    D.field = field;
    D.d = x.dim();
    D.m = x.vertex_count();
    if (D.d < 0) return;
    D.faces.resize(static_cast<std::size_t>(D.d + 1));
    D.boundary.resize(static_cast<std::size_t>(D.d + 1));
    std::unordered_map<std::uint64_t, std::uint32_t> previous;
    for (int j = 0; j <= D.d; ++j) {
        D.faces[j] = x.faces(j);
        std::unordered_map<std::uint64_t, std::uint32_t> current;
        current.reserve(D.faces[j].size());
        for (std::uint32_t i = 0; i < D.faces[j].size(); ++i) current.emplace(D.faces[j][i].bits(), i);
        if (j >= 1) {
            auto& cols = D.boundary[j];
            cols.reserve(D.faces[j].size());
            for (Face f : D.faces[j]) {
                SignedColumn col;
                int position = 0;
                f.for_each_vertex([&](VertexId v) {
                    col.emplace_back(previous.at(f.without(v).bits()), static_cast<std::int8_t>(position % 2 ? -1 : 1));
                    ++position;
                });
                std::sort(col.begin(), col.end());
                cols.push_back(std::move(col));
            }
        }
        previous = std::move(current);
    }
    for (Face e : D.faces.size() > 1 ? D.faces[1] : std::vector<Face>{}) {
        auto vs = e.vertices();
        D.edges.emplace_back(vs[0], vs[1]);
    }
}

InducedHomology::~InducedHomology() = default;
InducedHomology::InducedHomology(InducedHomology&&) noexcept = default;

int InducedHomology::dim() const { return data_->d; }

namespace {

template <class A>
std::size_t rank_of(const A& arith, const std::vector<const SignedColumn*>& cols, std::size_t rows)
{
    Reducer<A> reducer(arith, rows);
    for (const SignedColumn* c : cols) reducer.add(linalg::lift(arith, *c));
    return reducer.rank();
}

std::size_t field_rank(Field field, const std::vector<const SignedColumn*>& cols, std::size_t rows)
{
    if (cols.empty()) return 0;
    return linalg::with_field(field.p, [&](const auto& arith) { return rank_of(arith, cols, rows); });
}

}  // namespace

std::vector<long long> InducedHomology::reduced_betti(Face a) const
{
    const auto& D = *data_;
    const int d = std::max(D.d, 0);
    std::vector<long long> out(static_cast<std::size_t>(d + 1), 0);
    a = a & Face::range(D.m);
    const int n = a.size();
    if (n == 0) {
        out[0] = -1;
        return out;
    }
    // rank ∂_1 from connected components; higher ranks by elimination.
    std::vector<int> parent(static_cast<std::size_t>(D.m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = n;
    for (auto [u, v] : D.edges) {
        if (!a.contains(u) || !a.contains(v)) continue;
        const int ru = find(static_cast<int>(u)), rv = find(static_cast<int>(v));
        if (ru != rv) {
            parent[rv] = ru;
            --components;
        }
    }
    std::vector<long long> counts(static_cast<std::size_t>(D.d + 2), 0);
    std::vector<long long> ranks(static_cast<std::size_t>(D.d + 2), 0);
    counts[0] = n;
    ranks[1] = n - components;
    std::vector<const SignedColumn*> cols;
    for (int j = 1; j <= D.d; ++j) {
        cols.clear();
        const auto& fj = D.faces[j];
        for (std::size_t i = 0; i < fj.size(); ++i)
            if (fj[i].subset_of(a)) cols.push_back(&D.boundary[j][i]);
        counts[j] = static_cast<long long>(cols.size());
        if (j >= 2) ranks[j] = static_cast<long long>(field_rank(D.field, cols, D.faces[j - 1].size()));
        if (cols.empty()) break;
    }
    for (int j = 0; j <= D.d; ++j) out[j] = counts[j] - ranks[j] - ranks[j + 1];
    out[0] -= 1;
    return out;
}

std::vector<long long> InducedHomology::relative_betti(Face a, Face b) const
{
    const auto& D = *data_;
    a = a & Face::range(D.m);
    b = b & Face::range(D.m);
    if (!a.subset_of(b)) throw Error(Error::Kind::Input, "relative homology needs A ⊆ B");
    const int d = std::max(D.d, 0);
    std::vector<long long> out(static_cast<std::size_t>(d + 1), 0);
    if (D.d < 0) return out;
    std::vector<long long> counts(static_cast<std::size_t>(D.d + 2), 0);
    std::vector<long long> ranks(static_cast<std::size_t>(D.d + 2), 0);
    std::vector<SignedColumn> cols;
    for (int j = 0; j <= D.d; ++j) {
        cols.clear();
        const auto& fj = D.faces[j];
        for (std::size_t i = 0; i < fj.size(); ++i) {
            if (!fj[i].subset_of(b) || fj[i].subset_of(a)) continue;
            if (j == 0) {
                cols.emplace_back();
                continue;
            }
            SignedColumn col;
            for (auto entry : D.boundary[j][i])
                if (!D.faces[j - 1][entry.first].subset_of(a)) col.push_back(entry);
            cols.push_back(std::move(col));
        }
        counts[j] = static_cast<long long>(cols.size());
        if (j >= 1) {
            std::vector<const SignedColumn*> ptrs;
            for (const auto& c : cols)
                if (!c.empty()) ptrs.push_back(&c);
            ranks[j] = static_cast<long long>(field_rank(D.field, ptrs, D.faces[j - 1].size()));
        }
    }
    for (int j = 0; j <= D.d; ++j) out[j] = counts[j] - ranks[j] - ranks[j + 1];
    return out;
}

bool InducedHomology::injective(Face a, int j) const
{
    const auto& D = *data_;
    if (j < 0 || j > D.d) throw Error(Error::Kind::Range, "homology degree outside 0..d");
    if (j == D.d) return true;  // B_d(X) = 0
    a = a & Face::range(D.m);
    return linalg::with_field(D.field.p, [&](const auto& arith) {
        using A = std::decay_t<decltype(arith)>;
        const auto& fj = D.faces[j];
        // Cycle space of X[a] in degree j, in coordinates of C_j(X).
        std::vector<Column<A>> cycles;
        if (j == 0) {
            for (std::uint32_t i = 0; i < fj.size(); ++i)
                if (fj[i].subset_of(a)) cycles.push_back({{i, arith.from_int(1)}});
        } else {
            Reducer<A> kernel(arith, D.faces[j - 1].size(), true);
            for (std::uint32_t i = 0; i < fj.size(); ++i)
                if (fj[i].subset_of(a)) kernel.add(linalg::lift(arith, D.boundary[j][i]), i);
            cycles = std::move(kernel.kernel());
        }
        const auto& up = D.faces[j + 1];
        Reducer<A> combined(arith, fj.size());
        Reducer<A> restricted(arith, fj.size());
        for (std::size_t i = 0; i < up.size(); ++i) {
            combined.add(linalg::lift(arith, D.boundary[j + 1][i]));
            if (up[i].subset_of(a)) restricted.add(linalg::lift(arith, D.boundary[j + 1][i]));
        }
        std::size_t independent = 0;
        for (auto& z : cycles)
            if (combined.add(std::move(z))) ++independent;
        const std::size_t intersection = cycles.size() - independent;
        return intersection == restricted.rank();
    });
}

BettiTable betti(const Complex& x, Field field)
{
    BettiTable table;
    table.field = field;
    if (x.is_empty()) {
        table.beta = {0};
        table.reduced = {-1};
        return table;
    }
    InducedHomology h(x, field);
    table.reduced = h.reduced_betti(x.vertex_set());
    table.beta = table.reduced;
    table.beta[0] += 1;
    return table;
}

std::vector<long long> relative_betti(const Complex& x, Face a, Face b, Field field)
{
    return InducedHomology(x, field).relative_betti(a, b);
}

bool inclusion_injective(const Complex& x, Face a, int j, Field field)
{
    return InducedHomology(x, field).injective(a, j);
}

bool orientable(const Complex& x, Field field)
{
    if (!is_closed_pseudomanifold(x)) throw Error(Error::Kind::Structure, "orientability needs a closed pseudomanifold");
    return betti(x, field).beta.back() == 1;
}

}  // namespace stellar
