#pragma once

// Sparse column reduction over Z_p and Q. Columns are sorted by row; the pivot of a column is its
// largest row. Over Q the reduction is fraction-free on integers and removes the content after each
// update; the int64 variant throws Overflow and callers restart with arbitrary precision.

#include <cstdint>
#include <numeric>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stellar::linalg {

struct Overflow {};

struct ModP {
    using Value = std::uint32_t;
    std::uint32_t p;

    Value from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p);
        return static_cast<Value>(r < 0 ? r + p : r);
    }
    bool is_zero(Value v) const { return v == 0; }
    Value mul(Value a, Value b) const { return static_cast<Value>((std::uint64_t{a} * b) % p); }
    Value add(Value a, Value b) const
    {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Value>(s >= p ? s - p : s);
    }
    Value neg(Value a) const { return a == 0 ? 0 : p - a; }
    Value inverse(Value a) const
    {
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<Value>(result);
    }
    // Factors (s, t) so that s*c + t*pivot cancels the pivot row.
    std::pair<Value, Value> eliminate(Value c_low, Value p_low) const
    {
        return {1, neg(mul(c_low, inverse(p_low)))};
    }
};

struct Int64Q {
    using Value = std::int64_t;

    Value from_int(long long v) const { return v; }
    bool is_zero(Value v) const { return v == 0; }
    Value mul(Value a, Value b) const
    {
        Value r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    Value add(Value a, Value b) const
    {
        Value r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    std::pair<Value, Value> eliminate(Value c_low, Value p_low) const
    {
        const Value g = std::gcd(c_low, p_low);
        Value s = p_low / g, t = -(c_low / g);
        if (t == INT64_MIN) throw Overflow{};
        return {s, t};
    }
    Value gcd(Value a, Value b) const { return std::gcd(a, b); }
    Value div(Value a, Value b) const { return a / b; }
};

struct BigQ {
    using Value = boost::multiprecision::cpp_int;

    Value from_int(long long v) const { return Value(v); }
    bool is_zero(const Value& v) const { return v.is_zero(); }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    std::pair<Value, Value> eliminate(const Value& c_low, const Value& p_low) const
    {
        Value g = boost::multiprecision::gcd(c_low, p_low);
        return {p_low / g, -(c_low / g)};
    }
    Value gcd(const Value& a, const Value& b) const { return boost::multiprecision::gcd(a, b); }
    Value div(const Value& a, const Value& b) const { return a / b; }
};

template <class A>
struct Entry {
    std::uint32_t row;
    typename A::Value value;
};

template <class A>
using Column = std::vector<Entry<A>>;

// s*x + t*y, dropping zeros.
template <class A>
Column<A> combine(const A& arith, const typename A::Value& s, const Column<A>& x, const typename A::Value& t,
                  const Column<A>& y)
{
    Column<A> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) {
            auto v = arith.mul(s, x[i].value);
            if (!arith.is_zero(v)) out.push_back({x[i].row, std::move(v)});
            ++i;
        } else if (i == x.size() || y[j].row < x[i].row) {
            auto v = arith.mul(t, y[j].value);
            if (!arith.is_zero(v)) out.push_back({y[j].row, std::move(v)});
            ++j;
        } else {
            auto v = arith.add(arith.mul(s, x[i].value), arith.mul(t, y[j].value));
            if (!arith.is_zero(v)) out.push_back({x[i].row, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

template <class A>
void normalize(const A& arith, Column<A>& col, std::type_identity_t<Column<A>>* track)
{
    if constexpr (std::is_same_v<A, ModP>) {
        if (col.empty()) return;
        const auto inv = arith.inverse(col.back().value);
        if (inv == 1) return;
        for (auto& e : col) e.value = arith.mul(e.value, inv);
        if (track)
            for (auto& e : *track) e.value = arith.mul(e.value, inv);
    } else {
        typename A::Value g = 0;
        for (const auto& e : col) g = arith.gcd(g, e.value);
        if (track)
            for (const auto& e : *track) g = arith.gcd(g, e.value);
        if (g == 0 || g == 1) return;
        for (auto& e : col) e.value = arith.div(e.value, g);
        if (track)
            for (auto& e : *track) e.value = arith.div(e.value, g);
    }
}

template <class A>
class Reducer {
public:
    Reducer(A arith, std::size_t rows, bool track = false)
        : arith_(std::move(arith)), pivot_of_row_(rows, -1), track_(track)
    {
    }

    // Returns true when the column is independent of the columns added so far.
    // With tracking, `id` is the coordinate of this column in the combination vectors.
    bool add(Column<A> col, std::uint32_t id = 0)
    {
        Column<A> combo;
        if (track_) combo.push_back({id, arith_.from_int(1)});
        while (!col.empty()) {
            const int owner = pivot_of_row_[col.back().row];
            if (owner < 0) break;
            const auto& pivot = pivots_[static_cast<std::size_t>(owner)];
            auto [s, t] = arith_.eliminate(col.back().value, pivot.back().value);
            col = combine(arith_, s, col, t, pivot);
            if (track_) combo = combine(arith_, s, combo, t, combos_[static_cast<std::size_t>(owner)]);
            normalize(arith_, col, track_ ? &combo : nullptr);
        }
        if (col.empty()) {
            if (track_) {
                normalize(arith_, combo, nullptr);
                kernel_.push_back(std::move(combo));
            }
            return false;
        }
        normalize(arith_, col, track_ ? &combo : nullptr);
        pivot_of_row_[col.back().row] = static_cast<int>(pivots_.size());
        pivots_.push_back(std::move(col));
        if (track_) combos_.push_back(std::move(combo));
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }
    // Combination vectors of the columns that reduced to zero (a kernel basis).
    std::vector<Column<A>>& kernel() { return kernel_; }

private:
    A arith_;
    std::vector<int> pivot_of_row_;
    std::vector<Column<A>> pivots_;
    std::vector<Column<A>> combos_;
    std::vector<Column<A>> kernel_;
    bool track_;
};

// Signed incidence column with ±1 entries, rows ascending.
using SignedColumn = std::vector<std::pair<std::uint32_t, std::int8_t>>;

template <class A>
Column<A> lift(const A& arith, const SignedColumn& col)
{
    Column<A> out;
    out.reserve(col.size());
    for (auto [row, sign] : col) out.push_back({row, arith.from_int(sign)});
    return out;
}

// Runs fn with the arithmetic for the field: Z_p directly, Q with int64 first and arbitrary
// precision on overflow.
template <class Fn>
auto with_field(std::uint32_t p, Fn&& fn)
{
    if (p != 0) return fn(ModP{p});
    try {
        return fn(Int64Q{});
    } catch (const Overflow&) {
        return fn(BigQ{});
    }
}

}  // namespace stellar::linalg
