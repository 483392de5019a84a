#include "graphcoh/rank.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphcoh {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

// Exact integers; update row_i <- (pivot/g) * row_i - (elim/g) * row_r.
struct ExactRing {
    using Value = BigInt;
    static Value from_int(std::int64_t v) { return Value(v); }
    static bool is_zero(const Value& v) { return v.is_zero(); }
    static bool is_unit(const Value& v) { return v == 1 || v == -1; }
    struct Update {
        Value a, b;  // row_i <- a*row_i + b*row_r
        bool may_grow;
    };
    Update update_for(const Value& pivot, const Value& elim) const {
        Value g = boost::multiprecision::gcd(pivot, elim);
        Value a = pivot / g;
        return {a, -(elim / g), !is_unit(a)};
    }
    static Value combine(const Value& a, const Value& x, const Value& b, const Value& y) {
        return a * x + b * y;
    }
    // divide a freshly updated row by the gcd of its entries
    static void normalize(std::vector<std::pair<int, Value>>& row) {
        Value g = 0;
        for (const auto& [c, v] : row) {
            g = boost::multiprecision::gcd(g, v);
            if (g == 1) return;
        }
        if (g > 1)
            for (auto& [c, v] : row) v /= g;
    }
};

// GF(p); update row_i <- row_i - (elim/pivot) * row_r.
struct ModRing {
    std::uint64_t p;
    using Value = std::uint64_t;
    Value from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return static_cast<Value>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
    static bool is_zero(Value v) { return v == 0; }
    static bool is_unit(Value) { return true; }
    struct Update {
        Value a, b;
        bool may_grow;
    };
    Update update_for(Value pivot, Value elim) const {
        return {1, p - mulmod(elim, powmod(pivot, p - 2, p), p), false};
    }
    Value combine(Value a, Value x, Value b, Value y) const {
        return (mulmod(a, x, p) + mulmod(b, y, p)) % p;
    }
    static void normalize(std::vector<std::pair<int, Value>>&) {}
};

template <class Ring>
class SparseEliminator {
public:
    using Value = typename Ring::Value;
    using Row = std::vector<std::pair<int, Value>>;  // sorted by column

    SparseEliminator(const SparseIntMatrix& m, Ring ring) : ring_(ring), ncols_(m.cols()) {
        rows_.resize(m.rows());
        for (const auto& e : m.entries()) {
            Value v = ring_.from_int(e.value);
            if (!Ring::is_zero(v)) rows_[e.row].emplace_back(e.col, std::move(v));
        }
        row_active_.assign(rows_.size(), true);
        col_nnz_.assign(ncols_, 0);
        col_rows_.resize(ncols_);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty()) {
                row_active_[r] = false;
                continue;
            }
            for (const auto& [c, v] : rows_[r]) {
                ++col_nnz_[c];
                col_rows_[c].push_back(static_cast<int>(r));
            }
        }
    }

    int run() {
        int rank = 0;
        while (true) {
            auto pivot = select_pivot();
            if (pivot.row < 0) break;
            eliminate(pivot.row, pivot.col);
            ++rank;
        }
        return rank;
    }

private:
    struct Pivot {
        int row = -1, col = -1;
    };

    const Value* row_value(int r, int c) const {
        const Row& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    }

    // Markowitz cost (nnz_row-1)*(nnz_col-1) over the sparsest active rows;
    // unit pivots preferred to keep the fraction-free updates growth-free.
    Pivot select_pivot() {
        std::size_t best_nnz = SIZE_MAX;
        std::vector<int> sparsest;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!row_active_[r]) continue;
            std::size_t nnz = rows_[r].size();
            if (nnz < best_nnz) {
                best_nnz = nnz;
                sparsest.clear();
            }
            if (nnz == best_nnz && sparsest.size() < 16) sparsest.push_back(static_cast<int>(r));
        }
        Pivot best;
        std::int64_t best_cost = -1;
        int best_badness = 2;
        for (int r : sparsest) {
            for (const auto& [c, v] : rows_[r]) {
                std::int64_t cost =
                    static_cast<std::int64_t>(rows_[r].size() - 1) * (col_nnz_[c] - 1);
                int badness = Ring::is_unit(v) ? 0 : 1;
                if (best.row < 0 || std::pair(badness, cost) < std::pair(best_badness, best_cost)) {
                    best = {r, c};
                    best_badness = badness;
                    best_cost = cost;
                    if (cost == 0 && badness == 0) return best;
                }
            }
        }
        return best;
    }

    void eliminate(int pr, int pc) {
        const Value& pivot_val = *row_value(pr, pc);
        std::vector<int> targets;
        targets.swap(col_rows_[pc]);
        for (int r : targets) {
            if (r == pr || !row_active_[r]) continue;
            const Value* ev = row_value(r, pc);
            if (!ev) continue;  // stale index entry
            auto upd = ring_.update_for(pivot_val, *ev);
            merge_rows(r, pr, upd);
        }
        // retire pivot row and column
        for (const auto& [c, v] : rows_[pr]) --col_nnz_[c];
        row_active_[pr] = false;
        Row().swap(rows_[pr]);
    }

    void merge_rows(int r, int pr, const typename Ring::Update& upd) {
        const Row& src = rows_[pr];
        Row& dst = rows_[r];
        Row out;
        out.reserve(dst.size() + src.size());
        std::size_t i = 0, j = 0;
        while (i < dst.size() || j < src.size()) {
            int cd = i < dst.size() ? dst[i].first : ncols_;
            int cs = j < src.size() ? src[j].first : ncols_;
            if (cd < cs) {
                Value v = ring_.combine(upd.a, dst[i].second, upd.b, Value(0));
                if (!Ring::is_zero(v)) out.emplace_back(cd, std::move(v));
                else --col_nnz_[cd];
                ++i;
            } else if (cs < cd) {
                Value v = ring_.combine(upd.a, Value(0), upd.b, src[j].second);
                if (!Ring::is_zero(v)) {
                    ++col_nnz_[cs];
                    col_rows_[cs].push_back(r);
                    out.emplace_back(cs, std::move(v));
                }
                ++j;
            } else {
                Value v = ring_.combine(upd.a, dst[i].second, upd.b, src[j].second);
                if (!Ring::is_zero(v)) out.emplace_back(cd, std::move(v));
                else --col_nnz_[cd];
                ++i;
                ++j;
            }
        }
        if (upd.may_grow) Ring::normalize(out);
        dst.swap(out);
        if (dst.empty()) row_active_[r] = false;
    }

    Ring ring_;
    int ncols_;
    std::vector<Row> rows_;
    std::vector<bool> row_active_;
    std::vector<int> col_nnz_;
    std::vector<std::vector<int>> col_rows_;
};

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

RankResult rank_exact(const SparseIntMatrix& m) {
    RankResult res;
    res.method = RankMethod::ExactFractionFree;
    if (m.nnz() == 0) return res;
    SparseEliminator<ExactRing> elim(m, ExactRing{});
    res.rank = elim.run();
    return res;
}

RankResult rank_modular(const SparseIntMatrix& m, std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime");
    RankResult res;
    res.method = RankMethod::ModularProbabilistic;
    res.modulus = p;
    if (m.nnz() == 0) return res;
    SparseEliminator<ModRing> elim(m, ModRing{p});
    res.rank = elim.run();
    return res;
}

}  // namespace graphcoh
