#include "graphcoh/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace graphcoh {

std::string GeneratorIndex::label() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Vertex: os << "x" << vertex << "*"; break;
        case Kind::Edge: os << "x{" << edge.first << "," << edge.second << "}*"; break;
        case Kind::Clique: os << "y" << clique << "*"; break;
    }
    return os.str();
}

SparseIntMatrix::SparseIntMatrix(int rows, int cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (e.value == 0) throw std::invalid_argument("zero coefficient in sparse matrix");
        if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_)
            throw std::invalid_argument("entry out of matrix bounds");
        if (i > 0 && entries_[i - 1].row == e.row && entries_[i - 1].col == e.col)
            throw std::invalid_argument("duplicate (row, col) in sparse matrix");
    }
}

SparseIntMatrix SparseIntMatrix::transposed() const {
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back({e.col, e.row, e.value});
    return SparseIntMatrix(cols_, rows_, std::move(out));
}

std::string SparseIntMatrix::dump() const {
    std::ostringstream os;
    os << rows_ << " " << cols_ << " " << entries_.size() << "\n";
    for (const auto& e : entries_)
        os << e.row + 1 << " " << e.col + 1 << " " << e.value << "\n";
    return os.str();
}

CochainComplex::CochainComplex(Graph g, CliqueFamily sigma)
    : g_(std::move(g)), sigma_(std::move(sigma)) {
    sigma_.validate_for(g_);
    n_ = g_.vertex_count();
    m_ = g_.edge_count();
    s_ = sigma_.size();
    gen_count_ = n_ + m_ + s_;
    if (gen_count_ > 64)
        throw std::invalid_argument("complex has more than 64 generators");

    gen_support_.assign(gen_count_, 0);
    gen_weight_.assign(gen_count_, 0);
    for (int i = 0; i < n_; ++i) {
        gen_support_[i] = std::uint64_t{1} << i;
        gen_weight_[i] = 1;
    }
    edge_vertex_gens_.resize(m_);
    for (int e = 0; e < m_; ++e) {
        auto [u, v] = g_.edges()[e];
        edge_vertex_gens_[e] = {u - 1, v - 1};
        gen_support_[n_ + e] = (std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (v - 1));
        gen_weight_[n_ + e] = 2;
    }
    // clique-duals carry no support and weight 0
    ggi_coef_.assign(n_ + m_, std::vector<int>(s_, 0));
    for (int k = 0; k < s_; ++k) {
        VertexSet c = sigma_[k];
        for (int i = 0; i < n_; ++i)
            if (c.contains(i + 1)) ggi_coef_[i][k] = 1;
        for (int e = 0; e < m_; ++e) {
            auto [u, v] = g_.edges()[e];
            ggi_coef_[n_ + e][k] = (c.contains(u) ? 1 : 0) + (c.contains(v) ? 1 : 0);
        }
    }
}

GeneratorIndex CochainComplex::generator(int index) const {
    GeneratorIndex gi;
    if (index < n_) {
        gi.kind = GeneratorIndex::Kind::Vertex;
        gi.vertex = index + 1;
    } else if (index < n_ + m_) {
        gi.kind = GeneratorIndex::Kind::Edge;
        gi.edge = g_.edges()[index - n_];
    } else {
        gi.kind = GeneratorIndex::Kind::Clique;
        gi.clique = index - n_ - m_ + 1;
    }
    return gi;
}

VertexSet CochainComplex::support(Monomial m) const {
    std::uint64_t bits = 0;
    for (std::uint64_t rest = m; rest; rest &= rest - 1)
        bits |= gen_support_[__builtin_ctzll(rest)];
    return VertexSet(bits);
}

int CochainComplex::weight(Monomial m) const {
    int w = 0;
    for (std::uint64_t rest = m; rest; rest &= rest - 1)
        w += gen_weight_[__builtin_ctzll(rest)];
    return w;
}

std::string CochainComplex::monomial_label(Monomial m) const {
    if (m == 0) return "1";
    std::string out;
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
        if (!out.empty()) out += " ";
        out += generator(__builtin_ctzll(rest)).label();
    }
    return out;
}

std::vector<Monomial> CochainComplex::basis(int degree, const BasisFilter& filter) const {
    std::vector<Monomial> out;
    if (degree < 0 || degree > gen_count_) return out;
    if (degree == 0) {
        bool keep = (!filter.support || filter.support->empty()) &&
                    (!filter.weight || *filter.weight == 0);
        if (keep) out.push_back(0);
        return out;
    }
    // lexicographic enumeration of strictly increasing index sequences
    std::vector<int> pick(degree);
    for (int i = 0; i < degree; ++i) pick[i] = i;
    while (true) {
        Monomial m = 0;
        for (int idx : pick) m |= std::uint64_t{1} << idx;
        if ((!filter.support || support(m) == *filter.support) &&
            (!filter.weight || weight(m) == *filter.weight))
            out.push_back(m);
        int i = degree - 1;
        while (i >= 0 && pick[i] == gen_count_ - degree + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < degree; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<std::pair<Monomial, std::int64_t>> CochainComplex::apply_q(Monomial m) const {
    std::map<Monomial, std::int64_t> acc;
    auto below = [](int gen) { return (std::uint64_t{1} << gen) - 1; };
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
        int gidx = __builtin_ctzll(rest);
        std::uint64_t others = m & ~(std::uint64_t{1} << gidx);
        if (gidx >= n_ && gidx < n_ + m_) {
            // Q(x_{u,v}*) = x_u* x_v* + sum_k |{u,v} n sigma_k| x_{u,v}* y_k*
            auto [ug, vg] = edge_vertex_gens_[gidx - n_];
            std::uint64_t ub = std::uint64_t{1} << ug, vb = std::uint64_t{1} << vg;
            if (!(others & ub) && !(others & vb)) {
                int sign = __builtin_popcountll(m & below(gidx)) & 1 ? -1 : 1;
                if (__builtin_popcountll(others & below(vg)) & 1) sign = -sign;
                if (__builtin_popcountll(others & below(ug)) & 1) sign = -sign;
                acc[others | ub | vb] += sign;
            }
        }
        if (gidx < n_ + m_ && s_ > 0) {
            for (int k = 0; k < s_; ++k) {
                int c = ggi_coef_[gidx][k];
                if (c == 0) continue;
                int ygen = n_ + m_ + k;
                std::uint64_t yb = std::uint64_t{1} << ygen;
                if (m & yb) continue;
                int sign = __builtin_popcountll(others & below(ygen)) & 1 ? -1 : 1;
                acc[m | yb] += sign * c;
            }
        }
    }
    std::vector<std::pair<Monomial, std::int64_t>> out;
    for (auto [t, v] : acc)
        if (v != 0) out.emplace_back(t, v);
    return out;
}

SparseIntMatrix CochainComplex::differential_between(const std::vector<Monomial>& src,
                                                     const std::vector<Monomial>& tgt) const {
    std::unordered_map<Monomial, int> row_of;
    row_of.reserve(tgt.size() * 2);
    for (std::size_t i = 0; i < tgt.size(); ++i) row_of.emplace(tgt[i], static_cast<int>(i));
    std::vector<SparseIntMatrix::Entry> entries;
    for (std::size_t c = 0; c < src.size(); ++c) {
        for (auto [t, v] : apply_q(src[c])) {
            auto it = row_of.find(t);
            if (it == row_of.end())
                throw std::logic_error("differential leaves the target basis");
            entries.push_back({it->second, static_cast<int>(c), v});
        }
    }
    return SparseIntMatrix(static_cast<int>(tgt.size()), static_cast<int>(src.size()),
                           std::move(entries));
}

SparseIntMatrix CochainComplex::differential(int degree, const BasisFilter& filter) const {
    return differential_between(basis(degree, filter), basis(degree + 1, filter));
}

bool jacobi_check(const Graph& g, const CliqueFamily& sigma) {
    CochainComplex cc(g, sigma);
    // Q^2 is an even derivation, so Q^2 = 0 on generators forces Q^2 = 0.
    for (int gen = 0; gen < cc.generator_count(); ++gen) {
        std::map<Monomial, std::int64_t> acc;
        for (auto [t1, c1] : cc.apply_q(std::uint64_t{1} << gen))
            for (auto [t2, c2] : cc.apply_q(t1)) acc[t2] += c1 * c2;
        for (auto [t, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

}  // namespace graphcoh
