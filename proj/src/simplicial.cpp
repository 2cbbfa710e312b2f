#include "cartanlift/simplicial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cartanlift {

namespace {

// Insert s_i in front of a normal-form word (strictly decreasing indices).
std::vector<int> word_with_degen(std::vector<int> word, int i) {
    // s_i s_j = s_{j+1} s_i for i <= j; push i into place, bumping larger indices.
    std::vector<int> out;
    size_t k = 0;
    while (k < word.size() && i <= word[k]) {
        out.push_back(word[k] + 1);
        ++k;
    }
    out.push_back(i);
    for (; k < word.size(); ++k) out.push_back(word[k]);
    return out;
}

}  // namespace

GSimplex GSimplex::degen(int i) const {
    GSimplex s = *this;
    s.word = word_with_degen(s.word, i);
    return s;
}

GSimplex GSimplex::face(int i) const {
    // Move d_i through the degeneracy word using the simplicial identities.
    std::vector<int> passed;
    size_t k = 0;
    while (k < word.size()) {
        int u = word[k];
        if (i < u) {
            passed.push_back(u - 1);
            ++k;
        } else if (i == u || i == u + 1) {
            // d_i s_u = id: drop both, keep the remaining inner word.
            GSimplex s{host, base_dim, base_idx, {}};
            s.word.assign(word.begin() + k + 1, word.end());
            for (auto it = passed.rbegin(); it != passed.rend(); ++it) s = s.degen(*it);
            return s;
        } else {
            passed.push_back(u);
            i -= 1;
            ++k;
        }
    }
    GSimplex s = host->face(base_dim, base_idx, i);
    for (auto it = passed.rbegin(); it != passed.rend(); ++it) s = s.degen(*it);
    return s;
}

std::string GSimplex::str() const {
    std::string out;
    for (int u : word) out += "s" + std::to_string(u) + ".";
    out += host->name(base_dim, base_idx);
    return out;
}

int SimplicialSetBase::index_of(int dim, const std::string& nm) const {
    for (int i = 0; i < count(dim); ++i)
        if (name(dim, i) == nm) return i;
    throw std::out_of_range("no simplex named '" + nm + "' in dimension " + std::to_string(dim));
}

std::vector<GSimplex> SimplicialSetBase::simplices(int dim) const {
    std::vector<GSimplex> out;
    for (int i = 0; i < count(dim); ++i) out.push_back(simplex(dim, i));
    return out;
}

FormalSum<GSimplex> SimplicialSetBase::boundary(const GSimplex& s) const {
    FormalSum<GSimplex> out;
    if (s.dim() == 0) return out;
    for (int i = 0; i <= s.dim(); ++i) {
        GSimplex f = s.face(i);
        if (!f.degenerate()) out.add_term(f, BigInt(i % 2 == 0 ? 1 : -1));
    }
    return out;
}

void SimplicialSetBase::validate() const {
    for (int d = 2; d <= top_dim(); ++d) {
        for (int idx = 0; idx < count(d); ++idx) {
            GSimplex s = simplex(d, idx);
            for (int j = 1; j <= d; ++j)
                for (int i = 0; i < j; ++i)
                    if (!(s.face(j).face(i) == s.face(i).face(j - 1)))
                        throw std::runtime_error("simplicial identity fails at " + name(d, idx));
        }
    }
}

// ---------------------------------------------------------------- standard

namespace {

std::vector<std::vector<std::vector<int>>> subsets_table(int n, bool proper_only) {
    std::vector<std::vector<std::vector<int>>> tbl(proper_only ? n : n + 1);
    int top = proper_only ? n - 1 : n;
    for (int d = 0; d <= top; ++d) {
        std::vector<int> cur;
        // enumerate (d+1)-subsets of {0..n} in lexicographic order
        std::vector<int> idxs(d + 1);
        for (int i = 0; i <= d; ++i) idxs[i] = i;
        while (true) {
            tbl[d].push_back(idxs);
            int k = d;
            while (k >= 0 && idxs[k] == n - (d - k)) --k;
            if (k < 0) break;
            ++idxs[k];
            for (int j = k + 1; j <= d; ++j) idxs[j] = idxs[j - 1] + 1;
        }
    }
    return tbl;
}

std::string vertex_name(const std::vector<int>& vs) {
    std::string s = "[";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "]";
}

}  // namespace

StandardSimplex::StandardSimplex(int n) : n_(n), table_(subsets_table(n, false)) {
    for (int d = 0; d <= n_; ++d)
        for (int i = 0; i < static_cast<int>(table_[d].size()); ++i) index_[table_[d][i]] = i;
}

int StandardSimplex::count(int dim) const {
    return dim >= 0 && dim <= n_ ? static_cast<int>(table_[dim].size()) : 0;
}

GSimplex StandardSimplex::face(int dim, int idx, int i) const {
    std::vector<int> vs = table_[dim][idx];
    vs.erase(vs.begin() + i);
    return GSimplex{this, dim - 1, index_.at(vs), {}};
}

std::string StandardSimplex::name(int dim, int idx) const { return vertex_name(table_[dim][idx]); }

int StandardSimplex::index_of_vertices(const std::vector<int>& vs) const { return index_.at(vs); }

GSimplex StandardSimplex::from_vertex_tuple(std::vector<int> verts) const {
    std::vector<int> word;
    for (int i = static_cast<int>(verts.size()) - 2; i >= 0; --i)
        if (verts[i] == verts[i + 1]) {
            word.push_back(i);
            verts.erase(verts.begin() + i + 1);
        }
    GSimplex s{this, static_cast<int>(verts.size()) - 1, index_.at(verts), {}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) s = s.degen(*it);
    return s;
}

BoundarySimplex::BoundarySimplex(int n) : n_(n), table_(subsets_table(n, true)) {
    if (n < 1) throw std::invalid_argument("boundary needs n >= 1");
    for (int d = 0; d <= n_ - 1; ++d)
        for (int i = 0; i < static_cast<int>(table_[d].size()); ++i) index_[table_[d][i]] = i;
}

int BoundarySimplex::count(int dim) const {
    return dim >= 0 && dim < n_ ? static_cast<int>(table_[dim].size()) : 0;
}

GSimplex BoundarySimplex::face(int dim, int idx, int i) const {
    std::vector<int> vs = table_[dim][idx];
    vs.erase(vs.begin() + i);
    return GSimplex{this, dim - 1, index_.at(vs), {}};
}

std::string BoundarySimplex::name(int dim, int idx) const { return vertex_name(table_[dim][idx]); }

// ---------------------------------------------------------------- explicit

ExplicitSet::ExplicitSet(std::vector<std::vector<std::string>> names,
                         std::map<std::string, std::vector<FaceEntry>> faces)
    : names_(std::move(names)) {
    faces_.resize(names_.size());
    for (size_t d = 0; d < names_.size(); ++d) {
        faces_[d].resize(names_[d].size());
        for (size_t i = 0; i < names_[d].size(); ++i) {
            if (d == 0) continue;
            auto it = faces.find(names_[d][i]);
            if (it == faces.end())
                throw std::invalid_argument("missing faces for " + names_[d][i]);
            if (it->second.size() != d + 1)
                throw std::invalid_argument("wrong face count for " + names_[d][i]);
            for (const FaceEntry& fe : it->second)
                if (fe.base_dim + static_cast<int>(fe.word.size()) != static_cast<int>(d) - 1)
                    throw std::invalid_argument("face dimension mismatch for " + names_[d][i]);
            faces_[d][i] = it->second;
        }
    }
    validate();
}

int ExplicitSet::count(int dim) const {
    return dim >= 0 && dim < static_cast<int>(names_.size())
               ? static_cast<int>(names_[dim].size())
               : 0;
}

GSimplex ExplicitSet::face(int dim, int idx, int i) const {
    const FaceEntry& fe = faces_[dim][idx][i];
    return GSimplex{this, fe.base_dim, fe.base_idx, fe.word};
}

std::string ExplicitSet::name(int dim, int idx) const { return names_[dim][idx]; }

// ---------------------------------------------------------------- maps

void SimplicialMap::set_image(int dim, int idx, GSimplex img) {
    images_[{dim, idx}] = std::move(img);
}

GSimplex SimplicialMap::apply(const GSimplex& s) const {
    GSimplex img = images_.at({s.base_dim, s.base_idx});
    for (auto it = s.word.rbegin(); it != s.word.rend(); ++it) img = img.degen(*it);
    return img;
}

FormalSum<GSimplex> SimplicialMap::push(const FormalSum<GSimplex>& chain) const {
    FormalSum<GSimplex> out;
    for (const auto& [k, c] : chain) {
        GSimplex img = apply(k);
        if (!img.degenerate()) out.add_term(img, c);
    }
    return out;
}

SimplicialMap SimplicialMap::face_inclusion(const StandardSimplex& small,
                                            const StandardSimplex& big, int omitted_vertex) {
    SimplicialMap f(&small, &big);
    for (int d = 0; d <= small.top_dim(); ++d)
        for (int i = 0; i < small.count(d); ++i) {
            std::vector<int> vs = small.vertices(d, i);
            for (int& v : vs)
                if (v >= omitted_vertex) ++v;
            f.set_image(d, i, GSimplex{&big, d, big.index_of_vertices(vs), {}});
        }
    return f;
}

// ---------------------------------------------------------------- cochains

void Cochain::set(int idx, BigInt v) {
    if (v.is_zero())
        vals_.erase(idx);
    else
        vals_[idx] = std::move(v);
}

BigInt Cochain::value(int idx) const {
    auto it = vals_.find(idx);
    return it == vals_.end() ? BigInt(0) : it->second;
}

BigInt Cochain::operator()(const GSimplex& s) const {
    if (s.degenerate() || s.dim() != cdeg_) return BigInt(0);
    return value(s.base_idx);
}

BigInt Cochain::eval(const FormalSum<GSimplex>& chain) const {
    BigInt out(0);
    for (const auto& [k, c] : chain) out += c * (*this)(k);
    return out;
}

Cochain Cochain::dual(const SimplicialSetBase* host, int dim, int idx) {
    Cochain c(host, dim);
    c.set(idx, BigInt(1));
    return c;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    assert(host_ == o.host_ && cdeg_ == o.cdeg_);
    for (const auto& [k, v] : o.vals_) set(k, value(k) + v);
    return *this;
}

Cochain& Cochain::operator*=(const BigInt& s) {
    if (s.is_zero()) {
        vals_.clear();
        return *this;
    }
    for (auto& [k, v] : vals_) v *= s;
    return *this;
}

Cochain Cochain::operator-() const {
    Cochain r = *this;
    for (auto& [k, v] : r.vals_) v = -v;
    return r;
}

Cochain Cochain::coboundary() const {
    Cochain out(host_, cdeg_ + 1);
    if (cdeg_ + 1 > host_->top_dim()) return out;
    BigInt outer(cdeg_ % 2 == 0 ? -1 : 1);  // (-1)^{d+1}
    for (int idx = 0; idx < host_->count(cdeg_ + 1); ++idx) {
        BigInt v = eval(host_->boundary(host_->simplex(cdeg_ + 1, idx)));
        out.set(idx, outer * v);
    }
    return out;
}

bool Cochain::is_zero() const { return vals_.empty(); }

bool Cochain::is_zero_mod(std::uint32_t p) const {
    for (const auto& [k, v] : vals_)
        if (v.mod(p) != 0) return false;
    return true;
}

Cochain Cochain::reduced_mod(std::uint32_t p) const {
    Cochain out(host_, cdeg_);
    for (const auto& [k, v] : vals_) out.set(k, BigInt(static_cast<long long>(v.mod(p))));
    return out;
}

Cochain Cochain::pullback(const SimplicialMap& f) const {
    assert(f.target() == host_);
    Cochain out(f.source(), cdeg_);
    for (int idx = 0; idx < f.source()->count(cdeg_); ++idx)
        out.set(idx, (*this)(f.apply(f.source()->simplex(cdeg_, idx))));
    return out;
}

std::string Cochain::str() const {
    if (vals_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : vals_) {
        BigInt a = v;
        bool neg = a.sign() < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (!(a == BigInt(1))) {
            out += a.str();
            out += "*";
        }
        out += host_->name(cdeg_, k);
    }
    return out;
}

}  // namespace cartanlift
