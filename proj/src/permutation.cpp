#include "cartanlift/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cartanlift {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[v - 1])
            throw std::invalid_argument("Perm: not a bijection on {1..r}");
        seen[v - 1] = true;
    }
}

Perm Perm::identity(int r) {
    std::vector<int> im(r);
    std::iota(im.begin(), im.end(), 1);
    return Perm(std::move(im));
}

bool Perm::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Perm Perm::operator*(const Perm& o) const {
    assert(size() == o.size());
    std::vector<int> im(size());
    for (int i = 1; i <= size(); ++i) im[i - 1] = (*this)(o(i));
    return Perm(std::move(im));
}

Perm Perm::inverse() const {
    std::vector<int> im(size());
    for (int i = 1; i <= size(); ++i) im[(*this)(i) - 1] = i;
    return Perm(std::move(im));
}

int Perm::sign() const {
    int inversions = 0;
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if ((*this)(i) > (*this)(j)) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::string Perm::str() const {
    std::string s = "(";
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string((*this)(i));
    }
    return s + ")";
}

std::string Perm::cycles_str() const {
    std::string out;
    std::vector<bool> done(size(), false);
    for (int i = 1; i <= size(); ++i) {
        if (done[i - 1] || (*this)(i) == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!done[j - 1]) {
            done[j - 1] = true;
            if (!first) out += " ";
            out += std::to_string(j);
            first = false;
            j = (*this)(j);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Perm parse_oneline(const std::string& text) {
    std::vector<int> im;
    std::string cur;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            cur.push_back(ch);
        } else {
            if (!cur.empty()) im.push_back(std::stoi(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) im.push_back(std::stoi(cur));
    if (im.empty()) throw std::invalid_argument("parse_oneline: no entries in '" + text + "'");
    return Perm(std::move(im));
}

Perm parse_cycles(const std::string& text, int r) {
    std::vector<int> im(r);
    std::iota(im.begin(), im.end(), 1);
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(') {
            if (text[pos] == ' ') {
                ++pos;
                continue;
            }
            throw std::invalid_argument("parse_cycles: expected '(' in '" + text + "'");
        }
        size_t close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("parse_cycles: unbalanced");
        std::istringstream iss(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        std::string tok;
        while (iss >> tok) {
            for (char& ch : tok)
                if (ch == ',') ch = ' ';
            std::istringstream it2(tok);
            int v;
            while (it2 >> v) cyc.push_back(v);
        }
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a < 1 || a > r) throw std::invalid_argument("parse_cycles: entry out of range");
            im[a - 1] = b;
        }
        pos = close + 1;
    }
    return Perm(std::move(im));
}

Perm rho_power(int r, int k) {
    k = ((k % r) + r) % r;
    std::vector<int> im(r);
    for (int i = 1; i <= r; ++i) im[i - 1] = (i - 1 + k) % r + 1;
    return Perm(std::move(im));
}

Perm tau(int r) {
    std::vector<int> im(2 * r);
    for (int l = 1; l <= 2 * r; ++l) im[l - 1] = l <= r ? 2 * l - 1 : 2 * (l - r);
    return Perm(std::move(im));
}

Perm block_compose(const Perm& outer, const std::vector<Perm>& inner) {
    int r = outer.size();
    if (static_cast<int>(inner.size()) != r)
        throw std::invalid_argument("block_compose: arity mismatch");
    std::vector<int> sizes(r), in_off(r), out_off(r);
    for (int i = 0; i < r; ++i) sizes[i] = inner[i].size();
    int total = 0;
    for (int i = 0; i < r; ++i) {
        in_off[i] = total;
        total += sizes[i];
    }
    // output slot k holds block outer^{-1}(k)
    std::vector<int> slot_of_block(r);
    for (int i = 1; i <= r; ++i) slot_of_block[i - 1] = outer(i);
    std::vector<int> out_sizes(r);
    for (int i = 0; i < r; ++i) out_sizes[slot_of_block[i] - 1] = sizes[i];
    int acc = 0;
    for (int k = 0; k < r; ++k) {
        out_off[k] = acc;
        acc += out_sizes[k];
    }
    std::vector<int> im(total);
    for (int i = 0; i < r; ++i)
        for (int j = 1; j <= sizes[i]; ++j)
            im[in_off[i] + j - 1] = out_off[slot_of_block[i] - 1] + inner[i](j);
    return Perm(std::move(im));
}

Perm f_hom(int r, int k) {
    return block_compose(rho_power(r, k), std::vector<Perm>(r, Perm::identity(2)));
}

Perm g_hom(int r, int k) {
    return block_compose(Perm::identity(2), {rho_power(r, k), rho_power(r, k)});
}

Perm splice_action(int r, int k) { return g_hom(r, k); }

}  // namespace cartanlift
