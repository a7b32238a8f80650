#include "lg/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lg {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    int n = static_cast<int>(values_.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : values_) {
        if (x < 1 || x > n || seen[x]) throw std::invalid_argument("not a permutation of 1..n");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> vals;
    if (text.find(',') != std::string_view::npos) {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty token in permutation");
            vals.push_back(std::stoi(tok));
        }
    } else {
        for (char c : text) {
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
            if (c < '1' || c > '9') throw std::invalid_argument(std::string("bad digit '") + c + "' in permutation");
            vals.push_back(c - '0');
        }
    }
    return Permutation(std::move(vals));
}

std::string Permutation::to_string() const {
    std::string out;
    bool digits = size() <= 9;
    for (int i = 0; i < size(); ++i) {
        if (!digits && i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation Permutation::reversed() const {
    std::vector<int> v(values_.rbegin(), values_.rend());
    return Permutation(std::move(v));
}

Permutation Permutation::value_complement() const {
    int n = size();
    std::vector<int> v(values_);
    for (int& x : v) x = n + 1 - x;
    return Permutation(std::move(v));
}

Graph perm_graph(const Permutation& p) {
    int n = p.size();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.value_at(i) > p.value_at(j)) g.add_edge(i, j);
    return g;
}

namespace {

bool order_isomorphic(const std::vector<int>& sub, const std::vector<int>& pat) {
    for (size_t i = 0; i < sub.size(); ++i)
        for (size_t j = i + 1; j < sub.size(); ++j)
            if ((sub[i] < sub[j]) != (pat[i] < pat[j])) return false;
    return true;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& q) {
    int n = p.size();
    int k = q.size();
    if (k > n) return false;
    if (k == 0) return true;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> sub(k);
    while (true) {
        for (int i = 0; i < k; ++i) sub[i] = p.value_at(idx[i]);
        if (order_isomorphic(sub, q.one_line())) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

bool avoids_all(const Permutation& p, std::span<const Permutation> patterns) {
    for (const auto& q : patterns)
        if (contains_pattern(p, q)) return false;
    return true;
}

}  // namespace lg
