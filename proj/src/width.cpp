#include "lg/width.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace lg {

namespace {

bool similar(const Graph& g, int x, int y) {
    for (int z = 0; z < g.vertex_count(); ++z) {
        if (z == x || z == y) continue;
        if (g.adjacent(x, z) != g.adjacent(y, z)) return false;
    }
    return true;
}

}  // namespace

SimilarityPartition neighbourhood_diversity(const Graph& g) {
    int n = g.vertex_count();
    SimilarityPartition sp;
    for (int v = 0; v < n; ++v) {
        bool placed = false;
        for (auto& cls : sp.classes)
            if (similar(g, v, cls.front())) {
                cls.push_back(v);
                placed = true;
                break;
            }
        if (!placed) sp.classes.push_back({v});
    }
    // the similarity relation is an equivalence; distrust and re-check
    for (size_t i = 0; i < sp.classes.size(); ++i) {
        for (int x : sp.classes[i])
            for (int y : sp.classes[i])
                if (x < y && !similar(g, x, y))
                    throw std::logic_error("similarity classes are inconsistent");
        for (size_t j = i + 1; j < sp.classes.size(); ++j)
            for (int x : sp.classes[i])
                for (int y : sp.classes[j])
                    if (similar(g, x, y)) throw std::logic_error("similarity classes are inconsistent");
    }
    for (const auto& cls : sp.classes) {
        if (cls.size() >= 2 && is_clique_set(g, cls))
            sp.clique.push_back(1);
        else if (is_independent_set(g, cls))
            sp.clique.push_back(0);
        else
            throw std::logic_error("similarity class is neither a clique nor independent");
    }
    // cross-class homogeneity
    for (size_t i = 0; i < sp.classes.size(); ++i)
        for (size_t j = i + 1; j < sp.classes.size(); ++j) {
            bool any = false, all = true;
            for (int x : sp.classes[i])
                for (int y : sp.classes[j]) {
                    bool e = g.adjacent(x, y);
                    any |= e;
                    all &= e;
                }
            if (any && !all) throw std::logic_error("similarity classes are not homogeneous");
        }
    return sp;
}

LetterRepresentation nd_representation(const Graph& g) {
    SimilarityPartition sp = neighbourhood_diversity(g);
    int k = sp.diversity();
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i)
        names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
    LetterRepresentation rep;
    rep.decoder = Decoder(std::move(names));
    for (int i = 0; i < k; ++i) {
        if (sp.clique[i]) rep.decoder.add_pair(i, i);
        for (int j = i + 1; j < k; ++j)
            if (!sp.classes[i].empty() && !sp.classes[j].empty() &&
                g.adjacent(sp.classes[i].front(), sp.classes[j].front())) {
                rep.decoder.add_pair(i, j);
                rep.decoder.add_pair(j, i);
            }
    }
    for (int i = 0; i < k; ++i)
        for (int v : sp.classes[i]) {
            rep.word.push_back(i);
            rep.vertex_of.push_back(v);
        }
    if (!verify_representation(g, rep))
        throw std::logic_error("similarity-class representation failed verification");
    return rep;
}

// --- clique-width expressions ---

CwExpr cw_create(int label, std::string name) {
    auto n = std::make_shared<CwNode>();
    n->kind = CwNode::Kind::create;
    n->label = label;
    n->name = std::move(name);
    return n;
}

CwExpr cw_union(CwExpr left, CwExpr right) {
    if (!left || !right) throw std::invalid_argument("union child is null");
    auto n = std::make_shared<CwNode>();
    n->kind = CwNode::Kind::unite;
    n->child = std::move(left);
    n->child2 = std::move(right);
    return n;
}

CwExpr cw_join(int i, int j, CwExpr child) {
    if (i == j) throw std::invalid_argument("join needs two distinct labels");
    if (!child) throw std::invalid_argument("join child is null");
    auto n = std::make_shared<CwNode>();
    n->kind = CwNode::Kind::join;
    n->label = i;
    n->label2 = j;
    n->child = std::move(child);
    return n;
}

CwExpr cw_rename(int from, int to, CwExpr child) {
    if (!child) throw std::invalid_argument("rename child is null");
    auto n = std::make_shared<CwNode>();
    n->kind = CwNode::Kind::rename;
    n->label = from;
    n->label2 = to;
    n->child = std::move(child);
    return n;
}

namespace {

class CwParser {
public:
    explicit CwParser(std::string_view text) : text_(text) {}

    CwExpr parse() {
        CwExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    CwExpr parse_expr() {
        CwExpr left = parse_term();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                ++pos_;
                left = cw_union(std::move(left), parse_term());
            } else {
                return left;
            }
        }
    }

    CwExpr parse_term() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            CwExpr e = parse_expr();
            expect(')');
            return e;
        }
        if (c == 'c') {
            ++pos_;
            int label = parse_int();
            expect('(');
            std::string name = parse_name();
            expect(')');
            return cw_create(label, std::move(name));
        }
        if (c == 'e') {
            ++pos_;
            int i = parse_int();
            expect(',');
            int j = parse_int();
            expect('(');
            CwExpr child = parse_expr();
            expect(')');
            return cw_join(i, j, std::move(child));
        }
        if (c == 'r') {
            ++pos_;
            int i = parse_int();
            expect('-');
            expect('>');
            int j = parse_int();
            expect('(');
            CwExpr child = parse_expr();
            expect(')');
            return cw_rename(i, j, std::move(child));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    int parse_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a label");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    std::string parse_name() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected a vertex name");
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("clique-width expression: " + msg + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

CwExpr parse_cw(std::string_view text) { return CwParser(text).parse(); }

std::string cw_to_text(const CwExpr& e) {
    switch (e->kind) {
        case CwNode::Kind::create: return "c" + std::to_string(e->label) + "(" + e->name + ")";
        case CwNode::Kind::join:
            return "e" + std::to_string(e->label) + "," + std::to_string(e->label2) + "(" +
                   cw_to_text(e->child) + ")";
        case CwNode::Kind::rename:
            return "r" + std::to_string(e->label) + "->" + std::to_string(e->label2) + "(" +
                   cw_to_text(e->child) + ")";
        case CwNode::Kind::unite: {
            std::string right = cw_to_text(e->child2);
            if (e->child2->kind == CwNode::Kind::unite) right = "(" + right + ")";
            return cw_to_text(e->child) + "+" + right;
        }
    }
    throw std::logic_error("bad expression node");
}

namespace {

void collect_labels(const CwExpr& e, std::set<int>& out) {
    switch (e->kind) {
        case CwNode::Kind::create: out.insert(e->label); break;
        case CwNode::Kind::join:
        case CwNode::Kind::rename:
            out.insert(e->label);
            out.insert(e->label2);
            collect_labels(e->child, out);
            break;
        case CwNode::Kind::unite:
            collect_labels(e->child, out);
            collect_labels(e->child2, out);
            break;
    }
}

struct EvalCtx {
    std::vector<std::string> names;
    std::vector<int> labels;
    std::set<std::pair<int, int>> edges;
    std::set<std::string> seen_names;
};

// returns the vertex ids of the subexpression
std::vector<int> eval_rec(const CwExpr& e, EvalCtx& ctx) {
    switch (e->kind) {
        case CwNode::Kind::create: {
            if (!ctx.seen_names.insert(e->name).second)
                throw std::invalid_argument("duplicate vertex name '" + e->name + "'");
            int id = static_cast<int>(ctx.names.size());
            ctx.names.push_back(e->name);
            ctx.labels.push_back(e->label);
            return {id};
        }
        case CwNode::Kind::unite: {
            std::vector<int> vs = eval_rec(e->child, ctx);
            std::vector<int> ws = eval_rec(e->child2, ctx);
            vs.insert(vs.end(), ws.begin(), ws.end());
            return vs;
        }
        case CwNode::Kind::join: {
            std::vector<int> vs = eval_rec(e->child, ctx);
            for (int u : vs)
                for (int v : vs) {
                    if (u >= v) continue;
                    bool match = (ctx.labels[u] == e->label && ctx.labels[v] == e->label2) ||
                                 (ctx.labels[u] == e->label2 && ctx.labels[v] == e->label);
                    if (match) ctx.edges.insert({u, v});
                }
            return vs;
        }
        case CwNode::Kind::rename: {
            std::vector<int> vs = eval_rec(e->child, ctx);
            for (int v : vs)
                if (ctx.labels[v] == e->label) ctx.labels[v] = e->label2;
            return vs;
        }
    }
    throw std::logic_error("bad expression node");
}

}  // namespace

int cw_label_count(const CwExpr& e) {
    std::set<int> labels;
    collect_labels(e, labels);
    return static_cast<int>(labels.size());
}

CwEval eval_expression(const CwExpr& e) {
    EvalCtx ctx;
    eval_rec(e, ctx);
    CwEval out;
    out.graph = Graph(static_cast<int>(ctx.names.size()));
    for (auto [u, v] : ctx.edges) out.graph.add_edge(u, v);
    out.names = std::move(ctx.names);
    out.labels = std::move(ctx.labels);
    return out;
}

namespace {

bool is_wrapped_create(const CwExpr& e) {
    const CwNode* n = e.get();
    while (n->kind == CwNode::Kind::join || n->kind == CwNode::Kind::rename) n = n->child.get();
    return n->kind == CwNode::Kind::create;
}

}  // namespace

bool is_caterpillar_expression(const CwExpr& e) {
    switch (e->kind) {
        case CwNode::Kind::create: return true;
        case CwNode::Kind::join:
        case CwNode::Kind::rename: return is_caterpillar_expression(e->child);
        case CwNode::Kind::unite:
            if (!is_wrapped_create(e->child) && !is_wrapped_create(e->child2)) return false;
            return is_caterpillar_expression(e->child) && is_caterpillar_expression(e->child2);
    }
    return false;
}

CwExpr lcw_expression_from_letters(const Graph& target, const LetterRepresentation& r) {
    if (!verify_representation(target, r))
        throw std::invalid_argument("representation does not verify against the target graph");
    if (r.word.empty())
        throw std::invalid_argument("the empty graph has no clique-width expression");
    // label 0 stages the entering vertex; letter x maps to label x+1
    int k = r.decoder.size();
    CwExpr expr = cw_create(r.word[0] + 1, std::to_string(r.vertex_of[0]));
    for (size_t i = 1; i < r.word.size(); ++i) {
        CwExpr cur = cw_union(std::move(expr), cw_create(0, std::to_string(r.vertex_of[i])));
        for (int x = 0; x < k; ++x)
            if (r.decoder.has_pair(x, r.word[i])) cur = cw_join(x + 1, 0, std::move(cur));
        cur = cw_rename(0, r.word[i] + 1, std::move(cur));
        expr = std::move(cur);
    }
    return expr;
}

}  // namespace lg
