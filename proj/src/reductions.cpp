#include "ppg/reductions.hpp"

#include "ppg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace ppg {

void CnfFormula::validate(std::size_t max_clause) const {
    if (num_vars < 0) throw PreconditionViolated("negative variable count");
    for (const auto& cl : clauses) {
        if (cl.empty()) throw PreconditionViolated("empty clause");
        std::set<int> lits;
        for (int lit : cl) {
            if (lit == 0 || std::abs(lit) > num_vars)
                throw PreconditionViolated("literal " + std::to_string(lit) + " out of range");
            lits.insert(lit);
        }
        if (lits.size() > max_clause)
            throw PreconditionViolated("clause has " + std::to_string(lits.size()) +
                                       " distinct literals, limit " + std::to_string(max_clause));
    }
}

namespace {

std::string lit_name(int lit) {
    return lit > 0 ? "v" + std::to_string(lit) : "nv" + std::to_string(-lit);
}

std::vector<std::vector<std::string>> clause_sets(const std::vector<std::vector<int>>& clauses) {
    std::vector<std::vector<std::string>> sets;
    for (const auto& cl : clauses) {
        std::set<int> lits(cl.begin(), cl.end());
        std::vector<std::string> s;
        for (int lit : lits) s.push_back(lit_name(lit));
        sets.push_back(std::move(s));
    }
    return sets;
}

}  // namespace

Game from_3sat(const CnfFormula& f) {
    f.validate(3);
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 1; i <= f.num_vars; ++i) {
        std::string u = "u" + std::to_string(i);
        names.push_back(u);
        for (const char* pfx : {"v", "nv", "tv"}) {
            std::string t = pfx + std::to_string(i);
            names.push_back(t);
            covers.emplace_back(u, t);
        }
    }
    return Game::make(Poset::build(names, covers), clause_sets(f.clauses),
                      Convention::MakerBreaker);
}

Game from_setcover(const CoverInstance& c) {
    int n = static_cast<int>(c.elements.size());
    int m = static_cast<int>(c.edges.size());
    if (n < 1 || m < 1) throw PreconditionViolated("from_setcover: needs vertices and edges");
    if (c.k > m || c.k > n)
        throw InvalidBudget("budget " + std::to_string(c.k) + " exceeds " +
                            (c.k > m ? "edge count " + std::to_string(m)
                                     : "vertex count " + std::to_string(n)));
    if (c.k < 0) throw InvalidBudget("negative budget");
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& e : c.edges)
        for (int v : e) {
            if (v < 0 || v >= n) throw PreconditionViolated("from_setcover: edge vertex out of range");
            covered[static_cast<std::size_t>(v)] = 1;
        }
    for (int v = 0; v < n; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            throw PreconditionViolated("from_setcover: vertex '" + c.elements[static_cast<std::size_t>(v)] +
                                       "' is in no edge");

    std::vector<std::string> names;
    auto series = [&](const char* pfx, int count) {
        std::vector<std::string> out;
        for (int i = 1; i <= count; ++i) {
            out.push_back(pfx + std::to_string(i));
            names.push_back(out.back());
        }
        return out;
    };
    auto xv = series("v", n);
    auto xe = series("e", m);
    auto xm = series("m", m - c.k);
    auto xb = series("b", n - c.k);
    names.push_back("x");
    names.push_back("y");

    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& mm : xm)
        for (const auto& v : xv) covers.emplace_back(mm, v);
    for (int j = 0; j < m; ++j)
        for (int v : c.edges[static_cast<std::size_t>(j)])
            covers.emplace_back(xe[static_cast<std::size_t>(j)], xv[static_cast<std::size_t>(v)]);
    for (const auto& e : xe)
        for (const auto& b : xb) covers.emplace_back(e, b);
    for (const auto& v : xv) covers.emplace_back(v, "x");
    for (const auto& b : xb) {
        covers.emplace_back(b, "x");
        covers.emplace_back(b, "y");
    }
    return Game::make(Poset::build(names, covers), {{"x"}}, Convention::MakerBreaker);
}

Game from_3qbf(const QbfFormula& q) {
    if (q.num_vars < 2 || q.num_vars % 2 != 0)
        throw PreconditionViolated("from_3qbf: needs an even number >= 2 of variables");
    if (q.matrix.num_vars != q.num_vars)
        throw PreconditionViolated("from_3qbf: matrix variable count mismatch");
    q.matrix.validate(3);

    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 1; i <= q.num_vars; ++i) {
        std::string v = "v" + std::to_string(i), nv = "nv" + std::to_string(i);
        names.push_back(v);
        names.push_back(nv);
        if (i < q.num_vars) {
            std::string u = "u" + std::to_string(i);
            names.push_back(u);
            covers.emplace_back(v, u);
            covers.emplace_back(nv, u);
            covers.emplace_back(u, "v" + std::to_string(i + 1));
            covers.emplace_back(u, "nv" + std::to_string(i + 1));
        }
    }
    return Game::make(Poset::build(names, covers), clause_sets(q.matrix.clauses),
                      Convention::MakerBreaker);
}

Game from_avoid_true(const AvoidTrueFormula& d) {
    int n = static_cast<int>(d.vars.size());
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    std::vector<std::vector<std::string>> sets;
    for (std::size_t j = 0; j < d.clauses.size(); ++j) {
        const auto& cl = d.clauses[j];
        if (cl.empty() || cl.size() > 2)
            throw PreconditionViolated("from_avoid_true: clause must have 1 or 2 variables");
        std::string u = "u" + std::to_string(j + 1);
        names.push_back(u);
        for (int v : cl) {
            if (v < 0 || v >= n) throw PreconditionViolated("from_avoid_true: variable out of range");
            covers.emplace_back("v" + std::to_string(v + 1), u);
        }
        sets.push_back({u});
    }
    return Game::make(Poset::build(names, covers), sets, Convention::MakerMaker);
}

Game gen_connect_k(int k, int w, int h) {
    if (k < 1 || w < 1 || h < 1) throw PreconditionViolated("gen_connect_k: k, w, h must be >= 1");
    auto cell = [](int col, int row) {
        return "c" + std::to_string(col) + "r" + std::to_string(row);
    };
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int c = 1; c <= w; ++c)
        for (int r = 1; r <= h; ++r) {
            names.push_back(cell(c, r));
            if (r > 1) covers.emplace_back(cell(c, r - 1), cell(c, r));
        }
    std::vector<std::vector<std::string>> sets;
    auto line = [&](int c0, int r0, int dc, int dr) {
        std::vector<std::string> s;
        for (int i = 0; i < k; ++i) s.push_back(cell(c0 + i * dc, r0 + i * dr));
        sets.push_back(std::move(s));
    };
    for (int r = 1; r <= h; ++r)  // horizontal
        for (int c = 1; c + k - 1 <= w; ++c) line(c, r, 1, 0);
    for (int c = 1; c <= w; ++c)  // vertical
        for (int r = 1; r + k - 1 <= h; ++r) line(c, r, 0, 1);
    for (int c = 1; c + k - 1 <= w; ++c)  // diagonals, both directions
        for (int r = 1; r + k - 1 <= h; ++r) {
            line(c, r, 1, 1);
            line(c, r + k - 1, 1, -1);
        }
    return Game::make(Poset::build(names, covers), sets, Convention::MakerBreaker);
}

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;
    explicit LineReader(const std::string& text) : in(text) {}

    // next non-blank, non-comment ('c' for DIMACS, '#' for list formats) line
    bool next(std::string& out, char comment) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            std::istringstream probe(raw);
            std::string first;
            if (!(probe >> first)) continue;
            if (comment == 'c' && first == "c") continue;
            if (comment == '#' && first[0] == '#') continue;
            out = raw;
            return true;
        }
        return false;
    }
};

std::vector<std::vector<int>> read_clauses(LineReader& rd, int num_vars, std::size_t max_clause) {
    std::vector<std::vector<int>> clauses;
    std::vector<int> cur;
    std::string line;
    while (rd.next(line, 'c')) {
        std::istringstream ls(line);
        int lit;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                lit = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw SyntaxError(rd.line_no, "expected integer literal, got '" + tok + "'");
            }
            if (lit == 0) {
                if (cur.empty()) throw SyntaxError(rd.line_no, "empty clause");
                std::set<int> dedup(cur.begin(), cur.end());
                if (dedup.size() > max_clause)
                    throw SyntaxError(rd.line_no, "clause exceeds " + std::to_string(max_clause) +
                                                      " distinct literals");
                clauses.emplace_back(dedup.begin(), dedup.end());
                cur.clear();
            } else {
                if (std::abs(lit) > num_vars)
                    throw SyntaxError(rd.line_no, "literal " + std::to_string(lit) + " out of range");
                cur.push_back(lit);
            }
        }
    }
    if (!cur.empty()) throw SyntaxError(rd.line_no, "clause not terminated by 0");
    return clauses;
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
    LineReader rd(text);
    std::string line;
    if (!rd.next(line, 'c')) throw SyntaxError(rd.line_no, "missing 'p cnf' header");
    std::istringstream hs(line);
    std::string p, fmt;
    int num_vars = 0, num_clauses = 0;
    if (!(hs >> p >> fmt >> num_vars >> num_clauses) || p != "p" || fmt != "cnf" || num_vars < 0)
        throw SyntaxError(rd.line_no, "malformed header '" + line + "'");
    CnfFormula f;
    f.num_vars = num_vars;
    f.clauses = read_clauses(rd, num_vars, 3);
    return f;
}

QbfFormula parse_qdimacs(const std::string& text) {
    LineReader rd(text);
    std::string line;
    if (!rd.next(line, 'c')) throw SyntaxError(rd.line_no, "missing 'p cnf' header");
    std::istringstream hs(line);
    std::string p, fmt;
    int num_vars = 0, num_clauses = 0;
    if (!(hs >> p >> fmt >> num_vars >> num_clauses) || p != "p" || fmt != "cnf" || num_vars < 0)
        throw SyntaxError(rd.line_no, "malformed header '" + line + "'");

    int seen = 0;
    std::string pending;
    while (rd.next(line, 'c')) {
        std::istringstream ls(line);
        std::string q;
        ls >> q;
        if (q != "a" && q != "e") {
            pending = line;
            break;
        }
        const char* expect = seen % 2 == 0 ? "a" : "e";
        if (q != expect)
            throw SyntaxError(rd.line_no, "quantifier blocks must alternate starting universal");
        std::vector<int> vars;
        int v;
        while (ls >> v && v != 0) vars.push_back(v);
        if (vars.size() != 1)
            throw SyntaxError(rd.line_no, "each quantifier block must bind exactly one variable");
        if (vars[0] != seen + 1)
            throw SyntaxError(rd.line_no, "variables must be quantified in order 1..n");
        ++seen;
    }
    if (seen != num_vars)
        throw SyntaxError(rd.line_no, "quantifier prefix binds " + std::to_string(seen) + " of " +
                                          std::to_string(num_vars) + " variables");
    if (num_vars % 2 != 0) throw SyntaxError(rd.line_no, "variable count must be even");

    QbfFormula q;
    q.num_vars = num_vars;
    q.matrix.num_vars = num_vars;
    std::string rest;
    if (!pending.empty()) rest = pending + "\n";
    std::string tail;
    while (std::getline(rd.in, tail)) rest += tail + "\n";
    LineReader body(rest);
    q.matrix.clauses = read_clauses(body, num_vars, 3);
    return q;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

CoverInstance parse_setcover(const std::string& text, int k) {
    CoverInstance c;
    c.k = k;
    std::vector<std::pair<int, std::vector<std::string>>> edge_lines;
    LineReader rd(text);
    std::string line;
    while (rd.next(line, '#')) {
        auto toks = split_ws(line);
        if (toks[0] == "element") {
            if (toks.size() != 2) throw SyntaxError(rd.line_no, "element takes one identifier");
            if (std::find(c.elements.begin(), c.elements.end(), toks[1]) != c.elements.end())
                throw SyntaxError(rd.line_no, "duplicate element '" + toks[1] + "'");
            c.elements.push_back(toks[1]);
        } else if (toks[0] == "edge") {
            if (toks.size() < 2) throw SyntaxError(rd.line_no, "edge needs at least one element");
            edge_lines.emplace_back(rd.line_no, std::vector<std::string>(toks.begin() + 1, toks.end()));
        } else {
            throw SyntaxError(rd.line_no, "unknown directive '" + toks[0] + "'");
        }
    }
    for (auto& [ln, ids] : edge_lines) {
        std::vector<int> e;
        for (const auto& id : ids) {
            auto it = std::find(c.elements.begin(), c.elements.end(), id);
            if (it == c.elements.end())
                throw SyntaxError(ln, "unknown element '" + id + "'");
            int idx = static_cast<int>(it - c.elements.begin());
            if (std::find(e.begin(), e.end(), idx) == e.end()) e.push_back(idx);
        }
        c.edges.push_back(std::move(e));
    }
    return c;
}

AvoidTrueFormula parse_avoidtrue(const std::string& text) {
    AvoidTrueFormula d;
    std::vector<std::pair<int, std::vector<std::string>>> clause_lines;
    LineReader rd(text);
    std::string line;
    while (rd.next(line, '#')) {
        auto toks = split_ws(line);
        if (toks[0] == "var") {
            if (toks.size() != 2) throw SyntaxError(rd.line_no, "var takes one identifier");
            if (std::find(d.vars.begin(), d.vars.end(), toks[1]) != d.vars.end())
                throw SyntaxError(rd.line_no, "duplicate var '" + toks[1] + "'");
            d.vars.push_back(toks[1]);
        } else if (toks[0] == "clause") {
            if (toks.size() < 2 || toks.size() > 3)
                throw SyntaxError(rd.line_no, "clause takes one or two variables");
            clause_lines.emplace_back(rd.line_no, std::vector<std::string>(toks.begin() + 1, toks.end()));
        } else {
            throw SyntaxError(rd.line_no, "unknown directive '" + toks[0] + "'");
        }
    }
    for (auto& [ln, ids] : clause_lines) {
        std::vector<int> cl;
        for (const auto& id : ids) {
            auto it = std::find(d.vars.begin(), d.vars.end(), id);
            if (it == d.vars.end()) throw SyntaxError(ln, "unknown var '" + id + "'");
            int idx = static_cast<int>(it - d.vars.begin());
            if (std::find(cl.begin(), cl.end(), idx) == cl.end()) cl.push_back(idx);
        }
        d.clauses.push_back(std::move(cl));
    }
    return d;
}

}  // namespace ppg
