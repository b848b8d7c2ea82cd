#pragma once

// Coxeter diagrams of hyperbolic (quasi-)Coxeter polytopes.
//
// Nodes are mirrors. An edge of weight q/p means the two mirrors meet at the
// dihedral angle p*pi/q (weight m: angle pi/m); missing edges are right angles.
// A dashed edge joins ultraparallel mirrors at distance l, Gram entry -cosh l.
// Coxeter symbols describe the non-dashed part: "[5,3,3,3,4]" is a chain,
// a trailing "3^{i,j}" forks the chain end into two weight-3 strings of i and j
// edges, and "[3^{i,j,k}]" is the Y-shaped diagram.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orbivol/error.hpp"
#include "orbivol/numkernel.hpp"

namespace orbivol::coxeter {

class UnresolvedEdgeError : public Error {
public:
    using Error::Error;
};

class NonRealizableError : public Error {
public:
    using Error::Error;
};

class AmbiguityError : public Error {
public:
    AmbiguityError(const std::string& what, std::vector<Real> roots) : Error(what), roots_(std::move(roots)) {}
    const std::vector<Real>& roots() const noexcept { return roots_; }

private:
    std::vector<Real> roots_;
};

// Weight q/p (reduced), angle p*pi/q. Must exceed 2.
struct RationalWeight {
    long q = 3;
    long p = 1;

    friend bool operator==(const RationalWeight&, const RationalWeight&) = default;
};

// Dashed edge; length is unknown until supplied or solved.
struct Dashed {
    std::optional<Real> length;
};

using EdgeWeight = std::variant<RationalWeight, Dashed>;

struct Edge {
    std::size_t i = 0;
    std::size_t j = 0;
    EdgeWeight weight;

    bool dashed() const { return std::holds_alternative<Dashed>(weight); }
};

inline RationalWeight make_weight(long q, long p = 1) {
    if (p <= 0 || q <= 0) throw ValidationError("edge weight must be a positive rational");
    long g = std::gcd(q, p);
    q /= g;
    p /= g;
    if (q <= 2 * p) {
        throw ValidationError("edge weight " + std::to_string(q) + (p == 1 ? "" : "/" + std::to_string(p)) +
                              " must exceed 2");
    }
    return {q, p};
}

inline std::string to_string(const RationalWeight& w) {
    return w.p == 1 ? std::to_string(w.q) : std::to_string(w.q) + "/" + std::to_string(w.p);
}

class CoxeterDiagram {
public:
    CoxeterDiagram() = default;
    explicit CoxeterDiagram(std::size_t nodes) : nodes_(nodes) {}

    std::size_t node_count() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t add_node() { return nodes_++; }

    void add_edge(std::size_t i, std::size_t j, EdgeWeight weight) {
        if (i == j) throw ValidationError("self-loop at node " + std::to_string(i));
        if (i >= nodes_ || j >= nodes_) throw ValidationError("edge refers to a missing node");
        if (find(i, j) != nullptr) {
            throw ValidationError("duplicate edge " + std::to_string(i) + "-" + std::to_string(j));
        }
        if (auto* w = std::get_if<RationalWeight>(&weight)) *w = make_weight(w->q, w->p);
        if (auto* d = std::get_if<Dashed>(&weight); d && d->length && *d->length <= 0) {
            throw ValidationError("dashed edge length must be positive");
        }
        edges_.push_back({std::min(i, j), std::max(i, j), std::move(weight)});
    }

    const Edge* find(std::size_t i, std::size_t j) const {
        auto [a, b] = std::minmax(i, j);
        for (const auto& e : edges_)
            if (e.i == a && e.j == b) return &e;
        return nullptr;
    }

    Edge* find(std::size_t i, std::size_t j) {
        return const_cast<Edge*>(static_cast<const CoxeterDiagram&>(*this).find(i, j));
    }

    void set_dashed_length(std::size_t i, std::size_t j, const Real& length) {
        Edge* e = find(i, j);
        if (e == nullptr || !e->dashed()) throw ValidationError("no dashed edge between the given nodes");
        if (length <= 0) throw ValidationError("dashed edge length must be positive");
        std::get<Dashed>(e->weight).length = length;
    }

    std::vector<std::pair<std::size_t, std::size_t>> unknown_dashed() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& e : edges_)
            if (e.dashed() && !std::get<Dashed>(e.weight).length) out.emplace_back(e.i, e.j);
        return out;
    }

    // Connectivity of the graph with dashed edges removed.
    bool solid_part_connected() const {
        if (nodes_ == 0) return true;
        std::vector<std::size_t> parent(nodes_);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto root = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t components = nodes_;
        for (const auto& e : edges_) {
            if (e.dashed()) continue;
            auto a = root(e.i), b = root(e.j);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
        return components == 1;
    }

private:
    std::size_t nodes_ = 0;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Symbols

namespace detail {

class SymbolParser {
public:
    explicit SymbolParser(const std::string& s) : s_(s) {}

    CoxeterDiagram parse() {
        skip_space();
        expect('[');
        std::vector<RationalWeight> chain;
        std::vector<long> branches;
        while (true) {
            skip_space();
            std::size_t start = pos_;
            long q = integer();
            skip_space();
            if (peek() == '^') {
                if (q != 3) throw ParseError("branch token must have base 3", start);
                ++pos_;
                branches = branch_list();
                skip_space();
                if (peek() != ']') throw ParseError("branch token must be the last token", pos_);
                break;
            }
            long p = 1;
            if (peek() == '/') {
                ++pos_;
                skip_space();
                p = integer();
            }
            try {
                chain.push_back(make_weight(q, p));
            } catch (const ValidationError& e) {
                throw ValidationError(std::string(e.what()) + " (token at position " + std::to_string(start) + ")");
            }
            skip_space();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        skip_space();
        expect(']');
        skip_space();
        if (pos_ != s_.size()) throw ParseError("trailing characters after symbol", pos_);
        return build(chain, branches);
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    long integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", start);
        if (pos_ - start > 9) throw ParseError("integer too large", start);
        return std::stol(s_.substr(start, pos_ - start));
    }

    std::vector<long> branch_list() {
        std::vector<long> out;
        bool braced = peek() == '{';
        if (braced) ++pos_;
        while (true) {
            skip_space();
            std::size_t start = pos_;
            long n = integer();
            if (n < 1) throw ParseError("branch length must be positive", start);
            out.push_back(n);
            skip_space();
            if (peek() == ',' && braced) {
                ++pos_;
                continue;
            }
            break;
        }
        if (braced) expect('}');
        if (out.size() < 2 || out.size() > 3) throw ParseError("branch token needs two or three lengths", pos_);
        return out;
    }

    CoxeterDiagram build(const std::vector<RationalWeight>& chain, const std::vector<long>& branches) {
        if (branches.size() == 3 && !chain.empty()) {
            throw ParseError("a three-armed 3^{i,j,k} token must stand alone", 0);
        }
        CoxeterDiagram d(chain.size() + 1);
        for (std::size_t k = 0; k < chain.size(); ++k) d.add_edge(k, k + 1, chain[k]);
        std::size_t hub = chain.size();
        for (long len : branches) {
            std::size_t prev = hub;
            for (long k = 0; k < len; ++k) {
                std::size_t next = d.add_node();
                d.add_edge(prev, next, RationalWeight{3, 1});
                prev = next;
            }
        }
        return d;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline CoxeterDiagram parse_symbol(const std::string& s) { return detail::SymbolParser(s).parse(); }

// Canonical symbol of the solid part of a chain, forked-chain or Y diagram.
inline std::string render_symbol(const CoxeterDiagram& d) {
    const std::size_t n = d.node_count();
    using Link = std::pair<std::size_t, RationalWeight>;
    std::vector<std::vector<Link>> adj(n);
    for (const auto& e : d.edges()) {
        if (e.dashed()) continue;
        auto w = std::get<RationalWeight>(e.weight);
        adj[e.i].push_back({e.j, w});
        adj[e.j].push_back({e.i, w});
    }
    auto fail = [] { return ValidationError("diagram has no Coxeter symbol"); };
    if (n < 2 || !d.solid_part_connected()) throw fail();

    // Follows a path from `from` through `start` until its end node; returns the
    // weights in walking order.
    auto walk = [&](std::size_t from, std::size_t start) {
        std::vector<RationalWeight> weights;
        std::size_t prev = from, cur = start;
        while (true) {
            for (const auto& [nb, w] : adj[prev])
                if (nb == cur) weights.push_back(w);
            if (adj[cur].size() == 1) return weights;
            if (adj[cur].size() != 2) throw fail();
            std::size_t next = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
            prev = cur;
            cur = next;
        }
    };
    auto all_three = [](const std::vector<RationalWeight>& ws) {
        return std::all_of(ws.begin(), ws.end(), [](const RationalWeight& w) { return w == RationalWeight{3, 1}; });
    };

    std::size_t hub = n;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() > 3) throw fail();
        if (adj[v].size() == 3) {
            if (hub != n) throw fail();
            hub = v;
        }
    }
    std::ostringstream os;
    os << '[';
    if (hub == n) {
        std::size_t start = n;
        for (std::size_t v = 0; v < n && start == n; ++v)
            if (adj[v].size() == 1) start = v;
        if (start == n) throw fail();
        auto ws = walk(start, adj[start][0].first);
        for (std::size_t k = 0; k < ws.size(); ++k) os << (k ? "," : "") << to_string(ws[k]);
        os << ']';
        return os.str();
    }
    std::vector<std::vector<RationalWeight>> arms;
    for (const auto& link : adj[hub]) arms.push_back(walk(hub, link.first));
    std::vector<std::size_t> general;
    for (std::size_t k = 0; k < 3; ++k)
        if (!all_three(arms[k])) general.push_back(k);
    if (general.empty()) {
        std::vector<std::size_t> len{arms[0].size(), arms[1].size(), arms[2].size()};
        std::sort(len.begin(), len.end());
        os << "3^{" << len[0] << ',' << len[1] << ',' << len[2] << "}]";
        return os.str();
    }
    if (general.size() != 1) throw fail();
    auto chain = arms[general[0]];
    std::reverse(chain.begin(), chain.end());
    std::vector<std::size_t> len;
    for (std::size_t k = 0; k < 3; ++k)
        if (k != general[0]) len.push_back(arms[k].size());
    std::sort(len.begin(), len.end());
    for (const auto& w : chain) os << to_string(w) << ',';
    os << "3^{" << len[0] << ',' << len[1] << "}]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Gram matrices

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, Real(0)) {}

    std::size_t size() const { return n_; }
    Real& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Real& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // Principal submatrix with row/column `skip` removed.
    Matrix without(std::size_t skip) const {
        Matrix m(n_ - 1);
        for (std::size_t i = 0, r = 0; i < n_; ++i) {
            if (i == skip) continue;
            for (std::size_t j = 0, c = 0; j < n_; ++j) {
                if (j == skip) continue;
                m(r, c++) = (*this)(i, j);
            }
            ++r;
        }
        return m;
    }

    Matrix permuted(const std::vector<std::size_t>& perm) const {
        Matrix m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(perm[i], perm[j]);
        return m;
    }

private:
    std::size_t n_ = 0;
    std::vector<Real> a_;
};

using GramMatrix = Matrix;

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline std::string to_string(const Inertia& in) {
    return "(" + std::to_string(in.positive) + "," + std::to_string(in.negative) + "," + std::to_string(in.zero) +
           ")";
}

inline Real gram_entry(const EdgeWeight& w) {
    if (const auto* r = std::get_if<RationalWeight>(&w)) return -elem::cos(const_pi() * r->p / r->q);
    const auto& d = std::get<Dashed>(w);
    if (!d.length) throw UnresolvedEdgeError("dashed edge with unknown length");
    return -elem::cosh(*d.length);
}

inline GramMatrix gram(const CoxeterDiagram& d) {
    GramMatrix g = Matrix::identity(d.node_count());
    for (const auto& e : d.edges()) {
        Real v;
        try {
            v = gram_entry(e.weight);
        } catch (const UnresolvedEdgeError&) {
            throw UnresolvedEdgeError("dashed edge " + std::to_string(e.i) + "-" + std::to_string(e.j) +
                                      " has unknown length");
        }
        g(e.i, e.j) = v;
        g(e.j, e.i) = v;
    }
    return g;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<Real> symmetric_eigenvalues(Matrix a) {
    const std::size_t n = a.size();
    const Real eps = epsilon();
    Real norm = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) norm += a(i, j) * a(i, j);
    for (int sweep = 0; sweep < 100; ++sweep) {
        Real off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off <= eps * eps * norm / 100) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q) == 0) continue;
                Real theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
                Real t = (theta >= 0 ? Real(1) : Real(-1)) / (elem::abs(theta) + elem::sqrt(theta * theta + 1));
                Real c = 1 / elem::sqrt(t * t + 1);
                Real s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    Real akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Real apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<Real> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline Real default_zero_tolerance() { return pow10(-(WorkingPrecision::digits() / 2)); }

inline Inertia inertia(const GramMatrix& g, const Real& tol) {
    Inertia in;
    for (const auto& lambda : symmetric_eigenvalues(g)) {
        if (elem::abs(lambda) < tol)
            ++in.zero;
        else if (lambda > 0)
            ++in.positive;
        else
            ++in.negative;
    }
    return in;
}

inline Inertia inertia(const GramMatrix& g) { return inertia(g, default_zero_tolerance()); }

// Determinant by Gaussian elimination with partial pivoting.
inline Real determinant(Matrix a) {
    const std::size_t n = a.size();
    Real det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (elem::abs(a(r, col)) > elem::abs(a(pivot, col))) pivot = r;
        if (a(pivot, col) == 0) return Real(0);
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(col, k), a(pivot, k));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            Real f = a(r, col) / a(col, col);
            if (f == 0) continue;
            for (std::size_t k = col; k < n; ++k) a(r, k) -= f * a(col, k);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// Dashed-edge solving

struct DashedSolution {
    Real length;
    Real cosh_length;
    Real det_residual;  // |det| of the Gram matrix at the solved length
    Inertia inertia;
};

// Solves the single unknown dashed edge (i, j) so that the n mirrors are
// realizable in H^(n-2): det(G) = 0 with inertia (n-2, 1, 1). det(G) is a
// quadratic polynomial in c = cosh l; it is recovered exactly from three
// evaluations and its root c > 1 with the right inertia is returned.
inline DashedSolution solve_dashed(const CoxeterDiagram& d, std::size_t i, std::size_t j) {
    const Edge* target = d.find(i, j);
    if (target == nullptr || !target->dashed()) {
        throw ValidationError("no dashed edge between nodes " + std::to_string(i) + " and " + std::to_string(j));
    }
    auto unknown = d.unknown_dashed();
    if (unknown.size() != 1 || unknown.front() != std::make_pair(std::min(i, j), std::max(i, j))) {
        throw UnresolvedEdgeError("solve_dashed needs exactly one dashed edge of unknown length, at " +
                                  std::to_string(i) + "-" + std::to_string(j));
    }
    const std::size_t n = d.node_count();
    CoxeterDiagram probe = d;
    // Fill the unknown entry with -c directly.
    auto gram_at = [&](const Real& c) {
        GramMatrix g = Matrix::identity(n);
        for (const auto& e : probe.edges()) {
            Real v = (e.i == target->i && e.j == target->j) ? Real(-c) : gram_entry(e.weight);
            g(e.i, e.j) = v;
            g(e.j, e.i) = v;
        }
        return g;
    };
    Real d0 = determinant(gram_at(Real(0)));
    Real dp = determinant(gram_at(Real(1)));
    Real dm = determinant(gram_at(Real(-1)));
    Real qa = (dp + dm) / 2 - d0;
    Real qb = (dp - dm) / 2;
    Real qc = d0;
    std::vector<Real> roots;
    const Real eps = epsilon();
    Real scale = elem::abs(qa) + elem::abs(qb) + elem::abs(qc);
    if (elem::abs(qa) <= 64 * eps * scale) {
        if (elem::abs(qb) > 64 * eps * scale) roots.push_back(-qc / qb);
    } else {
        Real disc = qb * qb - 4 * qa * qc;
        if (disc >= 0) {
            Real sq = elem::sqrt(disc);
            // Stable pair of roots.
            Real q = -(qb + (qb >= 0 ? sq : Real(-sq))) / 2;
            roots.push_back(q / qa);
            if (q != 0) roots.push_back(qc / q);
        }
    }
    const Inertia wanted{static_cast<int>(n) - 2, 1, 1};
    std::vector<DashedSolution> valid;
    std::vector<Real> candidates;
    for (const auto& c : roots) {
        if (!(c > 1)) continue;
        // Skip duplicate roots.
        bool seen = false;
        for (const auto& v : candidates)
            if (elem::abs(v - c) <= 64 * eps * c) seen = true;
        if (seen) continue;
        candidates.push_back(c);
        GramMatrix g = gram_at(c);
        Inertia in = inertia(g);
        if (in == wanted) valid.push_back({elem::acosh(c), c, elem::abs(determinant(g)), in});
    }
    if (valid.empty()) {
        throw NonRealizableError("dashed edge " + std::to_string(i) + "-" + std::to_string(j) +
                                 ": no root cosh(l) > 1 of the Gram determinant gives inertia " +
                                 to_string(wanted));
    }
    if (valid.size() > 1) {
        std::vector<Real> ls;
        std::string list;
        for (const auto& v : valid) {
            ls.push_back(v.length);
            list += (list.empty() ? "" : ", ") + to_decimal(v.length, 20);
        }
        throw AmbiguityError("dashed edge has two admissible lengths: " + list, ls);
    }
    return valid.front();
}

// The 7-mirror diagram of the prism P(alpha) = [5,3,3,3,w]: the chain plus the
// polar mirror of the ultra-ideal vertex opposite facet 5, orthogonal to
// facets 0..4 and dashed (unknown length) to facet `attach` (default 5).
inline CoxeterDiagram prism_diagram(const RationalWeight& last, std::size_t attach = 5) {
    CoxeterDiagram d(6);
    const RationalWeight chain[5] = {{5, 1}, {3, 1}, {3, 1}, {3, 1}, last};
    for (std::size_t k = 0; k < 5; ++k) d.add_edge(k, k + 1, chain[k]);
    std::size_t polar = d.add_node();
    d.add_edge(attach, polar, Dashed{});
    return d;
}

// P1 = double of P0 across its polar facet: [5,3,3,3,3^{1,1}] with the two
// fork mirrors 5 and 6 ultraparallel at distance 2 l0.
inline CoxeterDiagram double_prism_diagram(const Real& length) {
    CoxeterDiagram d = parse_symbol("[5,3,3,3,3^{1,1}]");
    d.add_edge(5, 6, Dashed{length});
    return d;
}

}  // namespace orbivol::coxeter
