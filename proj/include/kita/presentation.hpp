#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "algebra.hpp"

namespace kita {

struct Arrow {
    std::string label;
    std::size_t source = 0;
    std::size_t target = 0;
};

struct Quiver {
    std::size_t vertices = 0;
    std::vector<Arrow> arrows;

    void validate() const {
        for (const auto& a : arrows) {
            if (a.source >= vertices || a.target >= vertices)
                throw BadInput("arrow '" + a.label + "' has an endpoint out of range");
            if (a.label.empty()) throw BadInput("arrow with empty label");
        }
        for (std::size_t i = 0; i < arrows.size(); ++i)
            for (std::size_t j = i + 1; j < arrows.size(); ++j)
                if (arrows[i].label == arrows[j].label)
                    throw BadInput("duplicate arrow label '" + arrows[i].label + "'");
    }

    std::size_t arrow_index(const std::string& label) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].label == label) return i;
        throw BadInput("unknown arrow label '" + label + "'");
    }
};

/// One summand of a relation: coeff * (composable arrow sequence), paths
/// composing left to right.
struct RelationTerm {
    FieldSpec::value_type coeff = 1;
    std::vector<std::size_t> arrows;
};

using Relation = std::vector<RelationTerm>;

namespace detail {

/// All paths of length <= bound in a quiver, enumerated by length then
/// lexicographically by arrow sequence. Elimination order: paths are ranked
/// by (number of non-loop arrows, length, lexicographic arrow sequence), and
/// the echelon pivots on the largest rank, so coset representatives prefer
/// loop powers, then short paths. For loop-free quivers this is plain
/// shortest-then-lexicographic.
struct PathSpace {
    const Quiver* quiver;
    std::size_t bound;
    std::vector<int> source, target;   // per path id
    std::vector<int> length;
    std::vector<int> parent;           // id without its last arrow (-1 for trivial)
    std::vector<int> last_arrow;       // -1 for trivial
    std::vector<std::size_t> len_begin; // first id of each length stratum
    std::vector<std::vector<int>> ext_right; // [id][arrow] -> extended id, -1 not composable/absent
    std::vector<std::vector<int>> ext_left;  // [arrow][id] -> id of arrow*path
    std::vector<std::uint32_t> rank;   // elimination order; pivots take the largest

    PathSpace(const Quiver& q, std::size_t bound_, std::size_t max_paths = 2000000)
        : quiver(&q), bound(bound_) {
        const std::size_t na = q.arrows.size();
        for (std::size_t v = 0; v < q.vertices; ++v) {
            source.push_back(int(v));
            target.push_back(int(v));
            length.push_back(0);
            parent.push_back(-1);
            last_arrow.push_back(-1);
        }
        len_begin = {0, q.vertices};
        std::size_t stratum_start = 0, stratum_end = q.vertices;
        for (std::size_t len = 1; len <= bound; ++len) {
            for (std::size_t p = stratum_start; p < stratum_end; ++p)
                for (std::size_t a = 0; a < na; ++a)
                    if (q.arrows[a].source == std::size_t(target[p])) {
                        source.push_back(source[p]);
                        target.push_back(int(q.arrows[a].target));
                        length.push_back(int(len));
                        parent.push_back(int(p));
                        last_arrow.push_back(int(a));
                        if (source.size() > max_paths)
                            throw BoundTooSmall("path space exceeds " + std::to_string(max_paths) +
                                                " paths; relations do not bound path growth");
                    }
            stratum_start = stratum_end;
            stratum_end = source.size();
            len_begin.push_back(stratum_end);
        }
        // right extension table
        ext_right.assign(size(), std::vector<int>(na, -1));
        for (std::size_t id = quiver->vertices; id < size(); ++id)
            ext_right[parent[id]][last_arrow[id]] = int(id);
        // left extension by recursion on the parent; a*e_v composes iff the
        // arrow ends at v
        ext_left.assign(na, std::vector<int>(size(), -1));
        for (std::size_t a = 0; a < na; ++a) {
            ext_left[a][q.arrows[a].target] = ext_right[q.arrows[a].source][a];
            for (std::size_t id = quiver->vertices; id < size(); ++id) {
                if (std::size_t(source[id]) != q.arrows[a].target) continue;
                int ap = ext_left[a][parent[id]];
                ext_left[a][id] = (ap < 0) ? -1 : ext_right[ap][last_arrow[id]];
            }
        }
        // elimination rank: (non-loop arrow count, length, lex); ids are
        // already sorted by (length, lex), so a stable sort on the weight and
        // length keys suffices
        std::vector<std::uint32_t> weight(size(), 0);
        for (std::size_t id = q.vertices; id < size(); ++id) {
            const Arrow& a = q.arrows[last_arrow[id]];
            weight[id] = weight[parent[id]] + (a.source != a.target ? 1 : 0);
        }
        std::vector<std::uint32_t> order(size());
        for (std::size_t id = 0; id < size(); ++id) order[id] = std::uint32_t(id);
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
            if (weight[x] != weight[y]) return weight[x] < weight[y];
            return length[x] < length[y];
        });
        rank.resize(size());
        for (std::size_t pos = 0; pos < size(); ++pos) rank[order[pos]] = std::uint32_t(pos);
    }

    std::size_t size() const { return source.size(); }

    /// Id of the path starting at `from` along `arrows`; -1 if not composable
    /// or longer than the bound.
    int locate(std::size_t from, const std::vector<std::size_t>& arrows) const {
        int id = int(from);
        for (auto a : arrows) {
            if (quiver->arrows[a].source != std::size_t(target[id])) return -1;
            id = ext_right[id][a];
            if (id < 0) return -1;
        }
        return id;
    }

    std::vector<int> arrows_of(std::size_t id) const {
        std::vector<int> rev;
        for (int cur = int(id); last_arrow[cur] >= 0; cur = parent[cur]) rev.push_back(last_arrow[cur]);
        std::reverse(rev.begin(), rev.end());
        return rev;
    }

    std::string label_of(std::size_t id) const {
        if (length[id] == 0) return "e" + std::to_string(source[id]);
        std::string s;
        for (auto a : arrows_of(id)) {
            if (!s.empty()) s += '*';
            s += quiver->arrows[a].label;
        }
        return s;
    }
};

/// Sparse echelon over the path space with pivots on the largest path rank,
/// so the surviving (non-pivot) coset representatives are the smallest paths
/// in the elimination order.
struct PathEchelon {
    using Term = std::pair<int, FieldSpec::value_type>; // (path id, coeff), sorted descending by rank
    using Row = std::vector<Term>;

    const FieldSpec* f;
    const std::vector<std::uint32_t>* rank;
    std::vector<int> pivot_row;    // path id -> row index or -1
    std::vector<Row> rows;

    PathEchelon(const FieldSpec* f_, const std::vector<std::uint32_t>& rank_)
        : f(f_), rank(&rank_), pivot_row(rank_.size(), -1) {}

    bool term_before(const Term& a, const Term& b) const {
        return (*rank)[a.first] > (*rank)[b.first];
    }

    void sort_row(Row& r) const {
        std::sort(r.begin(), r.end(),
                  [this](const Term& a, const Term& b) { return term_before(a, b); });
    }

    void axpy(Row& dst, const Row& src, FieldSpec::value_type c) const {
        Row out;
        out.reserve(dst.size() + src.size());
        std::size_t i = 0, j = 0;
        while (i < dst.size() || j < src.size()) {
            if (j == src.size() || (i < dst.size() && term_before(dst[i], src[j]))) {
                out.push_back(dst[i++]);
            } else if (i == dst.size() || term_before(src[j], dst[i])) {
                auto v = f->mul(c, src[j].second);
                if (v) out.push_back({src[j].first, v});
                ++j;
            } else {
                auto v = f->add(dst[i].second, f->mul(c, src[j].second));
                if (v) out.push_back({dst[i].first, v});
                ++i;
                ++j;
            }
        }
        dst = std::move(out);
    }

    /// Fully reduce: eliminate every term whose id is a pivot. Elimination only
    /// introduces ids below the eliminated one, so a single front-to-back pass
    /// terminates.
    Row reduce(Row r) const {
        Row done;
        while (!r.empty()) {
            int pr = pivot_row[r.front().first];
            if (pr < 0) {
                done.push_back(r.front());
                r.erase(r.begin());
                continue;
            }
            axpy(r, rows[pr], f->neg(r.front().second));
        }
        return done;
    }

    /// Returns the new pivot's row index, or -1 if the row reduced to zero.
    int insert(Row r) {
        r = reduce(std::move(r));
        if (r.empty()) return -1;
        auto inv = f->inv(r.front().second);
        if (inv != 1)
            for (auto& t : r) t.second = f->mul(t.second, inv);
        pivot_row[r.front().first] = int(rows.size());
        rows.push_back(std::move(r));
        return int(rows.size()) - 1;
    }
};

void arrange_socle_basis(Algebra& A);

} // namespace detail

/// Admissible-quotient path algebra KQ/I truncated at the verified length
/// bound. The span of all truncations of u*r*v is computed inside the path
/// space of length <= L+1 by closing the relation rows under arrow
/// multiplication on both sides; afterwards every path of length exactly L+1
/// must reduce to zero, otherwise the bound is insufficient.
inline Algebra quotient_algebra(const Quiver& quiver, const std::vector<Relation>& relations,
                                const FieldSpec* f, std::size_t length_bound,
                                const std::string& name = "", bool auto_escalate = false) {
    quiver.validate();
    if (length_bound < 1) throw BadInput("length bound must be >= 1");

    // validate relations: parallel composable paths, admissible (length >= 2)
    for (const auto& rel : relations) {
        if (rel.empty()) throw BadInput("empty relation");
        int rsrc = -1, rtgt = -1;
        for (const auto& term : rel) {
            if (term.arrows.size() < 2)
                throw NonAdmissible("relation has a term of length < 2");
            int src = int(quiver.arrows[term.arrows.front()].source);
            int cur = src;
            for (auto a : term.arrows) {
                if (a >= quiver.arrows.size()) throw BadInput("relation refers to a missing arrow");
                if (int(quiver.arrows[a].source) != cur)
                    throw BadInput("relation term is not composable");
                cur = int(quiver.arrows[a].target);
            }
            if (rsrc == -1) {
                rsrc = src;
                rtgt = cur;
            } else if (rsrc != src || rtgt != cur) {
                throw BadInput("relation terms are not parallel");
            }
        }
    }

    const std::size_t escalation_cap = 64;
    for (std::size_t L = length_bound;; L += 2) {
        const std::size_t M = L + 1;
        detail::PathSpace ps(quiver, M);

        detail::PathEchelon ech(f, ps.rank);

        // embed relations; a term longer than M means the bound is certainly too small
        bool embeddable = true;
        std::vector<detail::PathEchelon::Row> seeds;
        for (const auto& rel : relations) {
            detail::PathEchelon::Row row;
            for (const auto& term : rel) {
                if (term.arrows.size() > M) {
                    embeddable = false;
                    break;
                }
                int id = ps.locate(quiver.arrows[term.arrows.front()].source, term.arrows);
                if (id < 0) throw BadInput("relation term is not a path of the quiver");
                row.push_back({id, term.coeff});
            }
            if (!embeddable) break;
            ech.sort_row(row);
            // merge duplicate paths
            detail::PathEchelon::Row merged;
            for (const auto& t : row) {
                if (!merged.empty() && merged.back().first == t.first)
                    merged.back().second = f->add(merged.back().second, t.second);
                else
                    merged.push_back(t);
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](auto& t) { return t.second == 0; }),
                         merged.end());
            if (!merged.empty()) seeds.push_back(std::move(merged));
        }

        bool verified = embeddable;
        if (embeddable) {
            // closure of the relation span under arrow multiplication, truncating
            // components beyond the bound
            std::deque<int> work;
            for (auto& s : seeds) {
                int r = ech.insert(std::move(s));
                if (r >= 0) work.push_back(r);
            }
            const std::size_t na = quiver.arrows.size();
            while (!work.empty()) {
                int ri = work.front();
                work.pop_front();
                detail::PathEchelon::Row row = ech.rows[ri]; // copy: container may reallocate
                for (std::size_t a = 0; a < na; ++a) {
                    detail::PathEchelon::Row left, right;
                    for (const auto& [id, c] : row) {
                        int lid = ps.ext_left[a][id];
                        if (lid >= 0) left.push_back({lid, c});
                        int rid = ps.ext_right[id][a];
                        if (rid >= 0) right.push_back({rid, c});
                    }
                    ech.sort_row(left);
                    ech.sort_row(right);
                    int nl = ech.insert(std::move(left));
                    if (nl >= 0) work.push_back(nl);
                    int nr = ech.insert(std::move(right));
                    if (nr >= 0) work.push_back(nr);
                }
            }
            // bound verification: every path of length exactly L+1 reduces to zero
            for (std::size_t id = ps.len_begin[M]; id < ps.len_begin[M + 1]; ++id) {
                if (!ech.reduce({{int(id), 1}}).empty()) {
                    verified = false;
                    if (!auto_escalate)
                        throw BoundTooSmall("path '" + ps.label_of(id) +
                                            "' of length " + std::to_string(M) +
                                            " does not reduce to zero; increase the length bound");
                    break;
                }
            }
        }
        if (!verified) {
            if (!auto_escalate || L + 2 > escalation_cap)
                throw BoundTooSmall("length bound escalation exhausted at L=" + std::to_string(L));
            continue;
        }

        // quotient basis: non-pivot paths (all of length <= L after verification),
        // listed in the canonical elimination order
        std::vector<int> basis_ids;
        for (std::size_t id = 0; id < ps.size(); ++id)
            if (ech.pivot_row[id] < 0 && std::size_t(ps.length[id]) <= L) basis_ids.push_back(int(id));
        std::sort(basis_ids.begin(), basis_ids.end(),
                  [&](int x, int y) { return ps.rank[x] < ps.rank[y]; });
        std::vector<int> pos_of_id(ps.size(), -1);
        for (std::size_t b = 0; b < basis_ids.size(); ++b) pos_of_id[basis_ids[b]] = int(b);
        const std::size_t d = basis_ids.size();

        // structure constants by stepwise arrow multiplication with reduction
        Algebra::ProductTable table(d, std::vector<std::vector<Algebra::Entry>>(d));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                if (ps.target[basis_ids[i]] != ps.source[basis_ids[j]]) continue;
                detail::PathEchelon::Row cur{{basis_ids[i], 1}};
                for (auto a : ps.arrows_of(basis_ids[j])) {
                    detail::PathEchelon::Row next;
                    for (const auto& [id, c] : cur) {
                        int nid = ps.ext_right[id][std::size_t(a)];
                        if (nid >= 0) next.push_back({nid, c});
                    }
                    ech.sort_row(next);
                    cur = ech.reduce(std::move(next));
                    if (cur.empty()) break;
                }
                for (const auto& [id, c] : cur)
                    table[i][j].push_back({std::uint32_t(pos_of_id[id]), c});
                std::sort(table[i][j].begin(), table[i][j].end(),
                          [](auto& x, auto& y) { return x.first < y.first; });
            }
        }

        std::vector<std::string> labels;
        AlgebraMetadata meta;
        meta.kind = AlgebraMetadata::Kind::quiver;
        meta.name = name;
        meta.arrow_ideal_radical = true;
        meta.split_basic = true;
        Vec unit(d, 0);
        for (std::size_t b = 0; b < d; ++b) {
            labels.push_back(ps.label_of(basis_ids[b]));
            PathInfo pi;
            pi.source = ps.source[basis_ids[b]];
            pi.target = ps.target[basis_ids[b]];
            for (auto a : ps.arrows_of(basis_ids[b])) pi.arrows.push_back(a);
            meta.paths.push_back(std::move(pi));
            if (ps.length[basis_ids[b]] == 0) {
                meta.vertex_idempotents.push_back(b);
                unit[b] = 1;
            }
        }

        Algebra A(f, std::move(labels), std::move(table), std::move(unit), std::move(meta), true);
        detail::arrange_socle_basis(A);
        return A;
    }
}

namespace detail {

/// Ensure the stored basis contains a basis of the socle, performing a
/// block-homogeneous change of basis if the canonical path basis misses one.
/// Vertex idempotents are never replaced; a socle line that cannot be realised
/// inside the positive-length coordinates of its block is an error.
inline void arrange_socle_basis(Algebra& A) {
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    Subspace soc = socle(A);

    std::vector<std::size_t> socle_indices;
    for (std::size_t i = 0; i < d; ++i)
        if (soc.contains(vec_unit(d, i))) socle_indices.push_back(i);
    if (socle_indices.size() == soc.dim()) {
        A.meta().socle_basis = socle_indices;
        return;
    }

    // group coordinates by (source, target)
    std::map<std::pair<int, int>, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < d; ++i) {
        const auto& pi = A.meta().paths[i];
        blocks[{pi.source, pi.target}].push_back(i);
    }
    // project socle rows into each block; gradedness makes these span the socle
    std::map<std::pair<int, int>, std::vector<Vec>> soc_blocks;
    for (std::size_t r = 0; r < soc.dim(); ++r) {
        const Vec row = soc.basis().row(r);
        for (const auto& [key, idx] : blocks) {
            Vec proj(d, 0);
            bool nonzero = false;
            for (auto i : idx)
                if (row[i]) {
                    proj[i] = row[i];
                    nonzero = true;
                }
            if (nonzero) soc_blocks[key].push_back(std::move(proj));
        }
    }
    std::size_t total = 0;
    std::vector<Vec> new_rows;       // replacement rows
    std::vector<std::size_t> slots;  // coordinate replaced by each row
    for (auto& [key, rows] : soc_blocks) {
        Subspace sb = Subspace::from_vectors(f, rows, d);
        if (!soc.contains(sb))
            throw SoclePathFailure("socle is not graded by path endpoints");
        total += sb.dim();
        std::vector<Vec> missing;
        std::vector<Vec> have;
        for (auto i : blocks[key])
            if (sb.contains(vec_unit(d, i))) have.push_back(vec_unit(d, i));
        Subspace have_s = Subspace::from_vectors(f, have, d);
        for (std::size_t r = 0; r < sb.dim(); ++r) {
            Vec residual = have_s.reduce(sb.basis().row(r));
            if (!vec_is_zero(residual)) {
                // re-reduce against rows already scheduled, keeping independence
                Subspace sched = Subspace::from_vectors(f, missing, d);
                residual = sched.reduce(residual);
                if (!vec_is_zero(residual)) missing.push_back(residual);
            }
        }
        for (auto& m : missing) {
            // leading coordinate of the row becomes the replaced slot
            std::size_t slot = SIZE_MAX;
            for (std::size_t i = 0; i < d; ++i)
                if (m[i]) { slot = i; break; }
            if (A.meta().paths[slot].length() == 0)
                throw SoclePathFailure("socle line touches a vertex idempotent coordinate");
            for (auto s : slots)
                if (s == slot) throw SoclePathFailure("socle rearrangement needs a coordinate twice");
            auto inv = f->inv(m[slot]);
            if (inv != 1)
                for (auto& x : m) x = f->mul(x, inv);
            new_rows.push_back(m);
            slots.push_back(slot);
        }
    }
    if (total != soc.dim()) throw SoclePathFailure("socle is not graded by path endpoints");

    // change of basis: coordinate slots in `slots` are replaced by the socle rows
    auto to_new_coords = [&](Vec x) {
        // y_slot = x[slot]; y_i = x[i] - sum_slots x[slot] * row[i] elsewhere
        Vec y = std::move(x);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            auto c = y[slots[s]];
            if (!c) continue;
            for (std::size_t i = 0; i < d; ++i) {
                if (i == slots[s] || !new_rows[s][i]) continue;
                y[i] = f->sub(y[i], f->mul(c, new_rows[s][i]));
            }
        }
        return y;
    };
    auto new_basis_element = [&](std::size_t i) -> Vec {
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (slots[s] == i) return new_rows[s];
        return vec_unit(d, i);
    };

    Algebra::ProductTable table(d, std::vector<std::vector<Algebra::Entry>>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec prod = to_new_coords(A.multiply(new_basis_element(i), new_basis_element(j)));
            for (std::size_t k = 0; k < d; ++k)
                if (prod[k]) table[i][j].push_back({std::uint32_t(k), prod[k]});
        }
    std::vector<std::string> labels = A.labels();
    AlgebraMetadata meta = A.meta();
    for (std::size_t s = 0; s < slots.size(); ++s) {
        std::string lbl;
        for (std::size_t i = 0; i < d; ++i) {
            if (!new_rows[s][i]) continue;
            if (!lbl.empty()) lbl += "+";
            if (new_rows[s][i] != 1) lbl += f->to_string(new_rows[s][i]) + "*";
            lbl += A.labels()[i];
        }
        labels[slots[s]] = lbl;
    }
    Vec unit = to_new_coords(A.unit());
    Algebra B(f, std::move(labels), std::move(table), std::move(unit), std::move(meta), true);
    B.meta().socle_basis.clear();
    Subspace soc2 = socle(B);
    for (std::size_t i = 0; i < d; ++i)
        if (soc2.contains(vec_unit(d, i))) B.meta().socle_basis.push_back(i);
    if (B.meta().socle_basis.size() != soc2.dim())
        throw SoclePathFailure("socle rearrangement failed to produce a socle basis");
    A = std::move(B);
}

} // namespace detail

/// Multiplication table of a finite group; the identity sits at index 0,
/// associativity and the Latin-square property are verified exhaustively.
struct CayleyTable {
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> table;

    void validate() const {
        if (table.size() != order) throw BadCayleyTable("table size does not match the order");
        for (const auto& row : table)
            if (row.size() != order) throw BadCayleyTable("table is not square");
        for (std::size_t i = 0; i < order; ++i) {
            if (table[0][i] != i || table[i][0] != i)
                throw BadCayleyTable("index 0 is not an identity");
            std::vector<bool> seen_row(order, false), seen_col(order, false);
            for (std::size_t j = 0; j < order; ++j) {
                if (table[i][j] >= order || table[j][i] >= order)
                    throw BadCayleyTable("entry out of range");
                if (seen_row[table[i][j]] || seen_col[table[j][i]])
                    throw BadCayleyTable("table is not a Latin square");
                seen_row[table[i][j]] = true;
                seen_col[table[j][i]] = true;
            }
        }
        for (std::size_t a = 0; a < order; ++a)
            for (std::size_t b = 0; b < order; ++b)
                for (std::size_t c = 0; c < order; ++c)
                    if (table[table[a][b]][c] != table[a][table[b][c]])
                        throw BadCayleyTable("multiplication is not associative");
    }

    std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }

    std::size_t power(std::size_t g, std::uint64_t n) const {
        std::size_t acc = 0, base = g;
        while (n) {
            if (n & 1) acc = mul(acc, base);
            base = mul(base, base);
            n >>= 1;
        }
        return acc;
    }

    std::size_t inverse(std::size_t g) const {
        for (std::size_t h = 0; h < order; ++h)
            if (mul(g, h) == 0) return h;
        throw BadCayleyTable("element without inverse");
    }

    std::size_t element_order(std::size_t g) const {
        std::size_t n = 1, cur = g;
        while (cur != 0) {
            cur = mul(cur, g);
            ++n;
        }
        return n;
    }

    /// Conjugacy class ids, classes numbered by their smallest member.
    std::vector<std::size_t> conjugacy_classes() const {
        std::vector<std::size_t> cls(order, SIZE_MAX);
        for (std::size_t g = 0; g < order; ++g) {
            if (cls[g] != SIZE_MAX) continue;
            for (std::size_t x = 0; x < order; ++x)
                cls[mul(mul(x, g), inverse(x))] = g;
        }
        return cls;
    }

    static CayleyTable cyclic(std::size_t n) {
        CayleyTable ct;
        ct.order = n;
        ct.table.assign(n, std::vector<std::size_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ct.table[i][j] = (i + j) % n;
        ct.validate();
        return ct;
    }

    /// Symmetric group on m letters; elements are the permutations in
    /// lexicographic order, so the identity has index 0.
    static CayleyTable symmetric(unsigned m) {
        std::vector<std::vector<std::size_t>> perms;
        std::vector<std::size_t> p(m);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        CayleyTable ct;
        ct.order = perms.size();
        ct.table.assign(ct.order, std::vector<std::size_t>(ct.order));
        auto index_of = [&](const std::vector<std::size_t>& q) {
            return std::size_t(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
        };
        for (std::size_t a = 0; a < ct.order; ++a)
            for (std::size_t b = 0; b < ct.order; ++b) {
                std::vector<std::size_t> q(m);
                for (unsigned x = 0; x < m; ++x) q[x] = perms[a][perms[b][x]];
                ct.table[a][b] = index_of(q);
            }
        ct.validate();
        return ct;
    }
};

/// Group algebra KG with the group elements as basis.
inline Algebra group_algebra(const CayleyTable& g, const FieldSpec* f, const std::string& name = "") {
    g.validate();
    const std::size_t n = g.order;
    Algebra::ProductTable table(n, std::vector<std::vector<Algebra::Entry>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = {{std::uint32_t(g.mul(i, j)), 1}};
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    AlgebraMetadata meta;
    meta.kind = AlgebraMetadata::Kind::group;
    meta.name = name.empty() ? "KG(order " + std::to_string(n) + ")" : name;
    return Algebra(f, std::move(labels), std::move(table), vec_unit(n, 0), std::move(meta), true);
}

/// g = g_p * g_{p'} with g_p of p-power order and g_{p'} of order prime to p;
/// both are powers of g.
inline std::pair<std::size_t, std::size_t> p_primary_decompose(const CayleyTable& g, std::size_t elem,
                                                               std::uint64_t p) {
    std::size_t n = g.element_order(elem);
    std::uint64_t pa = 1;
    while (n % p == 0) {
        n /= p;
        pa *= p;
    }
    const std::uint64_t m = n; // order = pa * m, gcd(pa, m) = 1
    auto inv_mod = [](std::uint64_t a, std::uint64_t mod) -> std::uint64_t {
        if (mod == 1) return 0;
        a %= mod;
        for (std::uint64_t x = 1; x < mod; ++x)
            if ((a * x) % mod == 1) return x;
        throw BadInput("no modular inverse");
    };
    std::size_t gp = g.power(elem, m * inv_mod(m, pa));
    std::size_t gpp = g.power(elem, pa * inv_mod(pa, m));
    return {gp, gpp};
}

/// Number of conjugacy classes of elements of order prime to p.
inline std::size_t p_regular_class_count(const CayleyTable& g, std::uint64_t p) {
    auto cls = g.conjugacy_classes();
    std::vector<bool> counted(g.order, false);
    std::size_t count = 0;
    for (std::size_t e = 0; e < g.order; ++e) {
        if (counted[cls[e]]) continue;
        counted[cls[e]] = true;
        if (g.element_order(e) % p != 0) ++count;
    }
    return count;
}

/// Span of the p'-section sums C_h = sum of {g : g_{p'} conjugate to h_{p'}},
/// inside the group algebra's coordinate space.
inline Subspace reynolds_class_sums(const CayleyTable& g, const FieldSpec* f) {
    const std::uint64_t p = f->p();
    auto cls = g.conjugacy_classes();
    std::vector<std::size_t> section(g.order); // conjugacy class of the p'-part
    for (std::size_t e = 0; e < g.order; ++e)
        section[e] = cls[p_primary_decompose(g, e, p).second];
    std::vector<Vec> sums;
    std::vector<bool> seen(g.order, false);
    for (std::size_t e = 0; e < g.order; ++e) {
        if (seen[section[e]]) continue;
        seen[section[e]] = true;
        Vec v(g.order, 0);
        for (std::size_t x = 0; x < g.order; ++x)
            if (section[x] == section[e]) v[x] = f->add(v[x], 1);
        sums.push_back(std::move(v));
    }
    return Subspace::from_vectors(f, sums, g.order);
}

/// Trivial extension Hom_K(A,K) x A with multiplication
/// (f,a)(g,b) = (a.g + f.b, ab) and its canonical symmetric form
/// <(f,a),(g,b)> = g(a) + f(b). Basis: dual basis first, then the basis of A.
inline std::pair<Algebra, Mat> trivial_extension(const Algebra& A) {
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    const std::size_t D = 2 * d;
    Algebra::ProductTable table(D, std::vector<std::vector<Algebra::Entry>>(D));
    // regular x regular
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& e : A.basis_product(i, j))
                table[d + i][d + j].push_back({std::uint32_t(d + e.first), e.second});
    // dual_i * reg_j = sum_k (coeff of b_i in b_j b_k) dual_k ;  (f b)(x) = f(bx)
    // reg_j * dual_i = sum_k (coeff of b_i in b_k b_j) dual_k ;  (b f)(x) = f(xb)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                for (const auto& e : A.basis_product(j, k))
                    if (e.first == i) table[i][d + j].push_back({std::uint32_t(k), e.second});
                for (const auto& e : A.basis_product(k, j))
                    if (e.first == i) table[d + j][i].push_back({std::uint32_t(k), e.second});
            }
    for (auto& row : table)
        for (auto& cell : row)
            std::sort(cell.begin(), cell.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back(A.labels()[i] + "^");
    for (std::size_t i = 0; i < d; ++i) labels.push_back(A.labels()[i]);
    Vec unit(D, 0);
    for (std::size_t i = 0; i < d; ++i) unit[d + i] = A.unit()[i];
    AlgebraMetadata meta;
    meta.kind = AlgebraMetadata::Kind::trivial_extension;
    meta.name = "T(" + (A.meta().name.empty() ? "A" : A.meta().name) + ")";
    Algebra T(f, std::move(labels), std::move(table), std::move(unit), std::move(meta), true);
    Mat gram(f, D, D);
    for (std::size_t i = 0; i < d; ++i) {
        gram.at(i, d + i) = 1;
        gram.at(d + i, i) = 1;
    }
    return {std::move(T), std::move(gram)};
}

} // namespace kita
