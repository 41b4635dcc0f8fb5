#pragma once

#include <climits>
#include <functional>

#include "liaison/linalg.hpp"

namespace liaison {

/// Components at or above this index form the auxiliary block used by the
/// tracked (extended) Buchberger runs; every term of the primary block
/// compares greater than every auxiliary term.
inline constexpr int kAuxBase = 1 << 20;

/// Graded free module ⊕_c R(-shifts[c]), with an optional auxiliary block
/// whose components are indexed from kAuxBase.
struct FreeModule {
    std::vector<int> shifts;
    std::vector<int> aux_shifts;
    int rank() const { return static_cast<int>(shifts.size()); }
    int shift_of(int comp) const {
        return comp < kAuxBase ? shifts.at(comp) : aux_shifts.at(comp - kAuxBase);
    }
};

struct ModTerm {
    int comp;
    Monomial mono;
    Fp coeff;
};

/// Element of a free module. Terms are sorted descending in the block order:
/// primary block before auxiliary block, then the ring's monomial order,
/// then component index ascending (term-over-position within a block).
class ModVec {
public:
    ModVec() = default;
    explicit ModVec(RingPtr ring) : ring_(std::move(ring)) {}
    ModVec(RingPtr ring, std::vector<ModTerm> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        normalize();
    }

    /// Builds from a matrix column (entry per component).
    static ModVec from_column(const std::vector<Polynomial>& col, const RingPtr& ring) {
        std::vector<ModTerm> ts;
        for (int c = 0; c < static_cast<int>(col.size()); ++c)
            for (const auto& t : col[c].terms()) ts.push_back({c, t.mono, t.coeff});
        return ModVec(ring, std::move(ts));
    }

    std::vector<Polynomial> to_column(int rank) const {
        std::vector<std::vector<Term>> rows(rank);
        for (const auto& t : terms_) rows[t.comp].push_back({t.mono, t.coeff});
        std::vector<Polynomial> col;
        col.reserve(rank);
        for (auto& r : rows) col.emplace_back(ring_, std::move(r));
        return col;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<ModTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const ModTerm& lead() const {
        if (terms_.empty()) throw internal_error("lead of zero module element");
        return terms_.front();
    }

    /// All terms in a single component (behaves like a ring element there).
    bool single_component() const {
        if (terms_.empty()) return true;
        int c = terms_.front().comp;
        for (const auto& t : terms_)
            if (t.comp != c) return false;
        return true;
    }

    /// Degree with respect to component shifts; requires homogeneity.
    int degree(const FreeModule& f) const {
        if (terms_.empty()) return -1;
        return terms_.front().mono.degree() + f.shift_of(terms_.front().comp);
    }
    bool is_homogeneous(const FreeModule& f) const {
        if (terms_.empty()) return true;
        int d = degree(f);
        for (const auto& t : terms_)
            if (t.mono.degree() + f.shift_of(t.comp) != d) return false;
        return true;
    }

    int compare_terms(const ModTerm& a, const ModTerm& b) const {
        bool aux_a = a.comp >= kAuxBase, aux_b = b.comp >= kAuxBase;
        if (aux_a != aux_b) return aux_a ? -1 : 1;
        int c = ring_->order().compare(a.mono, b.mono);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }

    friend ModVec operator+(const ModVec& a, const ModVec& b) {
        ModVec r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = a.compare_terms(a.terms_[i], b.terms_[j]);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Fp s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back({a.terms_[i].comp, a.terms_[i].mono, s});
                ++i; ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    ModVec times_term(Fp c, const Monomial& m) const {
        ModVec r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.comp, t.mono * m, t.coeff * c});
        return r;
    }

    ModVec negate() const {
        ModVec r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.comp, t.mono, -t.coeff});
        return r;
    }

    ModVec monic() const {
        if (is_zero()) return *this;
        return times_term(lead().coeff.inverse(), Monomial(ring_->nvars()));
    }

    friend bool operator==(const ModVec& a, const ModVec& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].comp != b.terms_[i].comp || a.terms_[i].mono != b.terms_[i].mono ||
                a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        }
        return true;
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [this](const ModTerm& a, const ModTerm& b) {
            return compare_terms(a, b) > 0;
        });
        std::vector<ModTerm> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
                if (out.back().coeff.is_zero()) out.pop_back();
            } else if (!t.coeff.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    RingPtr ring_;
    std::vector<ModTerm> terms_;
};

struct ModNormalForm {
    ModVec remainder;
    std::vector<Polynomial> quotients;  // input = remainder + sum quotients[k] * basis[k]
};

/// Division by the basis, first matching element in list order. Full mode
/// reduces every term; head mode stops at the first irreducible lead (enough
/// for Buchberger, much cheaper on dense inputs). Reductions only rewrite the
/// suffix from the current term on, since subtracted multiples are strictly
/// smaller in the module order.
inline ModNormalForm mod_normal_form(ModVec f, const std::vector<ModVec>& basis,
                                     bool want_certificate, bool head_only = false) {
    const RingPtr& ring = f.ring();
    ModNormalForm res;
    if (want_certificate) res.quotients.assign(basis.size(), Polynomial::zero(ring));
    std::vector<ModTerm> work(f.terms().begin(), f.terms().end());
    std::size_t pos = 0;
    std::vector<ModTerm> scratch;
    while (pos < work.size()) {
        const ModTerm t = work[pos];
        const ModVec* hit = nullptr;
        std::size_t hit_index = 0;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            const ModTerm& lt = basis[k].lead();
            if (lt.comp == t.comp && lt.mono.divides(t.mono)) {
                hit = &basis[k];
                hit_index = k;
                break;
            }
        }
        if (!hit) {
            if (head_only) break;
            ++pos;
            continue;
        }
        Fp c = t.coeff / hit->lead().coeff;
        Monomial m = t.mono.quotient(hit->lead().mono);
        if (want_certificate)
            res.quotients[hit_index] =
                res.quotients[hit_index] + Polynomial::monomial(ring, m, c);
        // merge work[pos..] with -c * m * hit; the lead terms cancel
        const auto& ht = hit->terms();
        scratch.clear();
        scratch.reserve(work.size() - pos + ht.size());
        std::size_t i = pos, j = 0;
        while (i < work.size() && j < ht.size()) {
            ModTerm other{ht[j].comp, ht[j].mono * m, -(ht[j].coeff * c)};
            int cmp = f.compare_terms(work[i], other);
            if (cmp > 0) {
                scratch.push_back(work[i++]);
            } else if (cmp < 0) {
                scratch.push_back(std::move(other));
                ++j;
            } else {
                Fp s = work[i].coeff + other.coeff;
                if (!s.is_zero()) scratch.push_back({other.comp, other.mono, s});
                ++i;
                ++j;
            }
        }
        for (; i < work.size(); ++i) scratch.push_back(work[i]);
        for (; j < ht.size(); ++j)
            scratch.push_back({ht[j].comp, ht[j].mono * m, -(ht[j].coeff * c)});
        work.resize(pos);
        work.insert(work.end(), scratch.begin(), scratch.end());
    }
    res.remainder = ModVec(ring, std::move(work));
    return res;
}

/// Buchberger with the coprimality criterion (applied only to
/// single-component elements, where it is valid) and homogeneous
/// degree-ascending pair selection. Returns the reduced Groebner basis,
/// sorted ascending by lead term.
///
/// Elements whose lead component is >= pair_comp_limit never form S-pairs
/// and are returned verbatim after the limit block. With a block order this
/// turns the run into the extended Buchberger algorithm: the first block
/// still gets its full reduced GB, while the tail block accumulates exactly
/// the lifted S-pair relations (a generating set, not a GB).
inline std::vector<ModVec> module_groebner(std::vector<ModVec> gens, const FreeModule& f,
                                           int pair_comp_limit = INT_MAX,
                                           int max_pair_degree = INT_MAX) {
    if (gens.empty()) return gens;
    const RingPtr ring = gens.front().ring();
    std::vector<ModVec> g;
    for (auto& v : gens) {
        if (v.is_zero()) continue;
        if (!v.is_homogeneous(f)) throw input_error("inhomogeneous module generator");
        g.push_back(v.monic());
    }

    struct Pair {
        int deg;
        std::size_t i, j;
        bool operator>(const Pair& o) const {
            if (deg != o.deg) return deg > o.deg;
            if (i != o.i) return i > o.i;
            return j > o.j;
        }
    };
    auto pair_of = [&](std::size_t i, std::size_t j) -> std::optional<Pair> {
        const ModTerm& a = g[i].lead();
        const ModTerm& b = g[j].lead();
        if (a.comp != b.comp || a.comp >= pair_comp_limit) return std::nullopt;
        if (g[i].single_component() && g[j].single_component() && coprime(a.mono, b.mono))
            return std::nullopt;
        int deg = lcm(a.mono, b.mono).degree() + f.shift_of(a.comp);
        if (deg > max_pair_degree) return std::nullopt;
        return Pair{deg, i, j};
    };

    std::vector<Pair> queue;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (auto p = pair_of(i, j)) queue.push_back(*p);
        std::make_heap(queue.begin(), queue.end(), std::greater<>());
    };
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (auto p = pair_of(i, j)) queue.push_back(*p);
    std::make_heap(queue.begin(), queue.end(), std::greater<>());

    while (!queue.empty()) {
        std::pop_heap(queue.begin(), queue.end(), std::greater<>());
        Pair pr = queue.back();
        queue.pop_back();
        const ModTerm& a = g[pr.i].lead();
        const ModTerm& b = g[pr.j].lead();
        Monomial L = lcm(a.mono, b.mono);
        ModVec s = g[pr.i].times_term(ring->one(), L.quotient(a.mono)) +
                   g[pr.j].times_term(-ring->one(), L.quotient(b.mono));
        ModVec r = mod_normal_form(std::move(s), g, false, /*head_only=*/true).remainder;
        if (!r.is_zero()) {
            g.push_back(r.monic());
            push_pairs_for(g.size() - 1);
        }
    }

    // elements past the pair limit are relations, not GB members: keep as-is
    std::vector<ModVec> head, tail;
    for (auto& v : g)
        (v.lead().comp < pair_comp_limit ? head : tail).push_back(std::move(v));

    // minimalize: drop head elements whose lead term is divisible by another
    std::vector<ModVec> minimal;
    for (std::size_t i = 0; i < head.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < head.size(); ++j) {
            if (i == j) continue;
            const ModTerm& li = head[i].lead();
            const ModTerm& lj = head[j].lead();
            if (lj.comp == li.comp && lj.mono.divides(li.mono) &&
                (lj.mono != li.mono || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(head[i]);
    }

    // tail-reduce each head element against the others
    std::vector<ModVec> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<ModVec> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = mod_normal_form(reduced[i], others, false).remainder.monic();
        if (reduced[i].is_zero()) throw internal_error("reduced GB element vanished");
    }

    std::sort(reduced.begin(), reduced.end(), [](const ModVec& x, const ModVec& y) {
        return x.compare_terms(y.lead(), x.lead()) > 0;  // ascending by lead
    });
    reduced.insert(reduced.end(), tail.begin(), tail.end());
    return reduced;
}

/// Groebner data of a submodule together with representations of every basis
/// element over the original generators, and generators of the syzygy module.
/// Computed in one pass over the graph module F ⊕ R^s.
struct TrackedGroebner {
    std::vector<ModVec> basis;                     // GB of the submodule of F
    std::vector<std::vector<Polynomial>> reps;     // basis[k] = Σ reps[k][j]·gens[j]
    std::vector<std::vector<Polynomial>> syzygies; // each: vector over gens with Σ syz[j]·gens[j] = 0
};

inline TrackedGroebner tracked_groebner(const std::vector<ModVec>& gens, const FreeModule& f,
                                        int max_pair_degree = INT_MAX) {
    if (gens.empty()) return {};
    const RingPtr ring = gens.front().ring();
    int s = static_cast<int>(gens.size());
    FreeModule big;
    big.shifts = f.shifts;
    for (const auto& v : gens) big.aux_shifts.push_back(v.is_zero() ? 0 : v.degree(f));

    std::vector<ModVec> w;
    for (int j = 0; j < s; ++j) {
        if (gens[j].is_zero()) continue;
        std::vector<ModTerm> ts = gens[j].terms();
        ts.push_back({kAuxBase + j, Monomial(ring->nvars()), ring->one()});
        w.emplace_back(ring, std::move(ts));
    }
    std::vector<ModVec> gb =
        module_groebner(std::move(w), big, /*pair_comp_limit=*/kAuxBase, max_pair_degree);

    TrackedGroebner out;
    for (const auto& v : gb) {
        std::vector<ModTerm> head, tail;
        for (const auto& t : v.terms())
            (t.comp < kAuxBase ? head : tail).push_back(t);
        for (auto& t : tail) t.comp -= kAuxBase;
        ModVec h(ring, std::move(head));
        ModVec a(ring, std::move(tail));
        auto rep = a.to_column(s);
        if (h.is_zero()) {
            out.syzygies.push_back(std::move(rep));
        } else {
            out.basis.push_back(std::move(h));
            out.reps.push_back(std::move(rep));
        }
    }
    return out;
}

} // namespace liaison
