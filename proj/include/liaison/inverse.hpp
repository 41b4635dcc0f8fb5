#pragma once

#include "liaison/linkage.hpp"

namespace liaison {

/// Contraction x^a ∘ X^b = X^(b-a), zero on exponent deficit, extended
/// bilinearly. f lives in R, g in the dual ring T.
inline Polynomial contract(const Polynomial& f, const Polynomial& g) {
    if (g.ring()->nvars() != f.ring()->nvars() || g.ring()->modulus() != f.ring()->modulus())
        throw input_error("contraction operands live over incompatible rings");
    Polynomial out = Polynomial::zero(g.ring());
    for (const auto& tf : f.terms()) {
        std::vector<Term> terms;
        for (const auto& tg : g.terms()) {
            if (!tf.mono.divides(tg.mono)) continue;
            terms.push_back({tg.mono.quotient(tf.mono), tf.coeff * tg.coeff});
        }
        out = out + Polynomial(g.ring(), std::move(terms));
    }
    return out;
}

/// A finitely generated R-submodule of T under contraction, stored as
/// per-degree bases (the closure) plus a minimal generating set.
class InverseSystem {
public:
    const RingPtr& base_ring() const { return ring_; }
    const RingPtr& dual_ring() const { return dual_; }
    int top_degree() const { return static_cast<int>(closure_.size()) - 1; }
    long dimension(int j) const {
        if (j < 0 || j > top_degree()) return 0;
        return static_cast<long>(closure_[j].size());
    }
    const std::vector<Polynomial>& minimal_generators() const { return generators_; }
    const std::vector<std::vector<Polynomial>>& closure() const { return closure_; }

    bool contains(const Polynomial& g) const {
        if (g.is_zero()) return true;
        if (!g.is_homogeneous())
            throw input_error("inverse-system membership is per homogeneous degree");
        int j = g.degree();
        if (j > top_degree()) return false;
        DegreeBasis basis(dual_, j);
        RowSpan span(basis.size(), dual_->modulus());
        for (const auto& b : closure_[j]) span.add(basis.densify(b));
        return span.contains(basis.densify(g));
    }

    /// Same per-degree spans.
    friend bool same_system(const InverseSystem& a, const InverseSystem& b) {
        int top = std::max(a.top_degree(), b.top_degree());
        for (int j = 0; j <= top; ++j) {
            if (a.dimension(j) != b.dimension(j)) return false;
            for (const auto& g : (j <= a.top_degree() ? a.closure_[j] : std::vector<Polynomial>{}))
                if (!b.contains(g)) return false;
        }
        return true;
    }

    /// I^{-1}: per-degree kernels of the generator contraction maps. An
    /// m-primary ideal gets its full finite system; otherwise j_max is
    /// required and only the pieces up to j_max are produced.
    static InverseSystem of_ideal(const Ideal& ideal, std::optional<int> j_max = std::nullopt) {
        const RingPtr& ring = ideal.ring();
        int top;
        if (ideal.is_m_primary()) {
            top = ideal.socle_bound() - 1;
            if (j_max) top = std::min(top, *j_max);
        } else if (j_max) {
            top = *j_max;
        } else {
            throw input_error("inverse system of a non-m-primary ideal needs j_max");
        }
        InverseSystem out;
        out.ring_ = ring;
        out.dual_ = ring->dual();
        out.check_characteristic(top);
        out.closure_.assign(top + 1, {});
        for (int j = 0; j <= top; ++j) {
            DegreeBasis dual_basis(out.dual_, j);
            std::vector<FpVec> rows;
            for (const auto& f : ideal.generators()) {
                int e = j - f.degree();
                if (e < 0) continue;  // contraction by f kills all of T_j
                DegreeBasis target(out.dual_, e);
                std::vector<FpVec> block(target.size(), FpVec(dual_basis.size(), 0));
                for (std::size_t col = 0; col < dual_basis.size(); ++col) {
                    Polynomial img = contract(
                        f, Polynomial::monomial(out.dual_, dual_basis.monomials()[col],
                                                out.dual_->one()));
                    for (const auto& t : img.terms())
                        block[target.index_of(t.mono)][col] = t.coeff.value();
                }
                for (auto& r : block) rows.push_back(std::move(r));
            }
            for (const auto& k : kernel_basis(rows, dual_basis.size(), ring->modulus()))
                out.closure_[j].push_back(dual_basis.polynomial(k));
        }
        out.extract_generators();
        return out;
    }

    /// The module generated by explicit dual elements.
    static InverseSystem from_generators(std::vector<Polynomial> gens, const RingPtr& base) {
        InverseSystem out;
        out.ring_ = base;
        out.dual_ = base->dual();
        int top = 0;
        std::vector<Polynomial> nonzero;
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (!g.is_homogeneous())
                throw input_error("inverse-system generators must be homogeneous");
            top = std::max(top, g.degree());
            nonzero.push_back(std::move(g));
        }
        out.check_characteristic(top);
        out.closure_.assign(nonzero.empty() ? 0 : top + 1, {});
        for (int j = 0; j <= (nonzero.empty() ? -1 : top); ++j) {
            DegreeBasis basis(out.dual_, j);
            RowSpan span(basis.size(), base->modulus());
            std::vector<FpVec> kept;
            for (const auto& g : nonzero) {
                int e = g.degree() - j;
                if (e < 0) continue;
                for (const auto& m : monomials_of_degree(base->nvars(), e, base->order())) {
                    Polynomial img =
                        contract(Polynomial::monomial(base, m, base->one()), g);
                    if (img.is_zero()) continue;
                    FpVec v = basis.densify(img);
                    if (span.add(v)) kept.push_back(basis.densify(img));
                }
            }
            for (const auto& v : kept) out.closure_[j].push_back(basis.polynomial(v));
        }
        out.extract_generators();
        return out;
    }

private:
    void check_characteristic(int top) const {
        if (static_cast<int>(ring_->modulus()) <= top)
            throw input_error(
                "characteristic too small for contraction at this degree (p <= max degree)");
    }

    /// Minimal generators top degree down: a basis of M_j modulo the span of
    /// the variable contractions of M_{j+1}.
    void extract_generators() {
        generators_.clear();
        for (int j = top_degree(); j >= 0; --j) {
            if (closure_[j].empty()) continue;
            DegreeBasis basis(dual_, j);
            RowSpan span(basis.size(), dual_->modulus());
            if (j + 1 <= top_degree()) {
                for (const auto& b : closure_[j + 1])
                    for (int v = 0; v < ring_->nvars(); ++v)
                        span.add(basis.densify(contract(Polynomial::variable(ring_, v), b)));
            }
            for (const auto& b : closure_[j])
                if (span.add(basis.densify(b))) generators_.push_back(b);
        }
    }

    RingPtr ring_;
    RingPtr dual_;
    std::vector<Polynomial> generators_;
    std::vector<std::vector<Polynomial>> closure_;
};

/// ann_R(M): per-degree kernels of f -> (f ∘ g_α), assembled into minimal
/// ideal generators. annihilate(inverse_system(I)) = I for m-primary I.
inline Ideal annihilate(const InverseSystem& m) {
    const RingPtr& ring = m.base_ring();
    int top = m.top_degree();
    std::vector<Polynomial> collected;
    for (int d = 0; d <= top + 1; ++d) {
        DegreeBasis basis(ring, d);
        // kernel of R_d -> ⊕_α T_(deg g_α - d)
        std::vector<FpVec> rows;
        for (const auto& g : m.minimal_generators()) {
            int e = g.degree() - d;
            if (e < 0) continue;
            DegreeBasis target(m.dual_ring(), e);
            std::vector<FpVec> block(target.size(), FpVec(basis.size(), 0));
            for (std::size_t col = 0; col < basis.size(); ++col) {
                Polynomial img = contract(
                    Polynomial::monomial(ring, basis.monomials()[col], ring->one()), g);
                for (const auto& t : img.terms())
                    block[target.index_of(t.mono)][col] = t.coeff.value();
            }
            for (auto& r : block) rows.push_back(std::move(r));
        }
        auto ker = kernel_basis(rows, basis.size(), ring->modulus());
        // strip elements already generated in lower degrees
        RowSpan span(basis.size(), ring->modulus());
        for (const auto& g : collected) {
            int e = d - g.degree();
            if (e <= 0) continue;
            for (const auto& mon : monomials_of_degree(ring->nvars(), e, ring->order()))
                span.add(basis.densify(g.times_term(ring->one(), mon)));
        }
        for (const auto& k : ker)
            if (span.add(k)) collected.push_back(basis.polynomial(k));
        if (!collected.empty() && collected.front().degree() == 0) break;  // unit ideal
    }
    return Ideal(ring, collected);
}

/// (C : I)^{-1} = < f_1 ∘ G, ..., f_n ∘ G > for C Gorenstein m-primary with
/// dual socle generator G and C ⊆ I.
inline InverseSystem link_dual_generators(const CompleteIntersection& c, const Ideal& ideal) {
    for (const auto& g : c.generators())
        if (!ideal.contains(g))
            throw input_error("complete intersection is not contained in the ideal");
    if (!c.ideal().is_m_primary())
        throw input_error("link duals need an m-primary complete intersection");
    InverseSystem dual_c = InverseSystem::of_ideal(c.ideal());
    if (dual_c.minimal_generators().size() != 1)
        throw internal_error("complete intersection has a non-principal inverse system");
    const Polynomial& g = dual_c.minimal_generators()[0];
    std::vector<Polynomial> gens;
    for (const auto& f : ideal.generators()) gens.push_back(contract(f, g));
    return InverseSystem::from_generators(std::move(gens), ideal.ring());
}

/// dim_k M_j; equals HF_{R/ann(M)}(j).
inline long dual_hilbert(const InverseSystem& m, int j) { return m.dimension(j); }

} // namespace liaison
