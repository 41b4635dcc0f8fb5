#pragma once

#include "liaison/groebner.hpp"
#include "liaison/parse.hpp"

namespace liaison {

struct NormalForm {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // over the basis used
};

/// Division with quotient certificate: f = sum quotients[k]*basis[k] + remainder,
/// no remainder term divisible by any basis lead term.
inline NormalForm normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              bool want_certificate = true) {
    const RingPtr& ring = f.ring();
    std::vector<ModVec> b;
    b.reserve(basis.size());
    for (const auto& g : basis) b.push_back(ModVec::from_column({g}, ring));
    ModNormalForm nf = mod_normal_form(ModVec::from_column({f}, ring), b, want_certificate);
    return {nf.remainder.to_column(1)[0], std::move(nf.quotients)};
}

/// Reduced Groebner basis of an ideal given by generators.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                              const RingPtr& ring) {
    std::vector<ModVec> v;
    for (const auto& g : gens) {
        if (g.ring() && *g.ring() != *ring)
            throw input_error("generator from a different ring");
        if (!g.is_zero() && !g.is_homogeneous())
            throw input_error("inhomogeneous generator: " + g.str());
        v.push_back(ModVec::from_column({g}, ring));
    }
    FreeModule f{{0}};
    auto gb = module_groebner(std::move(v), f);
    std::vector<Polynomial> out;
    out.reserve(gb.size());
    for (const auto& m : gb) out.push_back(m.to_column(1)[0]);
    return out;
}

struct HilbertFunction {
    std::vector<long> values;  // values[j] = dim_k (R/I)_j for 0 <= j <= j_max
    int krull_dim = 0;         // degree of the eventual Hilbert polynomial + 1

    long value(int j) const {
        if (j < 0) return 0;
        if (j < static_cast<int>(values.size())) return values[j];
        if (krull_dim == 0) return 0;
        throw input_error("Hilbert function queried beyond computed range");
    }
};

/// Homogeneous ideal with cached Groebner data. Values are immutable after
/// construction; caches are shared across copies.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
        for (const auto& g : gens_) {
            if (g.is_zero()) throw input_error("zero polynomial rejected as ideal generator");
            if (!g.is_homogeneous())
                throw input_error("inhomogeneous ideal generator: " + g.str());
            require_same_ring(*g.ring(), *ring_);
        }
    }

    static Ideal from_text(std::string_view text, const RingPtr& ring) {
        return Ideal(ring, parse_generators(text, ring));
    }
    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal maximal(const RingPtr& ring) {
        std::vector<Polynomial> v;
        for (int i = 0; i < ring->nvars(); ++i) v.push_back(Polynomial::variable(ring, i));
        return Ideal(ring, std::move(v));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool has_generators() const { return !gens_.empty(); }

    const std::vector<Polynomial>& groebner() const {
        if (!cache_->gb) cache_->gb = groebner_basis(gens_, ring_);
        return *cache_->gb;
    }

    bool is_zero_ideal() const { return groebner().empty(); }
    bool is_unit() const {
        const auto& gb = groebner();
        return gb.size() == 1 && gb[0].is_unit();
    }
    bool is_proper() const { return !is_unit(); }

    NormalForm reduce(const Polynomial& f, bool want_certificate = true) const {
        return normal_form(f, groebner(), want_certificate);
    }
    bool contains(const Polynomial& f) const { return reduce(f, false).remainder.is_zero(); }
    bool contains(const Ideal& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }
    friend bool equal(const Ideal& a, const Ideal& b) {
        require_same_ring(*a.ring_, *b.ring_);
        return a.groebner() == b.groebner();
    }

    /// f = sum coeffs[j] * generators()[j]; requires f in the ideal.
    std::vector<Polynomial> representation(const Polynomial& f) const {
        const TrackedGroebner& t = tracked();
        std::vector<Polynomial> gb_polys;
        for (const auto& m : t.basis) gb_polys.push_back(m.to_column(1)[0]);
        NormalForm nf = normal_form(f, gb_polys, true);
        if (!nf.remainder.is_zero())
            throw input_error("polynomial is not in the ideal: " + f.str());
        std::vector<Polynomial> rep(gens_.size(), Polynomial::zero(ring_));
        for (std::size_t k = 0; k < gb_polys.size(); ++k) {
            if (nf.quotients[k].is_zero()) continue;
            for (std::size_t j = 0; j < gens_.size(); ++j)
                rep[j] = rep[j] + nf.quotients[k] * t.reps[k][j];
        }
        return rep;
    }

    /// Generators of the first syzygy module of generators(), as columns.
    std::vector<std::vector<Polynomial>> syzygies_of_generators() const {
        return tracked().syzygies;
    }

    Ideal colon(const Polynomial& g) const {
        if (g.is_zero()) throw input_error("colon by zero polynomial");
        if (is_zero_ideal()) return Ideal::zero(ring_);
        std::vector<ModVec> cols;
        cols.push_back(ModVec::from_column({g}, ring_));
        for (const auto& f : gens_) cols.push_back(ModVec::from_column({f}, ring_));
        FreeModule fm{{0}};
        TrackedGroebner t = tracked_groebner(cols, fm);
        std::vector<Polynomial> quot;
        for (const auto& syz : t.syzygies)
            if (!syz[0].is_zero()) quot.push_back(syz[0]);
        return Ideal(ring_, groebner_basis(quot, ring_));
    }

    Ideal colon(const Ideal& j) const {
        if (!j.has_generators()) throw input_error("colon by the zero ideal");
        std::optional<Ideal> acc;
        for (const auto& g : j.gens_) {
            Ideal c = colon(g);
            acc = acc ? intersect(*acc, c) : c;
        }
        return *acc;
    }

    friend Ideal intersect(const Ideal& a, const Ideal& b) {
        require_same_ring(*a.ring_, *b.ring_);
        if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(a.ring_);
        std::vector<ModVec> cols;
        for (const auto& f : a.gens_) cols.push_back(ModVec::from_column({f}, a.ring_));
        for (const auto& g : b.gens_) cols.push_back(ModVec::from_column({g}, a.ring_));
        FreeModule fm{{0}};
        TrackedGroebner t = tracked_groebner(cols, fm);
        std::vector<Polynomial> out;
        for (const auto& syz : t.syzygies) {
            Polynomial v = Polynomial::zero(a.ring_);
            for (std::size_t j = 0; j < a.gens_.size(); ++j) v = v + syz[j] * a.gens_[j];
            if (!v.is_zero()) out.push_back(v);
        }
        return Ideal(a.ring_, groebner_basis(out, a.ring_));
    }

    friend Ideal operator+(const Ideal& a, const Ideal& b) {
        require_same_ring(*a.ring_, *b.ring_);
        std::vector<Polynomial> gens = a.gens_;
        gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
        return Ideal(a.ring_, std::move(gens));
    }

    /// The ideal f * I.
    friend Ideal operator*(const Polynomial& f, const Ideal& i) {
        std::vector<Polynomial> gens;
        for (const auto& g : i.gens_) gens.push_back(f * g);
        return Ideal(i.ring_, std::move(gens));
    }

    /// Lead monomials of the reduced GB: the minimal generators of in(I).
    std::vector<Monomial> initial_generators() const {
        std::vector<Monomial> out;
        for (const auto& g : groebner()) out.push_back(g.lead_monomial());
        return out;
    }

    HilbertFunction hilbert_function(int j_max) const {
        HilbertFunction hf;
        auto leads = initial_generators();
        for (int j = 0; j <= j_max; ++j) {
            long count = 0;
            for (const auto& m : monomials_of_degree(ring_->nvars(), j, ring_->order())) {
                bool divisible = false;
                for (const auto& l : leads)
                    if (l.divides(m)) { divisible = true; break; }
                if (!divisible) ++count;
            }
            hf.values.push_back(count);
        }
        hf.krull_dim = dimension_and_grade().first;
        return hf;
    }

    /// Degree-j standard monomials: the monomial basis of (R/I)_j.
    std::vector<Monomial> standard_monomials(int j) const {
        auto leads = initial_generators();
        std::vector<Monomial> out;
        for (const auto& m : monomials_of_degree(ring_->nvars(), j, ring_->order())) {
            bool divisible = false;
            for (const auto& l : leads)
                if (l.divides(m)) { divisible = true; break; }
            if (!divisible) out.push_back(m);
        }
        return out;
    }

    /// (Krull dimension of R/I, grade of I). The unit ideal reports the
    /// dimension -1 flag (and grade N+1).
    std::pair<int, int> dimension_and_grade() const {
        if (!cache_->dim_grade) {
            int n = ring_->nvars();
            if (n > 24) throw input_error("dimension computation limited to 24 variables");
            auto leads = initial_generators();
            int best = -1;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                int size = __builtin_popcount(mask);
                if (size <= best) continue;
                bool independent = true;
                for (const auto& m : leads) {
                    bool supported = true;
                    for (int v = 0; v < n; ++v)
                        if (m.exponent(v) > 0 && !(mask & (1u << v))) { supported = false; break; }
                    if (supported) { independent = false; break; }
                }
                if (independent) best = size;
            }
            cache_->dim_grade = {best, n - best};
        }
        return *cache_->dim_grade;
    }
    int grade() const { return dimension_and_grade().second; }
    bool is_m_primary() const { return has_generators() && dimension_and_grade().first == 0; }

    /// Smallest degree with (R/I)_j = 0; only meaningful for m-primary I.
    int socle_bound() const {
        if (!is_m_primary()) throw input_error("socle bound requires an m-primary ideal");
        int j = 0;
        while (!standard_monomials(j).empty()) ++j;
        return j;
    }

    /// Homogeneous minimal generators, selected from the listed generators in
    /// list order by graded linear algebra on I/mI.
    const std::vector<Polynomial>& minimal_generators() const {
        if (cache_->min_gens) return *cache_->min_gens;
        std::vector<int> degrees;
        for (const auto& g : gens_) degrees.push_back(g.degree());
        std::sort(degrees.begin(), degrees.end());
        degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
        std::vector<Polynomial> mins;
        for (int d : degrees) {
            DegreeBasis basis(ring_, d);
            RowSpan span(basis.size(), ring_->modulus());
            // rows of (mI)_d: m*g over generators of strictly lower degree
            for (const auto& g : gens_) {
                if (g.degree() >= d) continue;
                for (const auto& m :
                     monomials_of_degree(ring_->nvars(), d - g.degree(), ring_->order()))
                    span.add(basis.densify(g.times_term(ring_->one(), m)));
            }
            for (const auto& g : gens_) {
                if (g.degree() != d) continue;
                if (span.add(basis.densify(g))) mins.push_back(g);
            }
        }
        cache_->min_gens = std::move(mins);
        return *cache_->min_gens;
    }

    /// Ideal generated by the minimal generators of degree <= d.
    Ideal truncated(int d) const {
        std::vector<Polynomial> gens;
        for (const auto& g : minimal_generators())
            if (g.degree() <= d) gens.push_back(g);
        return Ideal(ring_, std::move(gens));
    }

    /// Homogeneous representatives of a basis of the socle (I : m)/I.
    std::vector<Polynomial> socle_generators() const {
        if (!is_m_primary())
            throw input_error("socle requires an m-primary ideal");
        int top = socle_bound();
        std::vector<Polynomial> out;
        for (int d = 0; d < top; ++d) {
            auto std_d = standard_monomials(d);
            auto std_d1 = standard_monomials(d + 1);
            if (std_d.empty()) continue;
            std::map<ExpVec, std::size_t> up_index;
            for (std::size_t i = 0; i < std_d1.size(); ++i)
                up_index[std_d1[i].exponents()] = i;
            // stacked multiplication maps (R/I)_d -> ⊕_i (R/I)_{d+1}
            std::size_t rows_per_var = std_d1.size();
            std::vector<FpVec> cols;
            for (const auto& m : std_d) {
                FpVec col(ring_->nvars() * rows_per_var, 0);
                for (int v = 0; v < ring_->nvars(); ++v) {
                    Polynomial xm = Polynomial::monomial(
                        ring_, m * Monomial::variable(v, ring_->nvars()), ring_->one());
                    Polynomial nf = reduce(xm, false).remainder;
                    for (const auto& t : nf.terms()) {
                        auto it = up_index.find(t.mono.exponents());
                        if (it == up_index.end())
                            throw internal_error("normal form left the standard basis");
                        col[v * rows_per_var + it->second] = t.coeff.value();
                    }
                }
                cols.push_back(std::move(col));
            }
            // kernel of the map with matrix columns `cols`
            std::vector<FpVec> rows(ring_->nvars() * rows_per_var, FpVec(std_d.size(), 0));
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t r = 0; r < cols[c].size(); ++r) rows[r][c] = cols[c][r];
            for (const auto& k : kernel_basis(rows, std_d.size(), ring_->modulus())) {
                std::vector<Term> terms;
                for (std::size_t i = 0; i < k.size(); ++i)
                    if (k[i] != 0) terms.push_back({std_d[i], ring_->element(k[i])});
                out.emplace_back(ring_, std::move(terms));
            }
        }
        return out;
    }

private:
    struct Cache {
        std::optional<std::vector<Polynomial>> gb;
        std::optional<TrackedGroebner> tracked;
        std::optional<std::vector<Polynomial>> min_gens;
        std::optional<std::pair<int, int>> dim_grade;
    };

    const TrackedGroebner& tracked() const {
        if (!cache_->tracked) {
            std::vector<ModVec> cols;
            for (const auto& f : gens_) cols.push_back(ModVec::from_column({f}, ring_));
            FreeModule fm{{0}};
            cache_->tracked = tracked_groebner(cols, fm);
        }
        return *cache_->tracked;
    }

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<Cache> cache_;
};

} // namespace liaison
