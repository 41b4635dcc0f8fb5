#pragma once

#include <array>
#include <random>

#include "liaison/resolution.hpp"

namespace liaison {

/// Deterministic random source; every generic choice in the library flows
/// through one of these.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    Fp field_element(const Ring& ring) {
        std::uniform_int_distribution<std::uint32_t> d(0, ring.modulus() - 1);
        return Fp(d(eng_), ring.modulus());
    }

private:
    std::mt19937_64 eng_;
};

/// Non-decreasing degree tuple of a complete intersection.
struct CIType {
    std::vector<int> degrees;

    CIType() = default;
    explicit CIType(std::vector<int> d) : degrees(std::move(d)) {
        std::sort(degrees.begin(), degrees.end());
        for (int a : degrees)
            if (a < 1) throw input_error("CI type entries must be positive");
    }
    int size() const { return static_cast<int>(degrees.size()); }
    int total() const {
        int s = 0;
        for (int a : degrees) s += a;
        return s;
    }
    friend bool operator==(const CIType& a, const CIType& b) { return a.degrees == b.degrees; }
    friend bool operator!=(const CIType& a, const CIType& b) { return !(a == b); }
    /// Componentwise order of the paper: a >= b entrywise.
    friend bool componentwise_geq(const CIType& a, const CIType& b) {
        if (a.size() != b.size()) return false;
        for (int i = 0; i < a.size(); ++i)
            if (a.degrees[i] < b.degrees[i]) return false;
        return true;
    }
    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
        return s + ")";
    }
};

/// A homogeneous regular sequence with its type; grade is verified at
/// construction.
class CompleteIntersection {
public:
    CompleteIntersection(RingPtr ring, std::vector<Polynomial> gens)
        : ideal_(Ideal::zero(ring)) {
        std::stable_sort(gens.begin(), gens.end(),
                         [](const Polynomial& a, const Polynomial& b) {
                             return a.degree() < b.degree();
                         });
        std::vector<int> degs;
        for (const auto& g : gens) degs.push_back(g.degree());
        type_ = CIType(degs);
        ideal_ = Ideal(std::move(ring), gens);
        if (ideal_.grade() != static_cast<int>(gens_().size()))
            throw input_error("generators do not form a regular sequence (grade " +
                              std::to_string(ideal_.grade()) + ", expected " +
                              std::to_string(gens_().size()) + ")");
    }

    const std::vector<Polynomial>& generators() const { return ideal_.generators(); }
    const CIType& type() const { return type_; }
    const Ideal& ideal() const { return ideal_; }
    int size() const { return type_.size(); }

    /// Hilbert function of R/C from the type: coefficients of
    /// prod_i (1 + t + ... + t^(a_i - 1)). Independent of any colon machinery.
    std::vector<long> quotient_hilbert() const {
        std::vector<long> h{1};
        for (int a : type_.degrees) {
            std::vector<long> next(h.size() + a - 1, 0);
            for (std::size_t i = 0; i < h.size(); ++i)
                for (int k = 0; k < a; ++k) next[i + k] += h[i];
            h = std::move(next);
        }
        return h;
    }

private:
    const std::vector<Polynomial>& gens_() const { return ideal_.generators(); }
    CIType type_;
    Ideal ideal_;
};

/// A random homogeneous element of I of the given degree: a random
/// field-coefficient combination of monomial multiples of the generators.
/// Each generator contributes at most a handful of randomly chosen monomial
/// multiples (all of them when the multiplier set is small); every caller
/// validates the construction and retries, so the sparser support trades a
/// little failure probability for much lighter arithmetic downstream.
inline Polynomial random_element(const Ideal& ideal, int degree, Rng& rng) {
    const RingPtr& ring = ideal.ring();
    constexpr std::size_t kQuota = 6;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Polynomial out = Polynomial::zero(ring);
        for (const auto& g : ideal.minimal_generators()) {
            if (g.degree() > degree) continue;
            auto monos =
                monomials_of_degree(ring->nvars(), degree - g.degree(), ring->order());
            if (monos.size() <= kQuota) {
                for (const auto& m : monos)
                    out = out + g.times_term(rng.field_element(*ring), m);
            } else {
                for (std::size_t k = 0; k < kQuota; ++k) {
                    const Monomial& m = monos[rng.next() % monos.size()];
                    out = out + g.times_term(rng.field_element(*ring), m);
                }
            }
        }
        if (!out.is_zero()) return out;
    }
    throw input_error("ideal has no nonzero elements of degree " + std::to_string(degree));
}

/// Generic complete intersection of the requested type inside I; retried on
/// grade failure, then reported as a genericity error (distinct from
/// "no such CI exists").
inline CompleteIntersection construct_generic_ci(const Ideal& ideal, const CIType& type,
                                                 Rng& rng, int retries = 20) {
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<Polynomial> slots;
        // an empty graded piece is a structural failure and propagates as such
        for (int d : type.degrees) slots.push_back(random_element(ideal, d, rng));
        try {
            return CompleteIntersection(ideal.ring(), std::move(slots));
        } catch (const input_error&) {
            continue;
        }
    }
    throw genericity_error("no regular sequence of type " + type.str() + " found after " +
                           std::to_string(retries) + " random attempts");
}

/// Direct link J = C : I. C = I yields the unit ideal (flagged by
/// J.is_unit()); C ⊄ I or a grade mismatch is a precondition error.
inline Ideal direct_link(const CompleteIntersection& c, const Ideal& ideal) {
    for (const auto& g : c.generators())
        if (!ideal.contains(g))
            throw input_error("complete intersection is not contained in the ideal: " + g.str());
    if (c.ideal().grade() != ideal.grade())
        throw input_error("grade mismatch: CI has grade " + std::to_string(c.ideal().grade()) +
                          ", ideal has grade " + std::to_string(ideal.grade()));
    return c.ideal().colon(ideal);
}

/// Coordinates of the class of f in (I/mI)_{deg f} with respect to the
/// minimal generators of I of that degree. Zero vector iff f ∈ mI.
inline FpVec minimal_generator_coordinates(const Polynomial& f, const Ideal& ideal) {
    if (!ideal.contains(f)) throw input_error("polynomial is not in the ideal: " + f.str());
    const RingPtr& ring = ideal.ring();
    int d = f.degree();
    DegreeBasis basis(ring, d);
    RowSpan span(basis.size(), ring->modulus(), /*track=*/true);
    const auto& mins = ideal.minimal_generators();
    std::vector<std::size_t> slot_positions;
    std::size_t added = 0;
    for (const auto& g : mins) {
        if (g.degree() >= d) continue;
        for (const auto& m : monomials_of_degree(ring->nvars(), d - g.degree(), ring->order())) {
            span.add(basis.densify(g.times_term(ring->one(), m)));
            ++added;
        }
    }
    for (const auto& g : mins) {
        if (g.degree() != d) continue;
        slot_positions.push_back(added);
        span.add(basis.densify(g));
        ++added;
    }
    auto coords = span.coordinates(basis.densify(f));
    if (!coords) throw internal_error("contained element missing from degree span");
    FpVec out;
    for (std::size_t pos : slot_positions) out.push_back((*coords)[pos]);
    return out;
}

inline bool is_weak_associate(const Polynomial& f, const Ideal& ideal) {
    for (std::uint32_t c : minimal_generator_coordinates(f, ideal))
        if (c != 0) return true;
    return false;
}

/// Syzygy-side analysis of an ideal: expresses first syzygies over the
/// minimal generators of Syz_1 and reads off constant coefficients, which is
/// exactly the projection to Syz_1 / m·Syz_1.
class SyzygyAnalyzer {
public:
    explicit SyzygyAnalyzer(const Ideal& ideal)
        : ring_(ideal.ring()), mins_(ideal.minimal_generators()),
          min_ideal_(ring_, mins_) {
        f1_.shifts.clear();
        PolyMatrix d1(1);
        for (const auto& g : mins_) {
            f1_.shifts.push_back(g.degree());
            d1[0].push_back(g);
        }
        std::optional<int> cap;
        if (ideal.is_m_primary()) cap = ideal.socle_bound() + 1;  // top + 2
        SyzygyResult s = syzygies(d1, FreeModule{{0}}, ring_, cap);
        syz_module_ = s.module;
        syz_cols_.clear();
        for (int c = 0; c < syz_module_.rank(); ++c) {
            std::vector<Polynomial> col;
            for (int r = 0; r < matrix_rows(s.matrix); ++r) col.push_back(s.matrix[r][c]);
            syz_cols_.push_back(ModVec::from_column(col, ring_));
        }
        tracked_ = tracked_groebner(syz_cols_, f1_);
    }

    const std::vector<Polynomial>& minimal_generators() const { return mins_; }
    const Ideal& minimal_ideal() const { return min_ideal_; }
    const FreeModule& syzygy_module() const { return syz_module_; }

    /// Class of a syzygy vector in Syz_1 / m·Syz_1, as constant coefficients
    /// over the minimal syzygy generators.
    FpVec project(const ModVec& syzygy) const {
        ModNormalForm nf = mod_normal_form(syzygy, tracked_.basis, true);
        if (!nf.remainder.is_zero())
            throw internal_error("vector is not a syzygy of the minimal generators");
        int d = syzygy.degree(f1_);
        std::vector<Polynomial> cert(syz_cols_.size(), Polynomial::zero(ring_));
        for (std::size_t k = 0; k < tracked_.basis.size(); ++k) {
            if (nf.quotients[k].is_zero()) continue;
            for (std::size_t c = 0; c < syz_cols_.size(); ++c)
                cert[c] = cert[c] + nf.quotients[k] * tracked_.reps[k][c];
        }
        FpVec out(syz_cols_.size(), 0);
        for (std::size_t c = 0; c < syz_cols_.size(); ++c) {
            if (syz_module_.shifts[c] != d) continue;
            out[c] = cert[c].is_zero() ? 0
                                       : cert[c].coefficient(Monomial(ring_->nvars())).value();
        }
        return out;
    }

    /// The Koszul syzygy vector between two elements of the ideal.
    ModVec koszul_syzygy(const Polynomial& f, const Polynomial& g) const {
        auto a = min_ideal_.representation(f);
        auto b = min_ideal_.representation(g);
        std::vector<Polynomial> col;
        for (std::size_t k = 0; k < mins_.size(); ++k) col.push_back(f * b[k] - g * a[k]);
        return ModVec::from_column(col, ring_);
    }

    /// Do f and g yield a minimal Koszul relation in the ideal?
    bool pair_is_minimal(const Polynomial& f, const Polynomial& g) const {
        ModVec v = koszul_syzygy(f, g);
        if (v.is_zero()) return false;
        for (std::uint32_t c : project(v))
            if (c != 0) return true;
        return false;
    }

    /// lambda(I): dimension of the span of all pairwise Koszul syzygies of
    /// the minimal generators inside Syz_1 / m·Syz_1.
    long lambda() const {
        RowSpan span(syz_cols_.size(), ring_->modulus());
        long rank = 0;
        for (std::size_t i = 0; i < mins_.size(); ++i)
            for (std::size_t j = i + 1; j < mins_.size(); ++j) {
                std::vector<Polynomial> col(mins_.size(), Polynomial::zero(ring_));
                col[j] = mins_[i];
                col[i] = -mins_[j];
                FpVec w = project(ModVec::from_column(col, ring_));
                if (span.add(std::move(w))) ++rank;
            }
        return rank;
    }

    /// Pairs (i, j) of minimal generators yielding minimal Koszul relations.
    std::vector<std::pair<int, int>> minimal_koszul_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t i = 0; i < mins_.size(); ++i)
            for (std::size_t j = i + 1; j < mins_.size(); ++j) {
                std::vector<Polynomial> col(mins_.size(), Polynomial::zero(ring_));
                col[j] = mins_[i];
                col[i] = -mins_[j];
                FpVec w = project(ModVec::from_column(col, ring_));
                bool nonzero = false;
                for (std::uint32_t c : w)
                    if (c != 0) nonzero = true;
                if (nonzero) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        return out;
    }

private:
    RingPtr ring_;
    std::vector<Polynomial> mins_;
    Ideal min_ideal_;
    FreeModule f1_;
    FreeModule syz_module_;
    std::vector<ModVec> syz_cols_;
    TrackedGroebner tracked_;
};

inline long lambda_count(const Ideal& ideal) { return SyzygyAnalyzer(ideal).lambda(); }

inline bool is_complete_intersection(const Ideal& ideal) {
    if (ideal.is_unit() || ideal.is_zero_ideal()) return false;
    return static_cast<int>(ideal.minimal_generators().size()) == ideal.grade();
}

/// Grade jumps by the truncation criterion: g_1 is the least generator
/// degree; g_j is the least d >= g_{j-1} with grade(I_{<=d}) >= j.
inline CIType grade_jump_values(const Ideal& ideal) {
    if (ideal.is_unit() || ideal.is_zero_ideal())
        throw input_error("grade jumps require a proper nonzero ideal");
    int n = ideal.grade();
    std::vector<int> gen_degrees;
    for (const auto& g : ideal.minimal_generators()) gen_degrees.push_back(g.degree());
    std::sort(gen_degrees.begin(), gen_degrees.end());
    gen_degrees.erase(std::unique(gen_degrees.begin(), gen_degrees.end()), gen_degrees.end());

    std::vector<int> jumps;
    jumps.push_back(gen_degrees.front());
    for (int j = 2; j <= n; ++j) {
        int prev = jumps.back();
        int found = -1;
        for (int d : gen_degrees) {
            if (d < prev) continue;
            if (ideal.truncated(d).grade() >= j) { found = d; break; }
        }
        if (found < 0) throw internal_error("truncation grade never reached the ideal grade");
        jumps.push_back(found);
    }
    return CIType(jumps);
}

struct GradeJumps {
    CIType jumps;
    CompleteIntersection witness;
};

/// Jumps together with a generic witness CI of exactly that type.
inline GradeJumps grade_jumps(const Ideal& ideal, Rng& rng) {
    CIType t = grade_jump_values(ideal);
    return GradeJumps{t, construct_generic_ci(ideal, t, rng)};
}

// ---------------------------------------------------------------------------
// Ferrand's mapping cone
// ---------------------------------------------------------------------------

/// Certificate solver for the module generated by the columns of a fixed
/// matrix; used to lift maps through the differentials.
class ColumnSolver {
public:
    ColumnSolver(const PolyMatrix& m, const FreeModule& rowspace, RingPtr ring)
        : ring_(std::move(ring)), ncols_(matrix_cols(m)) {
        std::vector<ModVec> cols;
        for (int c = 0; c < ncols_; ++c) {
            std::vector<Polynomial> col;
            for (int r = 0; r < matrix_rows(m); ++r) col.push_back(m[r][c]);
            cols.push_back(ModVec::from_column(col, ring_));
        }
        tracked_ = tracked_groebner(cols, rowspace);
    }

    /// x with M x = target; throws internal_error if target is outside the
    /// column span.
    std::vector<Polynomial> solve(const std::vector<Polynomial>& target) const {
        ModVec t = ModVec::from_column(target, ring_);
        ModNormalForm nf = mod_normal_form(t, tracked_.basis, true);
        if (!nf.remainder.is_zero())
            throw internal_error("lift target is outside the column span");
        std::vector<Polynomial> x(ncols_, Polynomial::zero(ring_));
        for (std::size_t k = 0; k < tracked_.basis.size(); ++k) {
            if (nf.quotients[k].is_zero()) continue;
            for (int c = 0; c < ncols_; ++c)
                x[c] = x[c] + nf.quotients[k] * tracked_.reps[k][c];
        }
        return x;
    }

private:
    RingPtr ring_;
    int ncols_;
    TrackedGroebner tracked_;
};

struct TrimReport {
    std::vector<int> d3_unit_rows;                  // CI generator indices (0-based)
    std::vector<std::pair<int, int>> d2_unit_rows;  // CI generator pairs (0-based)
};

struct FerrandCone {
    GradedResolution source;        // minimal resolution of R/I
    std::vector<Polynomial> ci;     // f1, f2, f3 sorted by degree
    PolyMatrix u1, u2, u3;          // lift K_i -> F_i of the Koszul resolution
    GradedResolution cone;          // the reduced shifted dual cone, resolving R/(C:I)
    TrimReport trims;
    GradedResolution minimalized;
};

/// Ferrand's mapping cone for a grade-3 link: the reduced shifted dual of the
/// cone of the comparison map u : K_• -> F_•, with blocks
/// ∂_1 = [-δ3* u3*], ∂_2 = [[-δ2*, u2*], [0, d3*]], ∂_3 = [[u1*], [d2*]].
inline FerrandCone ferrand_cone(const Ideal& ideal, const CompleteIntersection& c) {
    const RingPtr& ring = ideal.ring();
    if (c.size() != 3 || ideal.grade() != 3)
        throw input_error("Ferrand cone implemented for grade 3");
    for (const auto& g : c.generators())
        if (!ideal.contains(g))
            throw input_error("complete intersection is not contained in the ideal");
    if (equal(c.ideal(), ideal))
        throw input_error("C = I boundary case is excluded (the link is the unit ideal)");

    FerrandCone out;
    out.ci = c.generators();
    const Polynomial& f1 = out.ci[0];
    const Polynomial& f2 = out.ci[1];
    const Polynomial& f3 = out.ci[2];
    int a1 = f1.degree(), a2 = f2.degree(), a3 = f3.degree();
    int a = a1 + a2 + a3;

    Ideal min_ideal(ring, ideal.minimal_generators());
    out.source = free_resolution(min_ideal);
    if (out.source.length() != 3)
        throw input_error("ideal is not perfect of grade 3 (projective dimension " +
                          std::to_string(out.source.length()) + ")");
    const PolyMatrix& d2 = out.source.diff(2);
    const PolyMatrix& d3 = out.source.diff(3);
    const FreeModule& fm1 = out.source.module(1);
    const FreeModule& fm2 = out.source.module(2);
    const FreeModule& fm3 = out.source.module(3);
    int b1 = fm1.rank(), b2 = fm2.rank(), b3 = fm3.rank();

    Polynomial zero = Polynomial::zero(ring);
    // Koszul differentials of C, exactly as displayed
    PolyMatrix delta2 = {{-f2, f3, zero}, {f1, zero, -f3}, {zero, -f1, f2}};
    PolyMatrix delta3 = {{f3}, {f2}, {f1}};

    // u1 : K_1 -> F_1, columns are representations of the f_i
    out.u1.assign(b1, std::vector<Polynomial>(3, zero));
    for (int i = 0; i < 3; ++i) {
        auto rep = min_ideal.representation(c.generators()[i]);
        for (int r = 0; r < b1; ++r) out.u1[r][i] = rep[r];
    }
    // u2 : K_2 -> F_2 solves d2 * u2 = u1 * delta2
    {
        ColumnSolver solver(d2, fm1, ring);
        PolyMatrix rhs = matrix_product(out.u1, delta2, ring);
        out.u2.assign(b2, std::vector<Polynomial>(3, zero));
        for (int j = 0; j < 3; ++j) {
            std::vector<Polynomial> target;
            for (int r = 0; r < b1; ++r) target.push_back(rhs[r][j]);
            auto x = solver.solve(target);
            for (int r = 0; r < b2; ++r) out.u2[r][j] = x[r];
        }
    }
    // u3 : K_3 -> F_3 solves d3 * u3 = u2 * delta3
    {
        ColumnSolver solver(d3, fm2, ring);
        PolyMatrix rhs = matrix_product(out.u2, delta3, ring);
        out.u3.assign(b3, std::vector<Polynomial>(1, zero));
        std::vector<Polynomial> target;
        for (int r = 0; r < b2; ++r) target.push_back(rhs[r][0]);
        auto x = solver.solve(target);
        for (int r = 0; r < b3; ++r) out.u3[r][0] = x[r];
    }

    // assemble the dual cone; M^∨ turns shift s into a - s
    GradedResolution& cone = out.cone;
    cone.ring = ring;
    cone.modules.resize(4);
    cone.modules[0] = FreeModule{{0}};
    cone.modules[1].shifts = {a - a1 - a2, a - a1 - a3, a - a2 - a3};
    for (int s : fm3.shifts) cone.modules[1].shifts.push_back(a - s);
    cone.modules[2].shifts = {a - a1, a - a2, a - a3};
    for (int s : fm2.shifts) cone.modules[2].shifts.push_back(a - s);
    cone.modules[3].shifts.clear();
    for (int s : fm1.shifts) cone.modules[3].shifts.push_back(a - s);

    PolyMatrix d2t = transpose(d2, ring);
    PolyMatrix d3t = transpose(d3, ring);
    PolyMatrix u1t = transpose(out.u1, ring);
    PolyMatrix u2t = transpose(out.u2, ring);
    PolyMatrix u3t = transpose(out.u3, ring);

    // ∂_1 = [-δ3*  u3*]
    PolyMatrix p1(1, std::vector<Polynomial>(3 + b3, zero));
    for (int k = 0; k < 3; ++k) p1[0][k] = -delta3[k][0];
    for (int k = 0; k < b3; ++k) p1[0][3 + k] = u3t[0][k];
    // ∂_2 = [[-δ2*, u2*], [0, d3*]]
    PolyMatrix p2(3 + b3, std::vector<Polynomial>(3 + b2, zero));
    for (int r = 0; r < 3; ++r)
        for (int cc = 0; cc < 3; ++cc) p2[r][cc] = -delta2[cc][r];
    for (int r = 0; r < 3; ++r)
        for (int cc = 0; cc < b2; ++cc) p2[r][3 + cc] = u2t[r][cc];
    for (int r = 0; r < b3; ++r)
        for (int cc = 0; cc < b2; ++cc) p2[3 + r][3 + cc] = d3t[r][cc];
    // ∂_3 = [[u1*], [d2*]]
    PolyMatrix p3(3 + b2, std::vector<Polynomial>(b1, zero));
    for (int r = 0; r < 3; ++r)
        for (int cc = 0; cc < b1; ++cc) p3[r][cc] = u1t[r][cc];
    for (int r = 0; r < b2; ++r)
        for (int cc = 0; cc < b1; ++cc) p3[3 + r][cc] = d2t[r][cc];

    cone.diffs = {std::move(p1), std::move(p2), std::move(p3)};
    if (!cone.is_complex()) throw internal_error("Ferrand cone is not a complex");

    // unit-entry taxonomy before any trimming
    auto row_has_unit = [&](const PolyMatrix& m, int r) {
        for (const auto& e : m[r])
            if (!e.is_zero() && e.degree() == 0) return true;
        return false;
    };
    for (int i = 0; i < 3; ++i)
        if (row_has_unit(cone.diffs[2], i)) out.trims.d3_unit_rows.push_back(i);
    static const std::pair<int, int> wedge[3] = {{0, 1}, {0, 2}, {1, 2}};
    for (int k = 0; k < 3; ++k)
        if (row_has_unit(cone.diffs[1], k)) out.trims.d2_unit_rows.push_back(wedge[k]);

    out.minimalized = minimalize(cone);
    return out;
}

// ---------------------------------------------------------------------------
// Hilbert function identity for links
// ---------------------------------------------------------------------------

/// Checks HF_{R/(C:I)}(a - i) = HF_{R/C}(i) - HF_{R/I}(i) for all i, where
/// a = (sum of the type) - N. Requires an m-primary input ideal.
inline bool hf_link_formula_holds(const Ideal& ideal, const CompleteIntersection& c,
                                  const Ideal& link) {
    const RingPtr& ring = ideal.ring();
    if (!ideal.is_m_primary() || c.size() != ring->nvars()) return false;
    int a = c.type().total() - ring->nvars();
    auto hf_c = c.quotient_hilbert();
    auto hf_i = ideal.hilbert_function(a + 1);
    auto hf_j = link.hilbert_function(a + 1);
    auto at = [](const std::vector<long>& v, int i) {
        return (i >= 0 && i < static_cast<int>(v.size())) ? v[i] : 0;
    };
    for (int i = 0; i <= a + 1; ++i) {
        long lhs = (a - i >= 0) ? hf_j.value(a - i) : 0;
        long rhs = at(hf_c, i) - hf_i.value(i);
        if (lhs != rhs) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

/// One requested step of a chain: an explicit regular sequence or a type to
/// be realized generically.
struct ChainStepInput {
    std::optional<std::vector<Polynomial>> explicit_gens;
    std::optional<CIType> type;

    static ChainStepInput of_type(CIType t) { return {std::nullopt, std::move(t)}; }
    static ChainStepInput of_gens(std::vector<Polynomial> g) {
        return {std::move(g), std::nullopt};
    }
};

struct ChainStep {
    CIType type;
    std::vector<Polynomial> ci_gens;
    Ideal link;
    BettiTable betti;
    long lambda = 0;
    CIType jumps;
};

struct ChainReport {
    std::vector<ChainStep> steps;
    bool sequentially_bounded = true;
    bool terminal_is_ci = false;
};

/// Runs the chain of links, validating each step's regular sequence, and
/// reports per-step invariants plus the global flags.
inline ChainReport verify_chain(const Ideal& start, const std::vector<ChainStepInput>& inputs,
                                Rng& rng) {
    ChainReport report;
    Ideal current = start;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        std::optional<CompleteIntersection> ci;
        try {
            if (inputs[k].explicit_gens) {
                ci.emplace(current.ring(), *inputs[k].explicit_gens);
                for (const auto& g : ci->generators())
                    if (!current.contains(g))
                        throw input_error("regular sequence is not contained in the ideal");
            } else if (inputs[k].type) {
                ci.emplace(construct_generic_ci(current, *inputs[k].type, rng));
            } else {
                throw input_error("chain step carries neither generators nor a type");
            }
            if (ci->size() != current.grade())
                throw input_error("regular sequence length differs from the ideal grade");
            if (equal(ci->ideal(), current))
                throw input_error("step links the ideal by itself (C = I boundary)");
        } catch (const input_error& e) {
            throw input_error("chain step " + std::to_string(k) + ": " + e.what());
        }
        Ideal link = direct_link(*ci, current);
        ChainStep step{ci->type(), ci->generators(), link, betti_table(link),
                       lambda_count(link), grade_jump_values(link)};
        report.steps.push_back(std::move(step));
        current = link;
    }
    for (std::size_t k = 0; k + 1 < report.steps.size(); ++k)
        if (!componentwise_geq(report.steps[k].type, report.steps[k + 1].type))
            report.sequentially_bounded = false;
    report.terminal_is_ci = !report.steps.empty() &&
                            is_complete_intersection(report.steps.back().link);
    return report;
}

// ---------------------------------------------------------------------------
// Greedy licci search
// ---------------------------------------------------------------------------

enum class LicciPolicy { minimal_type, koszul_pair_first };

struct LicciSearchResult {
    ChainReport chain;
    bool reached_ci = false;
    bool inconclusive = false;  // step budget exhausted; proves nothing
};

/// Repeatedly links by a minimal-type witness or by a CI through a minimal
/// Koszul pair, stopping at a complete intersection or the step budget.
inline LicciSearchResult licci_greedy_search(const Ideal& start, int max_steps,
                                             LicciPolicy policy, Rng& rng) {
    if (start.grade() != 3) throw input_error("licci search requires a grade-3 ideal");
    LicciSearchResult result;
    Ideal current = start;
    for (int step = 0; step < max_steps; ++step) {
        if (is_complete_intersection(current)) {
            result.reached_ci = true;
            result.chain.terminal_is_ci = true;
            return result;
        }
        std::optional<CompleteIntersection> ci;
        if (policy == LicciPolicy::koszul_pair_first) {
            SyzygyAnalyzer an(current);
            auto pairs = an.minimal_koszul_pairs();
            // smallest degree sum, then generator list order
            std::optional<std::pair<int, int>> best;
            for (const auto& pr : pairs) {
                if (!best) { best = pr; continue; }
                const auto& g = an.minimal_generators();
                int sum = g[pr.first].degree() + g[pr.second].degree();
                int bsum = g[best->first].degree() + g[best->second].degree();
                if (sum < bsum) best = pr;
            }
            if (best) {
                const auto& g = an.minimal_generators();
                const Polynomial& fi = g[best->first];
                const Polynomial& fj = g[best->second];
                int socle_cap = betti_table(current).max_socle_shift();
                int lowest = current.minimal_generators().front().degree();
                int from = std::max(lowest, socle_cap + 1 - fi.degree() - fj.degree());
                int maxdeg = current.minimal_generators().back().degree();
                for (int d = from; d <= maxdeg + current.ring()->nvars() && !ci; ++d) {
                    for (int attempt = 0; attempt < 20 && !ci; ++attempt) {
                        try {
                            Polynomial h = random_element(current, d, rng);
                            ci.emplace(current.ring(),
                                       std::vector<Polynomial>{fi, fj, h});
                        } catch (const input_error&) {
                        }
                    }
                }
            }
        }
        if (!ci) ci.emplace(grade_jumps(current, rng).witness);
        if (equal(ci->ideal(), current)) {
            result.reached_ci = true;  // the ideal itself is the CI
            result.chain.terminal_is_ci = true;
            return result;
        }
        Ideal link = direct_link(*ci, current);
        ChainStep s{ci->type(), ci->generators(), link, betti_table(link),
                    lambda_count(link), grade_jump_values(link)};
        result.chain.steps.push_back(std::move(s));
        current = link;
    }
    if (is_complete_intersection(current)) {
        result.reached_ci = true;
    } else {
        result.inconclusive = true;
    }
    for (std::size_t k = 0; k + 1 < result.chain.steps.size(); ++k)
        if (!componentwise_geq(result.chain.steps[k].type, result.chain.steps[k + 1].type))
            result.chain.sequentially_bounded = false;
    result.chain.terminal_is_ci = result.reached_ci;
    return result;
}

// ---------------------------------------------------------------------------
// Ghost double links
// ---------------------------------------------------------------------------

struct GhostDoubleLink {
    CompleteIntersection first_ci;
    CompleteIntersection second_ci;
    Ideal middle;
    Ideal result;
};

/// Attempts a ghost double link of I with respect to `type`: both links use
/// the same type, the first CI must avoid the minimal Koszul relations
/// (d(I_1) = r(R/I)) and the minimal type of I_1 must equal `type`.
inline std::optional<GhostDoubleLink> try_ghost_double_link(const Ideal& ideal,
                                                            const CIType& type, Rng& rng) {
    CompleteIntersection c1 = construct_generic_ci(ideal, type, rng);
    Ideal i1 = direct_link(c1, ideal);
    if (i1.is_unit()) return std::nullopt;
    // d(I_1) = r(R/I): deviation needs only the minimal generator count
    long dev = static_cast<long>(i1.minimal_generators().size()) - i1.grade();
    if (dev != betti_table(ideal).cm_type()) return std::nullopt;
    if (grade_jump_values(i1) != type) return std::nullopt;
    CompleteIntersection c2 = construct_generic_ci(i1, type, rng);
    Ideal i2 = direct_link(c2, i1);
    if (i2.is_unit()) return std::nullopt;
    return GhostDoubleLink{c1, c2, i1, i2};
}

} // namespace liaison
