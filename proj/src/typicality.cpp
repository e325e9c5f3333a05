#include <kacmod/typicality.hpp>

#include <cmath>
#include <string>

namespace kacmod {

namespace {

constexpr double kIndicatorZero = 1e-12;

// Floors forming the maximal invariant subspace.
std::array<int, 2> invariant_floors(const Classification& c) {
    if (c.kind == Classification::Kind::class1) return {2, 3};
    if (c.kind == Classification::Kind::class2) return {1, 3};
    throw NotNontypicalError("typical module has no invariant subspace");
}

HighestWeight module_weight(const ModuleRep& rep) {
    if (rep.basis.empty())
        throw BasisMismatchError("module carries no pattern labels");
    return rep.basis.front().top;
}

} // namespace

const char* kind_name(Classification::Kind k) {
    switch (k) {
        case Classification::Kind::typical: return "typical";
        case Classification::Kind::class1:  return "class1";
        case Classification::Kind::class2:  return "class2";
    }
    return "?";
}

Classification classify(const HighestWeight& hw) {
    validate_highest_weight(hw);
    Classification c;
    c.c1 = hw.m13 + hw.m33 + 1.0;
    c.c2 = hw.m23 + hw.m33;
    const bool z1 = std::fabs(c.c1) < kIndicatorZero;
    const bool z2 = std::fabs(c.c2) < kIndicatorZero;
    c.kind = z1   ? Classification::Kind::class1
             : z2 ? Classification::Kind::class2
                  : Classification::Kind::typical;
    return c;
}

std::vector<std::size_t> invariant_indices(const HighestWeight& hw) {
    const auto floors = invariant_floors(classify(hw));
    std::vector<std::size_t> out;
    for (int k : floors)
        for (const GZVector& v : enumerate_basis(hw, k))
            out.push_back(basis_index(hw, k, v.m11));
    return out;
}

std::vector<GZVector> invariant_subspace(const QContext& ctx, const ModuleRep& rep) {
    const HighestWeight hw = module_weight(rep);
    const auto idx = invariant_indices(hw);
    std::vector<bool> inside(rep.dim(), false);
    for (std::size_t i : idx) inside[i] = true;

    for (const auto& [g, m] : rep.mats) {
        const double scale = max_abs(m);
        for (std::size_t c = 0; c < rep.dim(); ++c) {
            if (!inside[c]) continue;
            for (std::size_t r = 0; r < rep.dim(); ++r) {
                if (inside[r]) continue;
                if (std::fabs(m(r, c)) > ctx.tol * scale)
                    throw std::logic_error(
                        std::string("invariant_subspace: leakage under ") +
                        generator_name(g));
            }
        }
    }

    std::vector<GZVector> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(rep.basis[i]);
    return out;
}

ModuleRep factor_module(const QContext& ctx, const HighestWeight& hw,
                        const std::array<double, 3>& a) {
    const auto removed = invariant_indices(hw);
    ModuleRep full = build_module(ctx, hw, a);

    std::vector<bool> keep(full.dim(), true);
    for (std::size_t i : removed) keep[i] = false;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < full.dim(); ++i)
        if (keep[i]) kept.push_back(i);

    ModuleRep out;
    out.q = full.q;
    out.a = full.a;
    out.tol = full.tol;
    for (std::size_t i : kept) {
        out.basis.push_back(full.basis[i]);
        out.parity.push_back(full.parity[i]);
    }
    const std::size_t n = kept.size();
    for (const auto& [g, m] : full.mats) {
        Matrix<double> sub(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                sub(r, c) = m(kept[r], kept[c]);
        out.mats.emplace(g, std::move(sub));
    }
    return out;
}

bool irreducibility_oracle(const QContext& ctx, const ModuleRep& rep) {
    // The generated matrix algebra has full rank n^2 exactly when the action
    // is irreducible over the complex numbers, so we orthonormalize the
    // vectorized algebra words and compare the reached rank against n^2.
    const std::size_t n = rep.dim();
    if (n == 0) throw EmptyModuleError("irreducibility_oracle: empty module");
    const std::size_t full_rank = n * n;
    const double threshold = std::sqrt(ctx.tol);

    std::vector<Matrix<double>> ortho; // orthonormal spanning set
    std::vector<Matrix<double>> queue;
    queue.push_back(Matrix<double>::identity(n));
    for (const auto& [g, m] : rep.mats) queue.push_back(m);

    const auto dot = [n](const Matrix<double>& x, const Matrix<double>& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < n * n; ++i) s += x.data()[i] * y.data()[i];
        return s;
    };

    while (!queue.empty() && ortho.size() < full_rank) {
        Matrix<double> m = std::move(queue.back());
        queue.pop_back();
        const double norm0 = std::sqrt(dot(m, m));
        if (norm0 == 0.0) continue;
        for (const auto& b : ortho) {
            const double proj = dot(m, b);
            m = m - proj * b;
        }
        const double norm1 = std::sqrt(dot(m, m));
        if (norm1 <= threshold * norm0) continue;
        m = (1.0 / norm1) * m;
        // A new independent word extends the search by one more letter.
        for (const auto& [g, gm] : rep.mats) queue.push_back(gm * m);
        ortho.push_back(std::move(m));
    }
    return ortho.size() == full_rank;
}

double closed_form_deviation(const QContext& ctx, const HighestWeight& hw,
                             const std::array<double, 3>& a) {
    const Classification cls = classify(hw);
    const ModuleRep factor = factor_module(ctx, hw, a);
    const std::size_t n = factor.dim();

    Matrix<double> e23(n, n), e32(n, n);
    const auto index_of = [&](int k, double m11) {
        for (std::size_t i = 0; i < n; ++i)
            if (factor.basis[i].k == k && factor.basis[i].m11 == m11) return i;
        throw RangeError("closed_form_deviation: vector not in factor basis");
    };

    for (std::size_t c = 0; c < n; ++c) {
        const GZVector& v = factor.basis[c];
        const LValues l = lvalues(v);
        if (cls.kind == Classification::Kind::class1) {
            // Surviving floors 0 and 1; the scalar factor on the odd raising
            // step reduces to a bracket of l23 - l13 once c1 vanishes.
            if (v.k == 1) {
                const double coeff = a[0] * qbracket_sqrt(ctx, l.l11 - l.l23) /
                                     qbracket_sqrt(ctx, 2.0 * l.l + 1) *
                                     qbracket(ctx, l.l23 - l.l13);
                if (coeff != 0.0) e23(index_of(0, v.m11), c) = coeff;
            } else {
                const double coeff =
                    (1.0 / a[0]) * qbracket_sqrt(ctx, l.l11 - l.l23) /
                    qbracket_sqrt(ctx, 2.0 * l.l + 1);
                if (coeff != 0.0) e32(index_of(1, v.m11), c) = coeff;
            }
        } else if (cls.kind == Classification::Kind::class2) {
            // Surviving floors 0 and 2; the scalar factor on the odd raising
            // step reduces to the bracket of 2l + 1 once c2 vanishes.
            if (v.k == 2) {
                const double coeff = a[1] *
                                     std::sqrt(qbracket(ctx, l.l13 - l.l11) /
                                               qbracket(ctx, 2.0 * l.l)) *
                                     qbracket(ctx, 2.0 * l.l + 1);
                if (coeff != 0.0) e23(index_of(0, v.m11), c) = coeff;
            } else {
                const double coeff = (1.0 / a[1]) * qbracket_sqrt(ctx, l.l13 - l.l11) *
                                     qbracket_sqrt(ctx, 2.0 * l.l) /
                                     qbracket(ctx, 2.0 * l.l + 1);
                if (coeff != 0.0) e32(index_of(2, v.m11), c) = coeff;
            }
        } else {
            throw NotNontypicalError("closed_form_deviation: typical weight");
        }
    }

    return std::max(max_abs(factor.at(Gen::E23) - e23),
                    max_abs(factor.at(Gen::E32) - e32));
}

} // namespace kacmod
