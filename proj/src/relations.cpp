#include <kacmod/relations.hpp>

#include <kacmod/typicality.hpp>

#include <cmath>
#include <cstdio>
#include <thread>

namespace kacmod {

namespace {

Matrix<double> commutator(const Matrix<double>& a, const Matrix<double>& b) {
    return a * b - b * a;
}

Matrix<double> anticommutator(const Matrix<double>& a, const Matrix<double>& b) {
    return a * b + b * a;
}

class Checker {
public:
    Checker(const QContext& ctx, const std::string& context)
        : ctx_(ctx), context_(context) {}

    /// Accumulates |lhs - rhs| and operand scales under one relation id;
    /// repeated ids merge into a single report.
    void check(const std::string& id, const Matrix<double>& lhs,
               const Matrix<double>& rhs,
               std::initializer_list<const Matrix<double>*> operands) {
        RelationReport& r = fetch(id);
        r.max_residual = std::max(r.max_residual, max_abs(lhs - rhs));
        for (const Matrix<double>* m : operands)
            r.scale = std::max(r.scale, max_abs(*m));
        r.scale = std::max(r.scale, max_abs(rhs));
    }

    void record(const std::string& id, double residual, double scale) {
        RelationReport& r = fetch(id);
        r.max_residual = std::max(r.max_residual, residual);
        r.scale = std::max(r.scale, scale);
    }

    std::vector<RelationReport> finish() {
        for (RelationReport& r : reports_)
            r.passed = r.max_residual <= ctx_.tol * r.scale;
        return std::move(reports_);
    }

private:
    RelationReport& fetch(const std::string& id) {
        for (RelationReport& r : reports_)
            if (r.relation_id == id) return r;
        reports_.push_back({id, 0.0, 0.0, true, context_});
        return reports_.back();
    }

    const QContext& ctx_;
    std::string context_;
    std::vector<RelationReport> reports_;
};

std::string format_context(const HighestWeight& hw, double q,
                           const std::array<double, 3>& a) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "hw=[%g,%g,%g] q=%g a=[%g,%g,%g]",
                  hw.m13, hw.m23, hw.m33, q, a[0], a[1], a[2]);
    return buf;
}

// Eigenvalue shift of generator g under commutation with the k-th Cartan
// generator (1-based k).
double weight_shift(int k, Gen g) {
    const auto [i, j] = generator_indices(g);
    return (k == i ? 1.0 : 0.0) - (k == j ? 1.0 : 0.0);
}

} // namespace

std::vector<RelationReport> check_all(const QContext& ctx, const ModuleRep& rep,
                                      const std::string& context) {
    const std::size_t n = rep.dim();
    if (rep.parity.size() != n)
        throw BasisMismatchError("check_all: parity vector size mismatch");
    Checker ck(ctx, context);

    const Matrix<double>& e11 = rep.at(Gen::E11);
    const Matrix<double>& e22 = rep.at(Gen::E22);
    const Matrix<double>& e33 = rep.at(Gen::E33);
    const Matrix<double>& e12 = rep.at(Gen::E12);
    const Matrix<double>& e21 = rep.at(Gen::E21);
    const Matrix<double>& e23 = rep.at(Gen::E23);
    const Matrix<double>& e32 = rep.at(Gen::E32);
    const Matrix<double>& e13 = rep.at(Gen::E13);
    const Matrix<double>& e31 = rep.at(Gen::E31);
    const Matrix<double>& h1 = rep.at(Gen::H1);
    const Matrix<double>& h2 = rep.at(Gen::H2);

    const Matrix<double> zero(n, n);
    const std::array<const Matrix<double>*, 3> cartans = {&e11, &e22, &e33};

    // Cartan generators commute.
    ck.check("cartan_cartan", commutator(e11, e22), zero, {&e11, &e22});
    ck.check("cartan_cartan", commutator(e11, e33), zero, {&e11, &e33});
    ck.check("cartan_cartan", commutator(e22, e33), zero, {&e22, &e33});

    // Cartan brackets shift raising/lowering generators by their weight.
    for (int k = 1; k <= 3; ++k) {
        const Matrix<double>& ekk = *cartans[k - 1];
        for (Gen g : {Gen::E12, Gen::E23}) {
            const Matrix<double>& m = rep.at(g);
            ck.check("cartan_raising", commutator(ekk, m), weight_shift(k, g) * m,
                     {&ekk, &m});
        }
        for (Gen g : {Gen::E21, Gen::E32}) {
            const Matrix<double>& m = rep.at(g);
            ck.check("cartan_lowering", commutator(ekk, m), weight_shift(k, g) * m,
                     {&ekk, &m});
        }
        for (Gen g : {Gen::E13, Gen::E31}) {
            const Matrix<double>& m = rep.at(g);
            ck.check("weight_additivity", commutator(ekk, m), weight_shift(k, g) * m,
                     {&ekk, &m});
        }
    }

    // Mixed simple pairs commute.
    ck.check("mixed_zero", commutator(e12, e32), zero, {&e12, &e32});
    ck.check("mixed_zero", commutator(e21, e23), zero, {&e21, &e23});

    // The even pair closes on the bracket of H1, the odd pair on H2.
    Matrix<double> bh1(n, n), bh2(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        bh1(i, i) = qbracket(ctx, h1(i, i));
        bh2(i, i) = qbracket(ctx, h2(i, i));
    }
    ck.check("sl2_pair", commutator(e12, e21), bh1, {&e12, &e21});
    ck.check("odd_pair", anticommutator(e23, e32), bh2, {&e23, &e32});

    // Odd generators square to zero, as do the composites.
    ck.check("odd_squares", e23 * e23, zero, {&e23});
    ck.check("odd_squares", e32 * e32, zero, {&e32});
    ck.check("composite_squares", e13 * e13, zero, {&e13});
    ck.check("composite_squares", e31 * e31, zero, {&e31});

    // q-Serre identities between a simple generator and its composite.
    ck.check("serre_raising", e12 * e13 - ctx.q * (e13 * e12), zero, {&e12, &e13});
    ck.check("serre_lowering", e21 * e31 - ctx.q * (e31 * e21), zero, {&e21, &e31});

    // Even generators preserve parity blocks, odd generators flip them.
    for (const auto& [g, m] : rep.mats) {
        const bool odd = is_odd_generator(g);
        double worst = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const bool flips = rep.parity[r] != rep.parity[c];
                if (flips != odd) worst = std::max(worst, std::fabs(m(r, c)));
            }
        ck.record("parity_blocks", worst, max_abs(m));
    }

    return ck.finish();
}

ModuleRep tensor_representation(const QContext& ctx, const ModuleRep& left,
                                const ModuleRep& right) {
    const std::size_t nl = left.dim(), nr = right.dim();
    if (nl == 0 || nr == 0)
        throw EmptyModuleError("tensor_representation: empty factor");

    const auto diag_of = [&](const ModuleRep& rep, Gen g) {
        auto it = rep.mats.find(g);
        if (it == rep.mats.end())
            throw MissingCartanError(std::string("tensor_representation: missing ") +
                                     generator_name(g));
        const Matrix<double>& m = it->second;
        std::vector<double> d(rep.dim());
        for (std::size_t r = 0; r < rep.dim(); ++r) {
            for (std::size_t c = 0; c < rep.dim(); ++c)
                if (r != c && m(r, c) != 0.0)
                    throw MissingCartanError(
                        std::string("tensor_representation: non-diagonal ") +
                        generator_name(g));
            d[r] = m(r, r);
        }
        return d;
    };
    const auto simple_of = [&](const ModuleRep& rep, Gen g) -> const Matrix<double>& {
        auto it = rep.mats.find(g);
        if (it == rep.mats.end())
            throw BasisMismatchError(std::string("tensor_representation: missing ") +
                                     generator_name(g));
        return it->second;
    };

    // Graded Kronecker product: applying A (x) B to u (x) v moves B past u,
    // so an odd B picks up the parity sign of the source left-factor vector.
    const auto kron = [&](const Matrix<double>& A, const Matrix<double>& B,
                          bool odd_B) {
        Matrix<double> out(nl * nr, nl * nr);
        for (std::size_t ip = 0; ip < nl; ++ip)
            for (std::size_t i = 0; i < nl; ++i) {
                const double av = A(ip, i);
                if (av == 0.0) continue;
                const double sign = (odd_B && left.parity[i] == 1) ? -1.0 : 1.0;
                for (std::size_t jp = 0; jp < nr; ++jp)
                    for (std::size_t j = 0; j < nr; ++j)
                        out(ip * nr + jp, i * nr + j) = sign * av * B(jp, j);
            }
        return out;
    };
    const auto qdiag = [&](const std::vector<double>& h, double factor) {
        Matrix<double> out(h.size(), h.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            out(i, i) = qpow(ctx, factor * h[i]);
        return out;
    };

    ModuleRep out;
    out.q = ctx.q;
    out.tol = ctx.tol;
    out.parity.resize(nl * nr);
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t j = 0; j < nr; ++j)
            out.parity[i * nr + j] = (left.parity[i] + right.parity[j]) % 2;

    for (Gen g : {Gen::E11, Gen::E22, Gen::E33}) {
        const auto dl = diag_of(left, g), dr = diag_of(right, g);
        Matrix<double> m(nl * nr, nl * nr);
        for (std::size_t i = 0; i < nl; ++i)
            for (std::size_t j = 0; j < nr; ++j)
                m(i * nr + j, i * nr + j) = dl[i] + dr[j];
        out.mats.emplace(g, std::move(m));
    }

    const auto combine = [](const std::vector<double>& x, const std::vector<double>& y,
                            double sy) {
        std::vector<double> out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + sy * y[i];
        return out;
    };
    const auto h1l = combine(diag_of(left, Gen::E11), diag_of(left, Gen::E22), -1.0);
    const auto h1r = combine(diag_of(right, Gen::E11), diag_of(right, Gen::E22), -1.0);
    const auto h2l = combine(diag_of(left, Gen::E22), diag_of(left, Gen::E33), 1.0);
    const auto h2r = combine(diag_of(right, Gen::E22), diag_of(right, Gen::E33), 1.0);

    {
        Matrix<double> m1(nl * nr, nl * nr), m2(nl * nr, nl * nr);
        for (std::size_t i = 0; i < nl; ++i)
            for (std::size_t j = 0; j < nr; ++j) {
                m1(i * nr + j, i * nr + j) = h1l[i] + h1r[j];
                m2(i * nr + j, i * nr + j) = h2l[i] + h2r[j];
            }
        out.mats.emplace(Gen::H1, std::move(m1));
        out.mats.emplace(Gen::H2, std::move(m2));
    }

    const auto coproduct = [&](Gen g, const std::vector<double>& hl,
                               const std::vector<double>& hr, bool odd) {
        const Matrix<double>& gl = simple_of(left, g);
        const Matrix<double>& gr = simple_of(right, g);
        return kron(gl, qdiag(hr, 0.5), false) + kron(qdiag(hl, -0.5), gr, odd);
    };
    out.mats.emplace(Gen::E12, coproduct(Gen::E12, h1l, h1r, false));
    out.mats.emplace(Gen::E21, coproduct(Gen::E21, h1l, h1r, false));
    out.mats.emplace(Gen::E23, coproduct(Gen::E23, h2l, h2r, true));
    out.mats.emplace(Gen::E32, coproduct(Gen::E32, h2l, h2r, true));

    out.mats.emplace(Gen::E13, composite_odd(ctx, Gen::E13, out.mats));
    out.mats.emplace(Gen::E31, composite_odd(ctx, Gen::E31, out.mats));
    return out;
}

SweepConfig default_sweep_config() {
    SweepConfig cfg;
    for (int d13 = 0; d13 <= 4; ++d13) {
        const double m13 = d13;
        for (double m33 : {-m13 - 1.0, 0.0, 0.37, 1.0, -2.5}) {
            bool seen = false;
            for (const HighestWeight& hw : cfg.weights)
                seen = seen || (hw.m13 == m13 && hw.m33 == m33);
            if (!seen) cfg.weights.push_back({m13, 0.0, m33});
        }
    }
    cfg.qs = {1.1, 1.7, 2.3};
    cfg.avecs = {{1.0, 1.0, 1.0}, {2.0, 1.0, 0.5}, {1.0, -1.0, 3.0}};
    return cfg;
}

std::vector<RelationReport> sweep(const SweepConfig& config) {
    struct Cell {
        HighestWeight hw;
        double q;
        std::array<double, 3> a;
    };
    std::vector<Cell> cells;
    for (const HighestWeight& hw : config.weights)
        for (double q : config.qs)
            for (const auto& a : config.avecs)
                cells.push_back({hw, q, a});

    std::vector<std::vector<RelationReport>> results(cells.size());
    const auto run_cell = [&](std::size_t i) {
        const Cell& cell = cells[i];
        const QContext ctx(cell.q, config.tol);
        const ModuleRep rep = build_module(ctx, cell.hw, cell.a);
        const std::string where = format_context(cell.hw, cell.q, cell.a);
        results[i] = check_all(ctx, rep, where);
        if (config.classify_consistency &&
            gl2_width(cell.hw) <= config.oracle_max_width) {
            const bool typical =
                classify(cell.hw).kind == Classification::Kind::typical;
            const bool irreducible = irreducibility_oracle(ctx, rep);
            RelationReport r{"classify_oracle", typical == irreducible ? 0.0 : 1.0,
                             1.0, typical == irreducible, where};
            results[i].push_back(r);
        }
    };

    unsigned threads = config.threads ? config.threads
                                      : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, cells.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < cells.size(); i += threads) run_cell(i);
            });
        for (std::thread& th : pool) th.join();
    }

    std::vector<RelationReport> out;
    for (auto& cell_reports : results)
        out.insert(out.end(), cell_reports.begin(), cell_reports.end());
    return out;
}

} // namespace kacmod
