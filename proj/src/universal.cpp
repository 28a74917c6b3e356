#include "qnil/universal.hpp"

#include <algorithm>

namespace qnil {

namespace {

int tuple_count(int dim, int n, std::size_t cap, const char* who) {
    std::size_t c = 1;
    for (int i = 0; i < n; ++i) {
        c *= static_cast<std::size_t>(dim);
        if (c > cap)
            throw cap_exceeded(std::string(who) + ": level dimension exceeds cap (" +
                               std::to_string(cap) + ")");
    }
    return static_cast<int>(c);
}

int flat_index(const std::vector<int>& t, int dim) {
    int idx = 0;
    for (int x : t) idx = idx * dim + x;
    return idx;
}

bool next_tuple(std::vector<int>& t, int dim) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < dim) return true;
        t[i] = 0;
    }
    return false;
}

std::vector<Scalar> column_of(const ExactMatrix& m, int j) {
    std::vector<Scalar> v(m.rows(), m.field()->zero());
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

} // namespace

ExactMatrix tau_vector(const AlgebraSpec& a, const ScalarField* field) {
    const int da = a.dim;
    ExactMatrix tau(field, da * da, 1);
    for (int s = 0; s < da; ++s)
        for (int t = 0; t < da; ++t) {
            const mpq_class c = a.unit[s] * a.unit[t];
            if (c != 0) tau(s * da + t, 0) = field->from_rational(c);
        }
    return tau;
}

QDGA tensor_qdga(const AlgebraSpec& a, const Scalar& q, int n_max, std::size_t cap) {
    a.validate();
    const ScalarField* field = q.field();
    const int da = a.dim;

    std::vector<int> dims(n_max + 1);
    for (int n = 0; n <= n_max; ++n) dims[n] = tuple_count(da, n + 1, cap, "tensor_qdga");

    // insert 1l before slot k with weight q^k, minus q^n for the append
    std::vector<ExactMatrix> d;
    for (int n = 0; n < n_max; ++n) {
        ExactMatrix m(field, dims[n + 1], dims[n]);
        std::vector<int> x(n + 1, 0);
        do {
            const int xf = flat_index(x, da);
            for (int k = 0; k <= n + 1; ++k) {
                const Scalar w = (k <= n) ? q.pow(k) : -q.pow(n);
                std::vector<int> ins(x.begin(), x.end());
                ins.insert(ins.begin() + k, 0);
                for (int t = 0; t < da; ++t) {
                    if (a.unit[t] == 0) continue;
                    ins[k] = t;
                    const int rf = flat_index(ins, da);
                    m(rf, xf) = m(rf, xf) + w * field->from_rational(a.unit[t]);
                }
            }
        } while (next_tuple(x, da));
        d.push_back(std::move(m));
    }
    // Nilpotency order: the field's N when q is a root of unity; d^N = 0
    // has no N that makes it hold for other q, so 2 is carried as the
    // conventional order there.
    const int N = field->mode() == FieldMode::Cyclotomic ? field->order() : 2;
    NComplex complex = NComplex::z_graded(field, N, 0, dims, d);

    // product: (..., x_u) (y_0, ...) -> ... (x_u y_0) ...
    std::map<std::pair<int, int>, ExactMatrix> products;
    for (int u = 0; u <= n_max; ++u)
        for (int v = 0; u + v <= n_max; ++v) {
            const int du = dims[u], dv = dims[v];
            ExactMatrix p(field, dims[u + v], du * dv);
            for (int iu = 0; iu < du; ++iu) {
                const int head = iu / da;      // first u slots of the left factor
                const int last = iu % da;      // its final slot
                for (int iv = 0; iv < dv; ++iv) {
                    const int first = iv / (dv / da); // leading slot of the right factor
                    const int tail = iv % (dv / da);
                    for (int t = 0; t < da; ++t) {
                        const mpq_class& coef = a.c(last, first, t);
                        if (coef == 0) continue;
                        const int row = (head * da + t) * (dv / da) + tail;
                        p(row, iu * dv + iv) =
                            p(row, iu * dv + iv) + field->from_rational(coef);
                    }
                }
            }
            products.emplace(std::make_pair(u, v), std::move(p));
        }

    ExactMatrix unit(field, da, 1);
    for (int i = 0; i < da; ++i) unit(i, 0) = field->from_rational(a.unit[i]);

    return QDGA(std::move(complex), q, std::move(unit), std::move(products), false);
}

// ---- envelope ----

EnvelopeSubspace universal_envelope(const AlgebraSpec& a, const Scalar& q, int n_max,
                                    std::size_t cap) {
    const QDGA tensor = tensor_qdga(a, q, n_max, cap);
    const NComplex& c = tensor.complex();
    const ScalarField* field = c.field();

    std::vector<RankTracker> span;
    for (int n = 0; n <= n_max; ++n) span.emplace_back(field, c.dim(n));
    // degree 0: all of A
    for (int i = 0; i < c.dim(0); ++i)
        span[0].add_column(ExactMatrix::identity(field, c.dim(0)), i);

    // Keep an explicit generating set per degree; spans grow monotonically.
    std::vector<std::vector<ExactMatrix>> gens(n_max + 1);
    for (int i = 0; i < c.dim(0); ++i)
        gens[0].push_back(ExactMatrix::identity(field, c.dim(0)).column(i));

    std::vector<std::size_t> d_done(n_max + 1, 0);
    std::map<std::pair<int, int>, std::pair<std::size_t, std::size_t>> pair_done;
    bool changed = true;
    while (changed) {
        changed = false;
        // d_q images move one degree up
        for (int n = 0; n < n_max; ++n) {
            const ExactMatrix dmat = c.d_matrix(n);
            for (std::size_t g = d_done[n]; g < gens[n].size(); ++g) {
                const ExactMatrix img = dmat * gens[n][g];
                if (span[n + 1].add(column_of(img, 0))) {
                    gens[n + 1].push_back(img);
                    changed = true;
                }
            }
            d_done[n] = gens[n].size();
        }
        // products of tracked generators; only pairs not yet seen
        for (int u = 0; u <= n_max; ++u)
            for (int v = 0; u + v <= n_max; ++v) {
                if (u == 0 && v == 0) continue;
                auto& done = pair_done[{u, v}];
                const std::size_t cu = gens[u].size(), cv = gens[v].size();
                for (std::size_t i = 0; i < cu; ++i)
                    for (std::size_t j = 0; j < cv; ++j) {
                        if (i < done.first && j < done.second) continue;
                        const ExactMatrix prod = tensor.multiply(u, gens[u][i], v, gens[v][j]);
                        if (span[u + v].add(column_of(prod, 0))) {
                            gens[u + v].push_back(prod);
                            changed = true;
                        }
                    }
                done = {cu, cv};
            }
    }

    EnvelopeSubspace env;
    for (int n = 0; n <= n_max; ++n) {
        ExactMatrix m(field, c.dim(n), static_cast<int>(gens[n].size()));
        for (std::size_t g = 0; g < gens[n].size(); ++g)
            for (int i = 0; i < c.dim(n); ++i) m(i, static_cast<int>(g)) = gens[n][g](i, 0);
        env.levels.push_back(image_basis(m));
    }
    return env;
}

namespace {

// coordinates of ambient columns in an envelope level basis
ExactMatrix restrict_to(const SubspaceBasis& level, const ExactMatrix& ambient_cols,
                        const char* who) {
    auto sol = solve_in_span(level.vectors, ambient_cols);
    if (!sol) throw error(std::string(who) + ": vector escapes the subspace");
    return *sol;
}

} // namespace

QDGA envelope_qdga(const QDGA& tensor, const EnvelopeSubspace& env) {
    const NComplex& c = tensor.complex();
    const ScalarField* field = c.field();
    const int top = env.top();

    std::vector<int> dims(top + 1);
    for (int n = 0; n <= top; ++n) dims[n] = env.dim(n);
    std::vector<ExactMatrix> d;
    for (int n = 0; n < top; ++n)
        d.push_back(restrict_to(env.levels[n + 1], c.d_matrix(n) * env.levels[n].vectors,
                                "envelope_qdga(d)"));

    std::map<std::pair<int, int>, ExactMatrix> products;
    for (int u = 0; u <= top; ++u)
        for (int v = 0; u + v <= top; ++v) {
            ExactMatrix prods(field, c.dim(u + v), dims[u] * dims[v]);
            for (int i = 0; i < dims[u]; ++i)
                for (int j = 0; j < dims[v]; ++j) {
                    const ExactMatrix p = tensor.multiply(u, env.levels[u].vectors.column(i), v,
                                                          env.levels[v].vectors.column(j));
                    for (int r = 0; r < p.rows(); ++r) prods(r, i * dims[v] + j) = p(r, 0);
                }
            products.emplace(std::make_pair(u, v),
                             restrict_to(env.levels[u + v], prods, "envelope_qdga(product)"));
        }

    const ExactMatrix unit = restrict_to(env.levels[0], tensor.unit(), "envelope_qdga(unit)");
    NComplex complex =
        NComplex::z_graded(field, c.nilpotency_order(), 0, std::move(dims), std::move(d));
    return QDGA(std::move(complex), tensor.q(), unit, std::move(products), false);
}

long classical_envelope_dim(int dim_a, int n) {
    long out = dim_a;
    for (int i = 0; i < n; ++i) out *= dim_a - 1;
    return out;
}

// ---- the universal property ----

InducedHom induced_homomorphism(const AlgebraSpec& a, const ExactMatrix& phi,
                                const QDGA& target, const QDGA& tensor,
                                const EnvelopeSubspace& env) {
    const NComplex& tc = tensor.complex();
    const NComplex& gc = target.complex();
    const ScalarField* field = tc.field();
    const int top = env.top();
    if (gc.grading() != Grading::ZGraded || gc.hi() < top)
        throw invalid_input("induced_homomorphism: target window too small");
    if (phi.cols() != a.dim || phi.rows() != gc.dim(0))
        throw invalid_input("induced_homomorphism: phi has the wrong shape");

    // phi must be a unital algebra homomorphism into degree 0
    {
        ExactMatrix unit_a(field, a.dim, 1);
        for (int i = 0; i < a.dim; ++i) unit_a(i, 0) = field->from_rational(a.unit[i]);
        if (phi * unit_a != target.unit())
            throw invalid_input("induced_homomorphism: phi does not preserve the unit");
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                ExactMatrix prod_a(field, a.dim, 1);
                for (int k = 0; k < a.dim; ++k)
                    prod_a(k, 0) = field->from_rational(a.c(i, j, k));
                const ExactMatrix lhs = phi * prod_a;
                const ExactMatrix rhs =
                    target.multiply(0, phi.column(i), 0, phi.column(j));
                if (lhs != rhs)
                    throw invalid_input(
                        "induced_homomorphism: phi is not multiplicative at pair (" +
                        std::to_string(i) + ", " + std::to_string(j) + ")");
            }
    }

    // Track generating expressions as (vector in T^n, image in target^n)
    // pairs; every dependent candidate must map consistently.
    struct Layer {
        RankTracker span;
        std::vector<ExactMatrix> vecs, imgs;
        Layer(const ScalarField* f, int ambient) : span(f, ambient) {}
    };
    std::vector<Layer> layers;
    for (int n = 0; n <= top; ++n) layers.emplace_back(field, tc.dim(n));

    auto push = [&](int n, const ExactMatrix& v, const ExactMatrix& w) {
        Layer& L = layers[n];
        if (L.span.add(column_of(v, 0))) {
            L.vecs.push_back(v);
            L.imgs.push_back(w);
            return true;
        }
        // dependent: solve for the combination and compare images
        ExactMatrix vmat(field, tc.dim(n), static_cast<int>(L.vecs.size()));
        ExactMatrix wmat(field, gc.dim(n), static_cast<int>(L.vecs.size()));
        for (std::size_t c2 = 0; c2 < L.vecs.size(); ++c2)
            for (int i = 0; i < tc.dim(n); ++i) vmat(i, static_cast<int>(c2)) = L.vecs[c2](i, 0);
        for (std::size_t c2 = 0; c2 < L.imgs.size(); ++c2)
            for (int i = 0; i < gc.dim(n); ++i) wmat(i, static_cast<int>(c2)) = L.imgs[c2](i, 0);
        auto sol = solve_in_span(vmat, v);
        if (!sol) throw error("induced_homomorphism: span bookkeeping failure");
        if (wmat * *sol != w)
            throw not_well_defined(
                "induced_homomorphism: a linear relation among generating expressions "
                "does not map to zero at degree " + std::to_string(n));
        return false;
    };

    for (int i = 0; i < a.dim; ++i)
        push(0, ExactMatrix::identity(field, a.dim).column(i), phi.column(i));

    std::vector<std::size_t> d_done(top + 1, 0);
    std::map<std::pair<int, int>, std::pair<std::size_t, std::size_t>> pair_done;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int n = 0; n < top; ++n) {
            const std::size_t count = layers[n].vecs.size();
            for (std::size_t g = d_done[n]; g < count; ++g) {
                const ExactMatrix v = tc.d_matrix(n) * layers[n].vecs[g];
                const ExactMatrix w = gc.d_matrix(n) * layers[n].imgs[g];
                if (push(n + 1, v, w)) changed = true;
            }
            d_done[n] = count;
        }
        for (int u = 0; u <= top; ++u)
            for (int v = 0; u + v <= top; ++v) {
                if (u == 0 && v == 0) continue;
                auto& done = pair_done[{u, v}];
                const std::size_t cu = layers[u].vecs.size(), cv = layers[v].vecs.size();
                for (std::size_t i = 0; i < cu; ++i)
                    for (std::size_t j = 0; j < cv; ++j) {
                        if (i < done.first && j < done.second) continue;
                        const ExactMatrix pv =
                            tensor.multiply(u, layers[u].vecs[i], v, layers[v].vecs[j]);
                        const ExactMatrix pw =
                            target.multiply(u, layers[u].imgs[i], v, layers[v].imgs[j]);
                        if (push(u + v, pv, pw)) changed = true;
                    }
                done = {cu, cv};
            }
    }

    InducedHom out;
    for (int n = 0; n <= top; ++n) {
        Layer& L = layers[n];
        if (L.span.rank() != env.dim(n))
            throw error("induced_homomorphism: generated span disagrees with the envelope");
        ExactMatrix vmat(field, tc.dim(n), static_cast<int>(L.vecs.size()));
        ExactMatrix wmat(field, gc.dim(n), static_cast<int>(L.vecs.size()));
        for (std::size_t c2 = 0; c2 < L.vecs.size(); ++c2) {
            for (int i = 0; i < tc.dim(n); ++i) vmat(i, static_cast<int>(c2)) = L.vecs[c2](i, 0);
            for (int i = 0; i < gc.dim(n); ++i) wmat(i, static_cast<int>(c2)) = L.imgs[c2](i, 0);
        }
        auto coords = solve_in_span(vmat, env.levels[n].vectors);
        if (!coords) throw error("induced_homomorphism: envelope basis escapes generated span");
        out.maps.push_back(wmat * *coords);
    }

    // verify intertwining on the envelope bases
    out.intertwines_d = true;
    for (int n = 0; n < top; ++n) {
        const ExactMatrix lhs = out.maps[n + 1] * restrict_to(env.levels[n + 1],
                                                              tc.d_matrix(n) *
                                                                  env.levels[n].vectors,
                                                              "induced_homomorphism");
        const ExactMatrix rhs = gc.d_matrix(n) * out.maps[n];
        if (lhs != rhs) out.intertwines_d = false;
    }
    out.intertwines_product = true;
    for (int u = 0; u <= top && out.intertwines_product; ++u)
        for (int v = 0; u + v <= top && out.intertwines_product; ++v)
            for (int i = 0; i < env.dim(u) && out.intertwines_product; ++i)
                for (int j = 0; j < env.dim(v); ++j) {
                    const ExactMatrix xy = tensor.multiply(
                        u, env.levels[u].vectors.column(i), v, env.levels[v].vectors.column(j));
                    const ExactMatrix lhs = out.maps[u + v] *
                                            restrict_to(env.levels[u + v], xy,
                                                        "induced_homomorphism");
                    const ExactMatrix rhs =
                        target.multiply(u, out.maps[u] * restrict_to(env.levels[u],
                                                                     env.levels[u].vectors
                                                                         .column(i),
                                                                     "induced_homomorphism"),
                                        v, out.maps[v] * restrict_to(env.levels[v],
                                                                     env.levels[v].vectors
                                                                         .column(j),
                                                                     "induced_homomorphism"));
                    if (lhs != rhs) {
                        out.intertwines_product = false;
                        break;
                    }
                }
    return out;
}

// ---- extended acyclic complex ----

std::vector<mpq_class> default_omega(const AlgebraSpec& a) {
    for (int i = 0; i < a.dim; ++i)
        if (a.unit[i] != 0) {
            std::vector<mpq_class> omega(a.dim, mpq_class(0));
            omega[i] = 1 / a.unit[i];
            return omega;
        }
    throw invalid_input("default_omega: unit vector is zero");
}

ExtendedComplex extended_complex(const AlgebraSpec& a, const Scalar& q,
                                 const std::vector<mpq_class>& omega, int n_max,
                                 bool restrict_to_envelope, std::size_t cap) {
    const ScalarField* field = q.field();
    if (field->mode() != FieldMode::Cyclotomic)
        throw invalid_input("extended_complex: requires a cyclotomic q");
    const int N = field->order();
    if (omega.size() != static_cast<std::size_t>(a.dim))
        throw invalid_input("extended_complex: omega has the wrong length");
    {
        mpq_class at_unit = 0;
        for (int i = 0; i < a.dim; ++i) at_unit += omega[i] * a.unit[i];
        if (at_unit != 1) throw invalid_input("extended_complex: omega(1l) must be 1");
    }

    const QDGA tensor = tensor_qdga(a, q, n_max, cap);
    const NComplex& tc = tensor.complex();

    EnvelopeSubspace env;
    if (restrict_to_envelope) env = universal_envelope(a, q, n_max, cap);
    auto pos_dim = [&](int n) { return restrict_to_envelope ? env.dim(n) : tc.dim(n); };
    auto to_pos = [&](int n, const ExactMatrix& ambient_cols) {
        if (!restrict_to_envelope) return ambient_cols;
        return restrict_to(env.levels[n], ambient_cols, "extended_complex");
    };
    auto pos_basis = [&](int n) {
        if (!restrict_to_envelope) return ExactMatrix::identity(field, tc.dim(n));
        return env.levels[n].vectors;
    };

    const int lo = -(N - 1);
    std::vector<int> dims;
    for (int n = lo; n < 0; ++n) dims.push_back(1);
    for (int n = 0; n <= n_max; ++n) dims.push_back(pos_dim(n));

    std::vector<ExactMatrix> d;
    for (int n = lo; n <= -2; ++n) { // e_{-k} -> e_{-(k-1)}
        ExactMatrix m(field, 1, 1);
        m(0, 0) = field->one();
        d.push_back(std::move(m));
    }
    { // e_{-1} -> 1l
        ExactMatrix m(field, pos_dim(0), 1);
        const ExactMatrix unit = to_pos(0, tensor.unit());
        for (int i = 0; i < m.rows(); ++i) m(i, 0) = unit(i, 0);
        d.push_back(std::move(m));
    }
    for (int n = 0; n < n_max; ++n)
        d.push_back(to_pos(n + 1, tc.d_matrix(n) * pos_basis(n)));

    NComplex complex = NComplex::z_graded(field, N, lo, std::move(dims), std::move(d));

    // h: the degree -1 contracting endomorphism
    std::map<int, ExactMatrix> h;
    for (int k = 1; k <= N - 2; ++k) {
        // h(e_{-k}) = -q^{-(k+1)} [k+1]_q e_{-(k+1)}
        ExactMatrix m(field, 1, 1);
        m(0, 0) = -(q.pow(-(k + 1)) * q_integer(k + 1, q));
        h.emplace(-k, std::move(m));
    }
    { // h on degree 0: x -> -q^{-1} omega(x) e_{-1}
        ExactMatrix ambient(field, 1, tc.dim(0));
        for (int i = 0; i < a.dim; ++i)
            ambient(0, i) = -(q.pow(-1) * field->from_rational(omega[i]));
        h.emplace(0, ambient * pos_basis(0));
    }
    for (int n = 1; n <= n_max; ++n) {
        // h(x_0 (x) ... (x) x_n) = omega(x_0) x_1 (x) ... (x) x_n
        ExactMatrix ambient(field, tc.dim(n - 1), tc.dim(n));
        const int tail = tc.dim(n - 1);
        for (int i0 = 0; i0 < a.dim; ++i0) {
            if (omega[i0] == 0) continue;
            const Scalar w = field->from_rational(omega[i0]);
            for (int t = 0; t < tail; ++t) ambient(t, i0 * tail + t) = w;
        }
        h.emplace(n, to_pos(n - 1, ambient * pos_basis(n)));
    }

    ExtendedComplex out;
    out.complex = std::move(complex);
    out.h = std::move(h);
    return out;
}

} // namespace qnil
