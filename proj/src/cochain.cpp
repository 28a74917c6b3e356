#include "qnil/cochain.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qnil {

namespace {

// dim^n with a resource guard
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

// big-endian flat index of a tuple over [0, dim)
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

} // namespace

// ---- CopresimplicialSpace ----

void CopresimplicialSpace::validate() const {
    const int t = top();
    if (t < 0) throw invalid_input("CopresimplicialSpace: no levels");
    if (static_cast<int>(cofaces.size()) != t)
        throw invalid_input("CopresimplicialSpace: need cofaces for levels 0.." +
                            std::to_string(t - 1));
    for (int n = 0; n < t; ++n) {
        if (static_cast<int>(cofaces[n].size()) != n + 2)
            throw invalid_input("CopresimplicialSpace: level " + std::to_string(n) +
                                " needs cofaces f_0..f_" + std::to_string(n + 1));
        for (const auto& f : cofaces[n])
            if (f.rows() != levels[n + 1] || f.cols() != levels[n] || f.field() != field)
                throw invalid_input("CopresimplicialSpace: coface shape mismatch at level " +
                                    std::to_string(n));
    }
    // f_l f_k = f_k f_{l-1} for k < l, as maps E^n -> E^{n+2}
    for (int n = 0; n + 1 < t; ++n)
        for (int l = 1; l <= n + 2; ++l)
            for (int k = 0; k < l; ++k)
                if (cofaces[n + 1][l] * cofaces[n][k] != cofaces[n + 1][k] * cofaces[n][l - 1])
                    throw invalid_input("CopresimplicialSpace: cosimplicial identity fails at (k=" +
                                        std::to_string(k) + ", l=" + std::to_string(l) +
                                        ", n=" + std::to_string(n) + ")");
}

NComplex d_q_from_cofaces(const CopresimplicialSpace& s, const Scalar& q,
                          CofaceVariant variant, int N) {
    s.validate();
    const int t = s.top();
    std::vector<ExactMatrix> d;
    d.reserve(t);
    for (int n = 0; n < t; ++n) {
        ExactMatrix m(s.field, s.levels[n + 1], s.levels[n]);
        Scalar qk = s.field->one();
        for (int k = 0; k <= n; ++k) {
            m = m + s.cofaces[n][k].scaled(qk);
            qk = qk * q;
        }
        if (variant == CofaceVariant::Lower)
            m = m - s.cofaces[n][n + 1].scaled(q.pow(n));
        else
            m = m + s.cofaces[n][n + 1].scaled(qk);
        d.push_back(std::move(m));
    }
    return NComplex::z_graded(s.field, N, 0, s.levels, std::move(d));
}

// ---- simplicial forms ----

void SimplicialComplexSpec::validate() const {
    if (vertices.empty()) throw invalid_input("SimplicialComplexSpec: no vertices");
    if (vertices.size() > 24)
        throw invalid_input("SimplicialComplexSpec: vertex sets above 24 are not supported");
    std::set<std::string> names(vertices.begin(), vertices.end());
    if (names.size() != vertices.size())
        throw invalid_input("SimplicialComplexSpec: duplicate vertex names");
    for (const auto& f : facets) {
        if (f.empty()) throw invalid_input("SimplicialComplexSpec: facets must be non-empty");
        for (int v : f)
            if (v < 0 || v >= static_cast<int>(vertices.size()))
                throw invalid_input("SimplicialComplexSpec: facet vertex index out of range");
    }
}

namespace {

// Downward closure of the facets as a set of bitmasks.
std::set<std::uint32_t> face_masks(const SimplicialComplexSpec& k) {
    std::set<std::uint32_t> faces;
    for (const auto& f : k.facets) {
        std::uint32_t m = 0;
        for (int v : f) m |= 1u << v;
        // all non-empty submasks
        for (std::uint32_t s = m; s != 0; s = (s - 1) & m) faces.insert(s);
    }
    return faces;
}

struct OrderedSimplices {
    // level n holds all sequences of length n+1 whose vertex set is a face
    std::vector<std::vector<std::vector<int>>> seqs;
    std::vector<std::map<std::vector<int>, int>> index;
};

OrderedSimplices enumerate_ordered(const SimplicialComplexSpec& k,
                                   const std::set<std::uint32_t>& faces, int n_max,
                                   std::size_t cap) {
    OrderedSimplices out;
    out.seqs.resize(n_max + 1);
    out.index.resize(n_max + 1);
    const int nv = static_cast<int>(k.vertices.size());

    std::vector<int> seq;
    // depth-first in lexicographic order; a prefix whose set is not a face
    // cannot extend to one (faces are downward closed)
    std::function<void(std::uint32_t)> grow = [&](std::uint32_t mask) {
        const int n = static_cast<int>(seq.size()) - 1;
        if (n >= 0) {
            if (out.seqs[n].size() >= cap)
                throw cap_exceeded("simplicial_forms: level dimension exceeds cap");
            out.index[n].emplace(seq, static_cast<int>(out.seqs[n].size()));
            out.seqs[n].push_back(seq);
        }
        if (n == n_max) return;
        for (int v = 0; v < nv; ++v) {
            const std::uint32_t m2 = mask | (1u << v);
            if (!faces.count(m2)) continue;
            seq.push_back(v);
            grow(m2);
            seq.pop_back();
        }
    };
    grow(0);
    return out;
}

} // namespace

CopresimplicialSpace simplicial_cofaces(const SimplicialComplexSpec& k,
                                        const ScalarField* field, int n_max,
                                        std::size_t cap) {
    k.validate();
    const auto faces = face_masks(k);
    const auto os = enumerate_ordered(k, faces, n_max, cap);

    CopresimplicialSpace s;
    s.field = field;
    for (int n = 0; n <= n_max; ++n) s.levels.push_back(static_cast<int>(os.seqs[n].size()));
    for (int n = 0; n < n_max; ++n) {
        std::vector<ExactMatrix> fs;
        for (int kk = 0; kk <= n + 1; ++kk) {
            ExactMatrix f(field, s.levels[n + 1], s.levels[n]);
            for (std::size_t row = 0; row < os.seqs[n + 1].size(); ++row) {
                std::vector<int> omitted = os.seqs[n + 1][row];
                omitted.erase(omitted.begin() + kk);
                auto it = os.index[n].find(omitted);
                if (it != os.index[n].end())
                    f(static_cast<int>(row), it->second) = field->one();
            }
            fs.push_back(std::move(f));
        }
        s.cofaces.push_back(std::move(fs));
    }
    return s;
}

QDGA simplicial_forms(const SimplicialComplexSpec& k, const Scalar& q, int n_max, int N,
                      std::size_t cap) {
    const ScalarField* field = q.field();
    const auto faces = face_masks(k);
    k.validate();
    const auto os = enumerate_ordered(k, faces, n_max, cap);

    const CopresimplicialSpace s = simplicial_cofaces(k, field, n_max, cap);
    NComplex complex = d_q_from_cofaces(s, q, CofaceVariant::Lower, N);

    auto mask_of = [](const std::vector<int>& seq) {
        std::uint32_t m = 0;
        for (int v : seq) m |= 1u << v;
        return m;
    };

    std::map<std::pair<int, int>, ExactMatrix> products;
    for (int a = 0; a <= n_max; ++a)
        for (int b = 0; a + b <= n_max; ++b) {
            const int da = s.levels[a], db = s.levels[b];
            ExactMatrix p(field, s.levels[a + b], da * db);
            for (int i = 0; i < da; ++i) {
                const auto& sa = os.seqs[a][i];
                for (int j = 0; j < db; ++j) {
                    const auto& sb = os.seqs[b][j];
                    if (sa.back() != sb.front()) continue;
                    std::vector<int> joined = sa;
                    joined.insert(joined.end(), sb.begin() + 1, sb.end());
                    if (!faces.count(mask_of(joined))) continue;
                    p(os.index[a + b].at(joined), i * db + j) = field->one();
                }
            }
            products.emplace(std::make_pair(a, b), std::move(p));
        }

    ExactMatrix unit(field, s.levels[0], 1);
    for (int i = 0; i < s.levels[0]; ++i) unit(i, 0) = field->one();

    return QDGA(std::move(complex), q, std::move(unit), std::move(products), false);
}

// ---- Hochschild ----

void BimoduleSpec::validate(const AlgebraSpec& a) const {
    const int da = a.dim, dm = dim;
    if (dm <= 0) throw invalid_input("BimoduleSpec: dimension must be positive");
    if (left.size() != static_cast<std::size_t>(da) * dm * dm ||
        right.size() != static_cast<std::size_t>(dm) * da * dm)
        throw invalid_input("BimoduleSpec: action tensor has wrong size");

    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int m = 0; m < dm; ++m)
                for (int l = 0; l < dm; ++l) {
                    mpq_class lhs = 0, rhs = 0;
                    for (int t = 0; t < da; ++t) lhs += a.c(i, j, t) * this->l(t, m, l, da);
                    for (int t = 0; t < dm; ++t) rhs += this->l(j, m, t, da) * this->l(i, t, l, da);
                    if (lhs != rhs)
                        throw invalid_input("BimoduleSpec: left action is not associative");
                    lhs = 0;
                    rhs = 0;
                    for (int t = 0; t < da; ++t) lhs += a.c(i, j, t) * this->r(m, t, l, da);
                    for (int t = 0; t < dm; ++t) rhs += this->r(m, i, t, da) * this->r(t, j, l, da);
                    if (lhs != rhs)
                        throw invalid_input("BimoduleSpec: right action is not associative");
                    lhs = 0;
                    rhs = 0;
                    for (int t = 0; t < dm; ++t) lhs += this->l(i, m, t, da) * this->r(t, j, l, da);
                    for (int t = 0; t < dm; ++t) rhs += this->r(m, j, t, da) * this->l(i, t, l, da);
                    if (lhs != rhs)
                        throw invalid_input("BimoduleSpec: actions do not commute");
                }
    for (int m = 0; m < dm; ++m)
        for (int l = 0; l < dm; ++l) {
            mpq_class lu = 0, ru = 0;
            for (int i = 0; i < da; ++i) {
                lu += a.unit[i] * this->l(i, m, l, da);
                ru += a.unit[i] * this->r(m, i, l, da);
            }
            const mpq_class expect = (m == l) ? 1 : 0;
            if (lu != expect || ru != expect)
                throw invalid_input("BimoduleSpec: unit does not act as identity");
        }
}

BimoduleSpec BimoduleSpec::regular(const AlgebraSpec& a) {
    BimoduleSpec m;
    m.dim = a.dim;
    m.left = a.sc;
    m.right = a.sc;
    return m;
}

namespace {

// delta_q assembled directly from its three-term formula.
std::vector<ExactMatrix> hochschild_differentials(const AlgebraSpec& a, const BimoduleSpec& mm,
                                                  const Scalar& q, int n_max,
                                                  std::size_t cap) {
    const ScalarField* field = q.field();
    const int da = a.dim, dm = mm.dim;
    std::vector<int> adim(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        adim[n] = tuple_count(da, n, cap, "hochschild");
        if (static_cast<std::size_t>(adim[n]) * dm > cap)
            throw cap_exceeded("hochschild: level dimension exceeds cap");
    }

    std::vector<ExactMatrix> d;
    for (int n = 0; n < n_max; ++n) {
        ExactMatrix m(field, adim[n + 1] * dm, adim[n] * dm);
        const Scalar qn = q.pow(n);
        std::vector<int> x(n + 1, 0); // argument tuple of delta(omega)
        do {
            const int xf = flat_index(x, da);
            // x_0 . omega(x_1..x_n)
            {
                const int af = flat_index(std::vector<int>(x.begin() + 1, x.end()), da);
                for (int j = 0; j < dm; ++j)
                    for (int kk = 0; kk < dm; ++kk) {
                        const mpq_class& coef = mm.l(x[0], j, kk, da);
                        if (coef == 0) continue;
                        m(xf * dm + kk, af * dm + j) =
                            m(xf * dm + kk, af * dm + j) + field->from_rational(coef);
                    }
            }
            // + sum_k q^k omega(x_0,..,x_{k-1}x_k,..,x_n)
            for (int kk = 1; kk <= n; ++kk) {
                const Scalar qk = q.pow(kk);
                std::vector<int> merged(x.begin(), x.end());
                merged.erase(merged.begin() + kk);
                for (int t = 0; t < da; ++t) {
                    const mpq_class& coef = a.c(x[kk - 1], x[kk], t);
                    if (coef == 0) continue;
                    merged[kk - 1] = t;
                    const int af = flat_index(merged, da);
                    const Scalar s = qk * field->from_rational(coef);
                    for (int j = 0; j < dm; ++j)
                        m(xf * dm + j, af * dm + j) = m(xf * dm + j, af * dm + j) + s;
                }
            }
            // - q^n omega(x_0..x_{n-1}) . x_n
            {
                const int af = flat_index(std::vector<int>(x.begin(), x.end() - 1), da);
                for (int j = 0; j < dm; ++j)
                    for (int kk = 0; kk < dm; ++kk) {
                        const mpq_class& coef = mm.r(j, x[n], kk, da);
                        if (coef == 0) continue;
                        m(xf * dm + kk, af * dm + j) =
                            m(xf * dm + kk, af * dm + j) - qn * field->from_rational(coef);
                    }
            }
        } while (next_tuple(x, da));
        d.push_back(std::move(m));
    }
    return d;
}

} // namespace

NComplex hochschild_complex(const AlgebraSpec& a, const BimoduleSpec& m, const Scalar& q,
                            int n_max, int N, std::size_t cap) {
    a.validate();
    m.validate(a);
    std::vector<int> dims(n_max + 1);
    for (int n = 0; n <= n_max; ++n) dims[n] = tuple_count(a.dim, n, cap, "hochschild") * m.dim;
    auto d = hochschild_differentials(a, m, q, n_max, cap);
    return NComplex::z_graded(q.field(), N, 0, std::move(dims), std::move(d));
}

QDGA hochschild_qdga(const AlgebraSpec& a, const Scalar& q, int n_max, int N,
                     std::size_t cap) {
    const BimoduleSpec reg = BimoduleSpec::regular(a);
    NComplex complex = hochschild_complex(a, reg, q, n_max, N, cap);
    const ScalarField* field = q.field();
    const int da = a.dim;

    std::vector<int> adim(n_max + 1);
    for (int n = 0; n <= n_max; ++n) adim[n] = tuple_count(da, n, cap, "hochschild");

    // cup product: (alpha beta)(x_1..x_{a+b}) = alpha(front) beta(back)
    std::map<std::pair<int, int>, ExactMatrix> products;
    for (int u = 0; u <= n_max; ++u)
        for (int v = 0; u + v <= n_max; ++v) {
            ExactMatrix p(field, adim[u + v] * da, adim[u] * da * adim[v] * da);
            for (int au = 0; au < adim[u]; ++au)
                for (int av = 0; av < adim[v]; ++av) {
                    const int cat = au * adim[v] + av; // big-endian concat index
                    for (int i = 0; i < da; ++i)
                        for (int j = 0; j < da; ++j) {
                            const int col = (au * da + i) * adim[v] * da + (av * da + j);
                            for (int kk = 0; kk < da; ++kk) {
                                const mpq_class& coef = a.c(i, j, kk);
                                if (coef == 0) continue;
                                p(cat * da + kk, col) = field->from_rational(coef);
                            }
                        }
                }
            products.emplace(std::make_pair(u, v), std::move(p));
        }

    ExactMatrix unit(field, da, 1);
    for (int i = 0; i < da; ++i) unit(i, 0) = field->from_rational(a.unit[i]);

    return QDGA(std::move(complex), q, std::move(unit), std::move(products), false);
}

CopresimplicialSpace hochschild_cofaces(const AlgebraSpec& a, const BimoduleSpec& mm,
                                        const ScalarField* field, int n_max,
                                        std::size_t cap) {
    a.validate();
    mm.validate(a);
    const int da = a.dim, dm = mm.dim;

    CopresimplicialSpace s;
    s.field = field;
    std::vector<int> adim(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        adim[n] = tuple_count(da, n, cap, "hochschild_cofaces");
        s.levels.push_back(adim[n] * dm);
    }
    for (int n = 0; n < n_max; ++n) {
        std::vector<ExactMatrix> fs(n + 2, ExactMatrix(field, s.levels[n + 1], s.levels[n]));
        std::vector<int> x(n + 1, 0);
        do {
            const int xf = flat_index(x, da);
            { // f_0: x_0 . omega(x_1..x_n)
                const int af = flat_index(std::vector<int>(x.begin() + 1, x.end()), da);
                for (int j = 0; j < dm; ++j)
                    for (int kk = 0; kk < dm; ++kk) {
                        const mpq_class& coef = mm.l(x[0], j, kk, da);
                        if (coef != 0)
                            fs[0](xf * dm + kk, af * dm + j) = field->from_rational(coef);
                    }
            }
            for (int kk = 1; kk <= n; ++kk) { // f_k: merge arguments k-1, k
                std::vector<int> merged(x.begin(), x.end());
                merged.erase(merged.begin() + kk);
                for (int t = 0; t < da; ++t) {
                    const mpq_class& coef = a.c(x[kk - 1], x[kk], t);
                    if (coef == 0) continue;
                    merged[kk - 1] = t;
                    const int af = flat_index(merged, da);
                    for (int j = 0; j < dm; ++j)
                        fs[kk](xf * dm + j, af * dm + j) = field->from_rational(coef);
                }
            }
            { // f_{n+1}: omega(x_0..x_{n-1}) . x_n
                const int af = flat_index(std::vector<int>(x.begin(), x.end() - 1), da);
                for (int j = 0; j < dm; ++j)
                    for (int kk = 0; kk < dm; ++kk) {
                        const mpq_class& coef = mm.r(j, x[n], kk, da);
                        if (coef != 0)
                            fs[n + 1](xf * dm + kk, af * dm + j) = field->from_rational(coef);
                    }
            }
        } while (next_tuple(x, da));
        s.cofaces.push_back(std::move(fs));
    }
    return s;
}

// ---- dual of the product ----

DualProductComplex dual_product_complex(const AlgebraSpec& a, const Scalar& q, int n_max,
                                        int N, std::size_t cap) {
    a.validate();
    const ScalarField* field = q.field();
    const int da = a.dim;
    std::vector<int> dims(n_max + 1);
    for (int n = 0; n <= n_max; ++n) dims[n] = tuple_count(da, n, cap, "dual_product");

    std::vector<ExactMatrix> d;
    for (int n = 0; n < n_max; ++n) {
        ExactMatrix m(field, dims[n + 1], dims[n]);
        std::vector<int> x(n + 1, 0);
        do {
            const int xf = flat_index(x, da);
            for (int kk = 1; kk <= n; ++kk) {
                const Scalar qk = q.pow(kk - 1);
                std::vector<int> merged(x.begin(), x.end());
                merged.erase(merged.begin() + kk);
                for (int t = 0; t < da; ++t) {
                    const mpq_class& coef = a.c(x[kk - 1], x[kk], t);
                    if (coef == 0) continue;
                    merged[kk - 1] = t;
                    const int af = flat_index(merged, da);
                    m(xf, af) = m(xf, af) + qk * field->from_rational(coef);
                }
            }
        } while (next_tuple(x, da));
        d.push_back(std::move(m));
    }

    DualProductComplex out;
    out.complex = NComplex::z_graded(field, N, 0, dims, std::move(d));
    // h(omega)(x_1..x_{n-1}) = omega(1l, x_1, ..), zero on C^1
    for (int n = 2; n <= n_max; ++n) {
        ExactMatrix h(field, dims[n - 1], dims[n]);
        std::vector<int> al(n, 0);
        do {
            const mpq_class& coef = a.unit[al[0]];
            if (coef != 0) {
                const int tail = flat_index(std::vector<int>(al.begin() + 1, al.end()), da);
                h(tail, flat_index(al, da)) = field->from_rational(coef);
            }
        } while (next_tuple(al, da));
        out.h.emplace(n, std::move(h));
    }
    if (n_max >= 1) out.h.emplace(1, ExactMatrix(field, dims[0], dims[1]));
    return out;
}

CopresimplicialSpace dual_product_cofaces(const AlgebraSpec& a, const ScalarField* field,
                                          int n_max, std::size_t cap) {
    a.validate();
    if (n_max < 2)
        throw invalid_input("dual_product_cofaces: need n_max >= 2 for the degree shift");
    const int da = a.dim;

    CopresimplicialSpace s;
    s.field = field;
    for (int n = 0; n <= n_max - 2; ++n)
        s.levels.push_back(tuple_count(da, n + 2, cap, "dual_product_cofaces"));
    for (int n = 0; n + 2 < n_max; ++n) {
        std::vector<ExactMatrix> fs(n + 2, ExactMatrix(field, s.levels[n + 1], s.levels[n]));
        std::vector<int> x(n + 3, 0); // tuple for C^{n+3}
        do {
            const int xf = flat_index(x, da);
            for (int j = 0; j <= n + 1; ++j) { // f_j merges slots j, j+1
                std::vector<int> merged(x.begin(), x.end());
                merged.erase(merged.begin() + j + 1);
                for (int t = 0; t < da; ++t) {
                    const mpq_class& coef = a.c(x[j], x[j + 1], t);
                    if (coef == 0) continue;
                    merged[j] = t;
                    fs[j](xf, flat_index(merged, da)) = field->from_rational(coef);
                }
            }
        } while (next_tuple(x, da));
        s.cofaces.push_back(std::move(fs));
    }
    return s;
}

} // namespace qnil
