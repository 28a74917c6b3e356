#include "qnil/ncomplex.hpp"

#include <algorithm>
#include <random>

namespace qnil {

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }
} // namespace

bool HomotopyReport::identity_all() const {
    for (const auto& d : degrees)
        if (!d.identity_ok) return false;
    return true;
}

bool HomotopyReport::sum_all() const {
    for (const auto& d : degrees)
        if (d.sum_checked && !d.sum_ok) return false;
    return true;
}

bool HomotopyReport::homology_vanishes() const {
    for (const auto& h : homology)
        if (h.dim != 0) return false;
    return true;
}

// ---- NComplex ----

NComplex NComplex::z_graded(const ScalarField* field, int N, int lo,
                            std::vector<int> dims, std::vector<ExactMatrix> d) {
    if (N < 2) throw invalid_input("NComplex: N must be >= 2");
    if (dims.empty()) throw invalid_input("NComplex: empty window");
    if (d.size() + 1 != dims.size())
        throw dimension_error("NComplex: need one d matrix per adjacent degree pair");
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i].rows() != dims[i + 1] || d[i].cols() != dims[i] || d[i].field() != field)
            throw dimension_error("NComplex: d matrix shape mismatch");
    NComplex c;
    c.N_ = N;
    c.grading_ = Grading::ZGraded;
    c.lo_ = lo;
    c.hi_ = lo + static_cast<int>(dims.size()) - 1;
    c.dims_ = std::move(dims);
    c.d_ = std::move(d);
    c.field_ = field;
    return c;
}

NComplex NComplex::z_mod_n(const ScalarField* field, int N, std::vector<int> dims,
                           std::vector<ExactMatrix> d) {
    if (N < 2) throw invalid_input("NComplex: N must be >= 2");
    if (static_cast<int>(dims.size()) != N || static_cast<int>(d.size()) != N)
        throw dimension_error("NComplex: ZModN complex needs N dims and N d matrices");
    for (int p = 0; p < N; ++p)
        if (d[p].rows() != dims[mod(p + 1, N)] || d[p].cols() != dims[p] ||
            d[p].field() != field)
            throw dimension_error("NComplex: d matrix shape mismatch");
    NComplex c;
    c.N_ = N;
    c.grading_ = Grading::ZModN;
    c.lo_ = 0;
    c.hi_ = N - 1;
    c.dims_ = std::move(dims);
    c.d_ = std::move(d);
    c.field_ = field;
    return c;
}

int NComplex::dim(int n) const {
    if (grading_ == Grading::ZModN) return dims_[mod(n, N_)];
    if (n < lo_ || n > hi_) return 0;
    return dims_[n - lo_];
}

ExactMatrix NComplex::d_matrix(int n) const {
    if (grading_ == Grading::ZModN) return d_[mod(n, N_)];
    if (n >= lo_ && n < hi_) return d_[n - lo_];
    return ExactMatrix(field_, dim(n + 1), dim(n));
}

ExactMatrix NComplex::d_power(int n, int k) const {
    ExactMatrix acc = ExactMatrix::identity(field_, dim(n));
    for (int i = 0; i < k; ++i) acc = d_matrix(n + i) * acc;
    return acc;
}

bool NComplex::is_determinate(int k, int n) const {
    if (grading_ == Grading::ZModN) return true;
    return n >= lo_ && n + k <= hi_;
}

SubspaceBasis NComplex::kernel_at(int k, int n) const {
    return kernel_basis(d_power(n, k));
}

SubspaceBasis NComplex::image_at(int k, int n) const {
    return image_basis(d_power(n - (N_ - k), N_ - k));
}

ExactMatrix NComplex::flatten(std::vector<int>* offsets) const {
    if (grading_ != Grading::ZModN)
        throw invalid_input("NComplex::flatten: only ZModN complexes flatten");
    std::vector<int> off(N_ + 1, 0);
    for (int p = 0; p < N_; ++p) off[p + 1] = off[p] + dims_[p];
    const int total = off[N_];
    ExactMatrix big(field_, total, total);
    for (int p = 0; p < N_; ++p) {
        const ExactMatrix& blk = d_[p];
        const int ro = off[mod(p + 1, N_)], co = off[p];
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j) big(ro + i, co + j) = blk(i, j);
    }
    if (offsets) *offsets = std::vector<int>(off.begin(), off.end() - 1);
    return big;
}

// ---- checks ----

NilpotencyReport verify_nilpotency(const NComplex& c) {
    const int N = c.nilpotency_order();
    int from = c.lo(), to = c.hi() - N;
    if (c.grading() == Grading::ZModN) {
        from = 0;
        to = N - 1;
    }
    for (int n = from; n <= to; ++n) {
        if (!c.d_power(n, N).is_zero()) return {false, n};
    }
    return {};
}

HomologyReport homology(const NComplex& c, int k, int n) {
    const int N = c.nilpotency_order();
    if (k < 0 || k > N) throw invalid_input("homology: level k out of range");
    if (!c.is_determinate(k, n))
        throw indeterminate_error("homology: window too small at (k=" + std::to_string(k) +
                                  ", n=" + std::to_string(n) + ")");
    const SubspaceBasis K = c.kernel_at(k, n);
    const SubspaceBasis I = c.image_at(k, n);
    HomologyReport r;
    r.k = k;
    r.n = n;
    r.kernel_dim = K.dim();
    r.image_dim = I.dim();
    r.dim = quotient_dim(K, I);
    return r;
}

namespace {

struct HexNode {
    int level;
    int degree;       // flattened checks use degree 0
    SubspaceBasis K, I;
    bool determinate = true;
};

// Exactness along a chain of nodes and maps: at each interior node check
// g f = 0 and rank f + rank g = dim.
ExactnessReport chain_exactness(const std::vector<HexNode>& nodes,
                                const std::vector<std::optional<ExactMatrix>>& maps,
                                bool cyclic) {
    ExactnessReport rep;
    const int n = static_cast<int>(nodes.size());
    for (int j = 0; j < n; ++j) {
        const int in = cyclic ? mod(j - 1, n) : j - 1;
        if (in < 0 || !maps[in] || !maps[j]) continue;
        const ExactMatrix& f = *maps[in];
        const ExactMatrix& g = *maps[j];
        ExactnessNode node;
        node.level = nodes[j].level;
        node.degree = nodes[j].degree;
        node.dim = quotient_dim(nodes[j].K, nodes[j].I);
        node.rank_in = rank(f);
        node.rank_out = rank(g);
        node.composite_zero = (g * f).is_zero();
        node.exact = node.composite_zero && node.rank_in + node.rank_out == node.dim;
        if (!node.exact) rep.ok = false;
        rep.nodes.push_back(std::move(node));
    }
    return rep;
}

} // namespace

ExactnessReport hexagon_check(const NComplex& c, int l, int m) {
    const int N = c.nilpotency_order();
    if (c.grading() != Grading::ZModN)
        throw invalid_input("hexagon_check: requires a ZModN complex (use long_sequence_check)");
    if (l < 1 || m < 1 || l + m > N)
        throw invalid_input("hexagon_check: need l, m >= 1 and l + m <= N");

    const ExactMatrix D = c.flatten();
    auto subspaces = [&](int k) {
        HexNode node;
        node.level = k;
        node.degree = 0;
        node.K = kernel_basis(D.power(k));
        node.I = image_basis(D.power(N - k));
        return node;
    };

    // Cycle: H^(m) -i^l-> H^(l+m) -d^m-> H^(l) -i^{N-(l+m)}-> H^(N-m)
    //        -d^l-> H^(N-(l+m)) -i^m-> H^(N-l) -d^{N-(l+m)}-> H^(m)
    const int levels[6] = {m, l + m, l, N - m, N - (l + m), N - l};
    // power of d in the map leaving node j; 0 means an inclusion
    const int dpow[6] = {0, m, 0, l, 0, N - (l + m)};

    std::vector<HexNode> nodes;
    for (int j = 0; j < 6; ++j) nodes.push_back(subspaces(levels[j]));

    const ExactMatrix ident = ExactMatrix::identity(c.field(), D.rows());
    std::vector<std::optional<ExactMatrix>> maps(6);
    for (int j = 0; j < 6; ++j) {
        const int t = (j + 1) % 6;
        const ExactMatrix f = dpow[j] == 0 ? ident : D.power(dpow[j]);
        maps[j] = induced_map(f, nodes[j].K, nodes[j].I, nodes[t].K, nodes[t].I);
    }
    return chain_exactness(nodes, maps, /*cyclic=*/true);
}

ExactnessReport long_sequence_check(const NComplex& c, int l, int m, int p) {
    const int N = c.nilpotency_order();
    if (c.grading() != Grading::ZGraded)
        throw invalid_input("long_sequence_check: requires a ZGraded complex");
    if (l < 1 || m < 1 || l + m > N)
        throw invalid_input("long_sequence_check: need l, m >= 1 and l + m <= N");
    if (p < 0 || p > N - 1) throw invalid_input("long_sequence_check: need 0 <= p <= N-1");

    // One period of (S^{l,m}_p); deg_shift is relative to Nr+p and dpow[j]
    // is the power of d in the map leaving the j-th node (0 = inclusion).
    const int levels[6] = {m, l + m, l, N - m, N - (l + m), N - l};
    const int deg_shift[6] = {0, 0, m, m, l + m, l + m};
    const int dpow[6] = {0, m, 0, l, 0, N - (l + m)};

    std::vector<HexNode> nodes;
    const int r_lo = (c.lo() - N - p) / N - 2;
    const int r_hi = (c.hi() + N - p) / N + 2;
    for (int r = r_lo; r <= r_hi; ++r) {
        for (int j = 0; j < 6; ++j) {
            HexNode node;
            node.level = levels[j];
            node.degree = N * r + p + deg_shift[j];
            node.determinate = c.is_determinate(node.level, node.degree);
            if (node.determinate) {
                node.K = c.kernel_at(node.level, node.degree);
                node.I = c.image_at(node.level, node.degree);
            }
            nodes.push_back(std::move(node));
        }
    }

    std::vector<std::optional<ExactMatrix>> maps(nodes.size());
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
        const auto& a = nodes[j];
        const auto& b = nodes[j + 1];
        if (!a.determinate || !b.determinate) continue;
        const int pw = dpow[j % 6];
        const ExactMatrix f =
            pw == 0 ? ExactMatrix::identity(c.field(), c.dim(a.degree)) : c.d_power(a.degree, pw);
        maps[j] = induced_map(f, a.K, a.I, b.K, b.I);
    }
    return chain_exactness(nodes, maps, /*cyclic=*/false);
}

namespace {

ExactMatrix h_matrix(const NComplex& c, const std::map<int, ExactMatrix>& h, int n) {
    const int key = c.grading() == Grading::ZModN ? mod(n, c.nilpotency_order()) : n;
    auto it = h.find(key);
    if (it != h.end()) return it->second;
    return ExactMatrix(c.field(), c.dim(n - 1), c.dim(n));
}

ExactMatrix h_power(const NComplex& c, const std::map<int, ExactMatrix>& h, int n, int k) {
    // composite of k steps of h starting at degree n, descending
    ExactMatrix acc = ExactMatrix::identity(c.field(), c.dim(n));
    for (int i = 0; i < k; ++i) acc = h_matrix(c, h, n - i) * acc;
    return acc;
}

} // namespace

HomotopyReport homotopy_vanishing_check(const NComplex& c,
                                        const std::map<int, ExactMatrix>& h,
                                        const Scalar& q, int lo_check) {
    const int N = c.nilpotency_order();
    const bool cyclotomic = q.field()->mode() == FieldMode::Cyclotomic;
    HomotopyReport rep;

    int from = std::max(c.lo(), lo_check), to = c.hi() - 1;
    int sum_to = c.hi() - (N - 1);
    if (c.grading() == Grading::ZModN) {
        from = 0;
        to = N - 1;
        sum_to = N - 1;
    }

    const Scalar fact = q_factorial(N - 1, q);
    for (int n = from; n <= to; ++n) {
        HomotopyReport::DegreeCheck dc;
        dc.n = n;
        const ExactMatrix lhs =
            h_matrix(c, h, n + 1) * c.d_matrix(n) - (c.d_matrix(n - 1) * h_matrix(c, h, n)).scaled(q);
        dc.identity_ok = lhs.is_identity();
        if (cyclotomic && n <= sum_to) {
            dc.sum_checked = true;
            ExactMatrix acc(c.field(), c.dim(n), c.dim(n));
            for (int k = 0; k < N; ++k) {
                // d^{N-1-k} h^{N-1} d^k from degree n
                const ExactMatrix dk = c.d_power(n, k);
                const ExactMatrix hk = h_power(c, h, n + k, N - 1);
                const ExactMatrix dk2 = c.d_power(n + k - (N - 1), N - 1 - k);
                acc = acc + dk2 * (hk * dk);
            }
            dc.sum_ok = (acc == ExactMatrix::identity(c.field(), c.dim(n)).scaled(fact));
        }
        rep.degrees.push_back(dc);
    }

    if (cyclotomic) {
        rep.homology_checked = true;
        for (int k = 1; k <= N - 1; ++k) {
            const int hfrom = c.grading() == Grading::ZModN ? 0 : std::max(c.lo(), lo_check);
            const int hto = c.grading() == Grading::ZModN ? N - 1 : c.hi();
            for (int n = hfrom; n <= hto; ++n) {
                if (!c.is_determinate(k, n)) continue;
                rep.homology.push_back(homology(c, k, n));
            }
        }
    }
    return rep;
}

// ---- string complexes ----

namespace {

// Invertible change of basis as a product of seeded unitriangular factors.
ExactMatrix random_basis_change(const ScalarField* field, int n, std::mt19937_64& rng) {
    ExactMatrix lower = ExactMatrix::identity(field, n);
    ExactMatrix upper = ExactMatrix::identity(field, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            lower(i, j) = field->from_int(static_cast<long>(rng() % 5) - 2);
            upper(j, i) = field->from_int(static_cast<long>(rng() % 5) - 2);
        }
    return lower * upper;
}

ExactMatrix invert(const ExactMatrix& m) {
    auto sol = solve_in_span(m, ExactMatrix::identity(m.field(), m.rows()));
    if (!sol) throw error("invert: matrix is singular");
    return *sol;
}

} // namespace

NComplex string_complex(const std::vector<StringSpec>& specs, int N, Grading grading,
                        const ScalarField* field, std::uint64_t shuffle_seed) {
    if (N < 2) throw invalid_input("string_complex: N must be >= 2");
    for (const auto& s : specs)
        if (s.length < 1 || s.length > N)
            throw invalid_input("string_complex: string length must be in 1..N");

    int lo = 0, hi = N - 1, window = N;
    if (grading == Grading::ZGraded) {
        int slo = 0, shi = 0;
        if (!specs.empty()) {
            slo = specs[0].start_degree;
            shi = specs[0].start_degree + specs[0].length - 1;
            for (const auto& s : specs) {
                slo = std::min(slo, s.start_degree);
                shi = std::max(shi, s.start_degree + s.length - 1);
            }
        }
        lo = slo - N;
        hi = shi + N;
        window = hi - lo + 1;
    }

    auto degree_index = [&](int deg) {
        return grading == Grading::ZModN ? mod(deg, N) : deg - lo;
    };

    std::vector<int> dims(window, 0);
    // cell (string s, position i) lives in degree start+i
    std::vector<std::vector<std::pair<int, int>>> cells(window);
    for (std::size_t s = 0; s < specs.size(); ++s)
        for (int i = 0; i < specs[s].length; ++i) {
            const int idx = degree_index(specs[s].start_degree + i);
            cells[idx].push_back({static_cast<int>(s), i});
            ++dims[idx];
        }

    auto cell_pos = [&](int s, int i) {
        const int idx = degree_index(specs[s].start_degree + i);
        const auto& v = cells[idx];
        for (std::size_t t = 0; t < v.size(); ++t)
            if (v[t].first == s && v[t].second == i) return static_cast<int>(t);
        throw error("string_complex: internal cell lookup failure");
    };

    const int nmaps = grading == Grading::ZModN ? N : window - 1;
    std::vector<ExactMatrix> d;
    d.reserve(nmaps);
    for (int idx = 0; idx < nmaps; ++idx) {
        const int dst_idx = grading == Grading::ZModN ? mod(idx + 1, N) : idx + 1;
        ExactMatrix m(field, dims[dst_idx], dims[idx]);
        for (std::size_t col = 0; col < cells[idx].size(); ++col) {
            const auto [s, i] = cells[idx][col];
            if (i + 1 < specs[s].length)
                m(cell_pos(s, i + 1), static_cast<int>(col)) = field->one();
        }
        d.push_back(std::move(m));
    }

    if (shuffle_seed != 0) {
        std::mt19937_64 rng(shuffle_seed);
        std::vector<ExactMatrix> P, Pinv;
        for (int idx = 0; idx < window; ++idx) {
            ExactMatrix p = random_basis_change(field, dims[idx], rng);
            P.push_back(p);
            Pinv.push_back(invert(p));
        }
        for (int idx = 0; idx < nmaps; ++idx) {
            const int dst = grading == Grading::ZModN ? mod(idx + 1, N) : idx + 1;
            d[idx] = P[dst] * d[idx] * Pinv[idx];
        }
    }

    if (grading == Grading::ZModN) return NComplex::z_mod_n(field, N, dims, d);
    return NComplex::z_graded(field, N, lo, dims, d);
}

int string_homology_dim(const std::vector<StringSpec>& specs, int N, Grading grading,
                        int k, int n) {
    int count = 0;
    for (const auto& s : specs) {
        const int j = s.length;
        const int i_lo = std::max(j - k, 0);
        const int i_hi = std::min(j, N - k) - 1;
        for (int i = i_lo; i <= i_hi; ++i) {
            const int deg = s.start_degree + i;
            if (grading == Grading::ZModN ? mod(deg, N) == mod(n, N) : deg == n) ++count;
        }
    }
    return count;
}

} // namespace qnil
