#include "cliffver/cech.hpp"

#include <algorithm>
#include <cmath>

namespace cliffver {

void SimplicialComplex::build_index() {
    edge_index.clear();
    triangle_index.clear();
    for (size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = static_cast<int>(i);
    for (size_t i = 0; i < triangles.size(); ++i) triangle_index[triangles[i]] = static_cast<int>(i);
}

void SimplicialComplex::validate() const {
    auto check_sorted = [](auto& s) {
        for (size_t i = 1; i < s.size(); ++i)
            if (s[i] <= s[i - 1]) throw std::invalid_argument("simplex vertices must be strictly sorted");
    };
    for (const auto& e : edges) {
        check_sorted(e);
        if (e[1] >= nvertices) throw std::invalid_argument("edge vertex out of range");
    }
    for (const auto& t : triangles) {
        check_sorted(t);
        for (int omit = 0; omit < 3; ++omit) {
            std::array<int, 2> face;
            int p = 0;
            for (int i = 0; i < 3; ++i)
                if (i != omit) face[p++] = t[i];
            if (!edge_index.count(face))
                throw std::invalid_argument("triangle face missing from edge list");
        }
    }
    for (const auto& t : tetrahedra) {
        check_sorted(t);
        for (int omit = 0; omit < 4; ++omit) {
            std::array<int, 3> face;
            int p = 0;
            for (int i = 0; i < 4; ++i)
                if (i != omit) face[p++] = t[i];
            if (!triangle_index.count(face))
                throw std::invalid_argument("tetrahedron face missing from triangle list");
        }
    }
}

int SimplicialComplex::simplex_count(int k) const {
    switch (k) {
        case 0: return nvertices;
        case 1: return static_cast<int>(edges.size());
        case 2: return static_cast<int>(triangles.size());
        case 3: return static_cast<int>(tetrahedra.size());
        default: return 0;
    }
}

IMat SimplicialComplex::coboundary(int k) const {
    IMat d = IMat::Zero(simplex_count(k + 1), simplex_count(k));
    if (k == 0) {
        for (size_t e = 0; e < edges.size(); ++e) {
            d(static_cast<Eigen::Index>(e), edges[e][0]) = -1;
            d(static_cast<Eigen::Index>(e), edges[e][1]) = 1;
        }
    } else if (k == 1) {
        for (size_t t = 0; t < triangles.size(); ++t) {
            const auto& tri = triangles[t];
            std::array<std::array<int, 2>, 3> faces = {{{tri[1], tri[2]}, {tri[0], tri[2]}, {tri[0], tri[1]}}};
            int sign = 1;
            for (int i = 0; i < 3; ++i) {
                d(static_cast<Eigen::Index>(t), edge_index.at(faces[i])) = sign;
                sign = -sign;
            }
        }
    } else if (k == 2) {
        for (size_t t = 0; t < tetrahedra.size(); ++t) {
            const auto& tet = tetrahedra[t];
            int sign = 1;
            for (int omit = 0; omit < 4; ++omit) {
                std::array<int, 3> face;
                int p = 0;
                for (int i = 0; i < 4; ++i)
                    if (i != omit) face[p++] = tet[i];
                d(static_cast<Eigen::Index>(t), triangle_index.at(face)) = sign;
                sign = -sign;
            }
        }
    }
    return d;
}

nlohmann::json SimplicialComplex::to_json() const {
    nlohmann::json j;
    j["vertices"] = nvertices;
    j["edges"] = edges;
    j["triangles"] = triangles;
    j["tetrahedra"] = tetrahedra;
    return j;
}

SimplicialComplex SimplicialComplex::from_json(const nlohmann::json& j) {
    SimplicialComplex c;
    c.nvertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) c.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    for (const auto& t : j.at("triangles"))
        c.triangles.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    if (j.contains("tetrahedra"))
        for (const auto& t : j.at("tetrahedra"))
            c.tetrahedra.push_back(
                {t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(), t.at(3).get<int>()});
    c.build_index();
    c.validate();
    return c;
}

Cochain Cochain::reduced() const {
    Cochain out = *this;
    if (modulus != 0)
        for (auto& v : out.values) {
            v %= modulus;
            if (v < 0) v += modulus;
        }
    return out;
}

Cochain apply_coboundary(const SimplicialComplex& c, const Cochain& z) {
    IMat d = c.coboundary(z.degree);
    if (d.cols() != static_cast<Eigen::Index>(z.values.size()))
        throw std::invalid_argument("coboundary: cochain length mismatch");
    Cochain out;
    out.degree = z.degree + 1;
    out.modulus = z.modulus;
    out.values.assign(d.rows(), 0);
    for (Eigen::Index r = 0; r < d.rows(); ++r) {
        long long acc = 0;
        for (Eigen::Index cidx = 0; cidx < d.cols(); ++cidx)
            acc = checked_add(acc, checked_mul(d(r, cidx), z.values[cidx]));
        out.values[r] = acc;
    }
    return out.modulus ? out.reduced() : out;
}

bool is_closed(const SimplicialComplex& c, const Cochain& z) {
    Cochain dz = apply_coboundary(c, z);
    for (long long v : dz.values)
        if (v != 0) return false;
    return true;
}

Cochain cup_product(const SimplicialComplex& c, const Cochain& x, const Cochain& y) {
    if (x.modulus != y.modulus) throw std::invalid_argument("cup_product: coefficient mismatch");
    const int p = x.degree, q = y.degree;
    if (p + q > 3 || p < 0 || q < 0)
        throw std::invalid_argument("cup_product: unsupported degrees");
    Cochain out;
    out.degree = p + q;
    out.modulus = x.modulus;
    out.values.assign(c.simplex_count(p + q), 0);
    // front face on the first p+1 vertices, back face on the last q+1
    auto front_back = [&](const std::vector<int>& verts) {
        long long xv = 0, yv = 0;
        std::vector<int> front(verts.begin(), verts.begin() + p + 1);
        std::vector<int> back(verts.begin() + p, verts.end());
        auto value_of = [&](const Cochain& z, const std::vector<int>& s) -> long long {
            switch (z.degree) {
                case 0: return z.values[s[0]];
                case 1: return z.values[c.edge_index.at({s[0], s[1]})];
                case 2: return z.values[c.triangle_index.at({s[0], s[1], s[2]})];
                default: throw std::invalid_argument("cup_product: bad face degree");
            }
        };
        xv = value_of(x, front);
        yv = value_of(y, back);
        return checked_mul(xv, yv);
    };
    for (int i = 0; i < c.simplex_count(p + q); ++i) {
        std::vector<int> verts;
        if (p + q == 0) verts = {i};
        else if (p + q == 1) verts = {c.edges[i][0], c.edges[i][1]};
        else if (p + q == 2) verts = {c.triangles[i][0], c.triangles[i][1], c.triangles[i][2]};
        else
            verts = {c.tetrahedra[i][0], c.tetrahedra[i][1], c.tetrahedra[i][2], c.tetrahedra[i][3]};
        out.values[i] = front_back(verts);
    }
    return out.modulus ? out.reduced() : out;
}

Cochain bockstein(const SimplicialComplex& c, const Cochain& z) {
    if (z.modulus == 0) throw std::invalid_argument("bockstein: finite coefficients required");
    if (!is_closed(c, z)) throw std::invalid_argument("bockstein: input cochain is not closed");
    Cochain lift = z.reduced();
    lift.modulus = 0;  // integral lift with entries in [0, m)
    Cochain dz = apply_coboundary(c, lift);
    Cochain out;
    out.degree = z.degree + 1;
    out.modulus = 0;
    out.values.resize(dz.values.size());
    for (size_t i = 0; i < dz.values.size(); ++i) {
        if (dz.values[i] % z.modulus != 0)
            throw std::runtime_error("bockstein: lifted coboundary not divisible by modulus");
        out.values[i] = dz.values[i] / z.modulus;
    }
    return out;
}

LatticeInvariant cohomology_class(const SimplicialComplex& c, const Cochain& z) {
    if (!is_closed(c, z)) throw std::invalid_argument("cohomology_class: cochain is not closed");
    IMat dprev = c.coboundary(z.degree - 1);
    return reduce_mod_lattice(dprev, z.reduced().values, z.modulus);
}

bool is_coboundary(const SimplicialComplex& c, const Cochain& z) {
    return cohomology_class(c, z).is_zero();
}

AbelianGroup integer_cohomology(const SimplicialComplex& c, int k) {
    AbelianGroup g;
    const int nk = c.simplex_count(k);
    SmithResult below = smith_normal_form(c.coboundary(k));        // delta_k
    int rank_k = below.rank;
    int rank_prev = 0;
    std::vector<long long> tors;
    if (k > 0) {
        SmithResult prev = smith_normal_form(c.coboundary(k - 1));  // delta_{k-1}
        rank_prev = prev.rank;
        for (long long dd : prev.diagonal())
            if (dd > 1) tors.push_back(dd);
    }
    g.rank = nk - rank_k - rank_prev;
    g.torsion = tors;
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

int mod2_betti(const SimplicialComplex& c, int k) {
    const int nk = c.simplex_count(k);
    int rank_k = gf2_rank(c.coboundary(k));
    int rank_prev = (k > 0) ? gf2_rank(c.coboundary(k - 1)) : 0;
    return nk - rank_k - rank_prev;
}

std::vector<Cochain> mod2_generators(const SimplicialComplex& c, int k) {
    IMat dk = c.coboundary(k);
    auto kernel = gf2_kernel_basis(dk);
    std::vector<std::vector<int>> image_cols;
    if (k > 0) {
        IMat dp = c.coboundary(k - 1);
        for (Eigen::Index col = 0; col < dp.cols(); ++col) {
            std::vector<int> v(dp.rows());
            for (Eigen::Index r = 0; r < dp.rows(); ++r) v[r] = static_cast<int>(((dp(r, col) % 2) + 2) % 2);
            image_cols.push_back(std::move(v));
        }
    }
    // greedily keep kernel vectors independent modulo the image
    const int nk = c.simplex_count(k);
    std::vector<Cochain> gens;
    std::vector<std::vector<int>> span = image_cols;
    auto in_span = [&](const std::vector<int>& v) {
        IMat m = IMat::Zero(nk, static_cast<Eigen::Index>(span.size()));
        for (size_t j = 0; j < span.size(); ++j)
            for (int r = 0; r < nk; ++r) m(r, static_cast<Eigen::Index>(j)) = span[j][r];
        return gf2_solve(m, v).has_value();
    };
    for (const auto& v : kernel) {
        if (in_span(v)) continue;
        span.push_back(v);
        Cochain z;
        z.degree = k;
        z.modulus = 2;
        z.values.assign(v.begin(), v.end());
        gens.push_back(std::move(z));
    }
    return gens;
}

CMat TransitionData::transition(int from, int to) const {
    if (from == to) return CMat::Identity(fiber_dim(), fiber_dim());
    std::array<int, 2> key = {std::min(from, to), std::max(from, to)};
    auto it = complex.edge_index.find(key);
    if (it == complex.edge_index.end()) throw std::invalid_argument("transition: edge not in complex");
    const CMat& u = edge_unitaries[it->second];
    return (from < to) ? u : CMat(u.adjoint());
}

void TransitionData::validate(double tol) const {
    if (edge_unitaries.size() != complex.edges.size())
        throw std::invalid_argument("transition data: one unitary per edge required");
    const int n = fiber_dim();
    const CMat id = CMat::Identity(n, n);
    if ((grading * grading - id).norm() > tol)
        throw std::invalid_argument("transition data: grading is not involutive");
    for (const auto& u : edge_unitaries) {
        if (u.rows() != n || u.cols() != n)
            throw std::invalid_argument("transition data: unitary size mismatch");
        if ((u * u.adjoint() - id).norm() > 1e-8)
            throw std::invalid_argument("transition data: edge map is not unitary");
        double comm = (u * grading - grading * u).norm();
        double anti = (u * grading + grading * u).norm();
        if (std::min(comm, anti) > 1e-8)
            throw std::invalid_argument("transition data: edge map is not homogeneous");
    }
}

Cochain orientation_cocycle(const TransitionData& t, double tol) {
    t.validate(tol);
    Cochain eps;
    eps.degree = 1;
    eps.modulus = 2;
    eps.values.resize(t.complex.edges.size());
    for (size_t e = 0; e < t.complex.edges.size(); ++e) {
        const CMat& u = t.edge_unitaries[e];
        double comm = (u * t.grading - t.grading * u).norm();
        double anti = (u * t.grading + t.grading * u).norm();
        eps.values[e] = (comm <= anti) ? 0 : 1;
    }
    if (!is_closed(t.complex, eps))
        throw std::runtime_error("orientation cocycle is not closed; triple products not homogeneous");
    return eps;
}

Cochain dd_cocycle(const TransitionData& t, long long m, double tol) {
    (void)tol;
    if (m < 1) throw std::invalid_argument("dd_cocycle: modulus >= 1 required");
    Cochain lam;
    lam.degree = 2;
    lam.modulus = m;
    lam.values.resize(t.complex.triangles.size());
    const int n = t.fiber_dim();
    const CMat id = CMat::Identity(n, n);
    for (size_t ti = 0; ti < t.complex.triangles.size(); ++ti) {
        const auto& tri = t.complex.triangles[ti];
        CMat w = t.transition(tri[2], tri[0]) * t.transition(tri[1], tri[2]) * t.transition(tri[0], tri[1]);
        cd lambda = w.trace() / static_cast<double>(n);
        if ((w - lambda * id).norm() > 1e-6 * n)
            throw std::invalid_argument("dd_cocycle: triple product is not scalar");
        if (std::abs(std::abs(lambda) - 1.0) > 1e-6)
            throw std::invalid_argument("dd_cocycle: triple-product phase is not unimodular");
        double theta = std::arg(lambda) / (2.0 * M_PI);  // in turns
        long long q = std::llround(theta * static_cast<double>(m));
        cd snapped = std::exp(cd(0, 2.0 * M_PI * static_cast<double>(q) / static_cast<double>(m)));
        if (std::abs(lambda - snapped) > 1e-6)
            throw PhaseNotRootOfUnity("triple-product phase is not an m-th root of unity; raise m");
        lam.values[ti] = ((q % m) + m) % m;
    }
    if (!is_closed(t.complex, lam))
        throw std::runtime_error("dd cochain is not closed");
    return lam;
}

TransitionData graded_tensor_bundle(const TransitionData& a, const TransitionData& b, double tol) {
    (void)tol;
    if (a.complex.edges != b.complex.edges || a.complex.nvertices != b.complex.nvertices)
        throw std::invalid_argument("tensor bundle: complexes must coincide");
    Cochain eps_b = orientation_cocycle(b, tol);
    TransitionData t;
    t.complex = a.complex;
    const Eigen::Index na = a.fiber_dim(), nb = b.fiber_dim();
    auto kron = [&](const CMat& x, const CMat& y) {
        CMat out(na * nb, na * nb);
        for (Eigen::Index i = 0; i < na; ++i)
            for (Eigen::Index j = 0; j < na; ++j) out.block(i * nb, j * nb, nb, nb) = x(i, j) * y;
        return out;
    };
    t.grading = kron(a.grading, b.grading);
    for (size_t e = 0; e < a.complex.edges.size(); ++e) {
        CMat left = a.edge_unitaries[e];
        if (eps_b.values[e] % 2) left = left * a.grading;
        t.edge_unitaries.push_back(kron(left, b.edge_unitaries[e]));
    }
    return t;
}

TensorFormulaReport verify_tensor_formula(const TransitionData& a, const TransitionData& b,
                                          long long m, double tol) {
    TensorFormulaReport rep;
    rep.modulus = m;
    if (m % 2 != 0) throw std::invalid_argument("tensor formula: even modulus required");
    TransitionData ab = graded_tensor_bundle(a, b, tol);
    const SimplicialComplex& c = a.complex;

    Cochain eps_a = orientation_cocycle(a, tol);
    Cochain eps_b = orientation_cocycle(b, tol);
    Cochain eps_ab = orientation_cocycle(ab, tol);
    Cochain eps_sum = eps_a;
    for (size_t i = 0; i < eps_sum.values.size(); ++i) eps_sum.values[i] += eps_b.values[i];
    eps_sum = eps_sum.reduced();
    rep.orientation_additive =
        cohomology_class(c, eps_ab) == cohomology_class(c, eps_sum);

    Cochain lam_a = dd_cocycle(a, m, tol);
    Cochain lam_b = dd_cocycle(b, m, tol);
    Cochain lam_ab = dd_cocycle(ab, m, tol);

    Cochain cup = cup_product(c, eps_a, eps_b);  // Z_2 valued
    Cochain correction = cup;                    // embed via multiplication by m/2
    correction.modulus = m;
    for (auto& v : correction.values) v = (v % 2) * (m / 2);

    Cochain rhs = lam_a;
    for (size_t i = 0; i < rhs.values.size(); ++i)
        rhs.values[i] += lam_b.values[i] + correction.values[i];
    rhs = rhs.reduced();

    rep.dd_classes_equal = cohomology_class(c, lam_ab) == cohomology_class(c, rhs);
    rep.correction_nonzero = !cohomology_class(c, correction).is_zero();

    Cochain beta_lhs = bockstein(c, lam_ab);
    Cochain beta_a = bockstein(c, lam_a);
    Cochain beta_b = bockstein(c, lam_b);
    Cochain beta_cup = bockstein(c, correction);
    Cochain beta_rhs = beta_a;
    for (size_t i = 0; i < beta_rhs.values.size(); ++i)
        beta_rhs.values[i] += beta_b.values[i] + beta_cup.values[i];
    rep.bockstein_classes_equal =
        cohomology_class(c, beta_lhs) == cohomology_class(c, beta_rhs);
    return rep;
}

namespace {
SimplicialComplex make_complex(int nv, std::vector<std::array<int, 2>> edges,
                               std::vector<std::array<int, 3>> tris) {
    SimplicialComplex c;
    c.nvertices = nv;
    c.edges = std::move(edges);
    c.triangles = std::move(tris);
    std::sort(c.edges.begin(), c.edges.end());
    std::sort(c.triangles.begin(), c.triangles.end());
    c.build_index();
    c.validate();
    return c;
}

std::vector<std::array<int, 2>> edges_of(const std::vector<std::array<int, 3>>& tris) {
    std::vector<std::array<int, 2>> edges;
    for (const auto& t : tris) {
        edges.push_back({t[0], t[1]});
        edges.push_back({t[0], t[2]});
        edges.push_back({t[1], t[2]});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}
}  // namespace

SimplicialComplex circle_complex() {
    return make_complex(3, {{0, 1}, {0, 2}, {1, 2}}, {});
}

SimplicialComplex sphere_complex() {
    std::vector<std::array<int, 3>> tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return make_complex(4, edges_of(tris), tris);
}

SimplicialComplex rp2_complex() {
    // antipodal quotient of the icosahedron: 6 vertices, 15 edges, 10 triangles
    std::vector<std::array<int, 3>> tris = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                                            {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
    return make_complex(6, edges_of(tris), tris);
}

SimplicialComplex torus_complex() {
    // 7-vertex triangulation: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7
    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < 7; ++i) {
        std::array<int, 3> t1 = {i, (i + 1) % 7, (i + 3) % 7};
        std::array<int, 3> t2 = {i, (i + 2) % 7, (i + 3) % 7};
        std::sort(t1.begin(), t1.end());
        std::sort(t2.begin(), t2.end());
        tris.push_back(t1);
        tris.push_back(t2);
    }
    std::sort(tris.begin(), tris.end());
    tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
    return make_complex(7, edges_of(tris), tris);
}

SimplicialComplex fixture_by_name(const std::string& name) {
    if (name == "circle") return circle_complex();
    if (name == "sphere") return sphere_complex();
    if (name == "rp2") return rp2_complex();
    if (name == "torus") return torus_complex();
    throw std::invalid_argument("unknown fixture: " + name);
}

TransitionData bundle_from_orientation(const SimplicialComplex& c, const Cochain& eps) {
    if (eps.degree != 1 || eps.values.size() != c.edges.size())
        throw std::invalid_argument("bundle_from_orientation: need a 1-cochain on the complex");
    TransitionData t;
    t.complex = c;
    t.grading = CMat::Zero(2, 2);
    t.grading(0, 0) = 1.0;
    t.grading(1, 1) = -1.0;
    CMat id = CMat::Identity(2, 2);
    CMat swap = CMat::Zero(2, 2);
    swap(0, 1) = 1.0;
    swap(1, 0) = 1.0;
    for (size_t e = 0; e < c.edges.size(); ++e)
        t.edge_unitaries.push_back((eps.values[e] % 2) ? swap : id);
    return t;
}

TransitionData bundle_from_phases(const SimplicialComplex& c, const Cochain& mu, long long m) {
    if (mu.degree != 1 || mu.values.size() != c.edges.size())
        throw std::invalid_argument("bundle_from_phases: need a 1-cochain on the complex");
    TransitionData t;
    t.complex = c;
    t.grading = CMat::Zero(2, 2);
    t.grading(0, 0) = 1.0;
    t.grading(1, 1) = -1.0;
    for (size_t e = 0; e < c.edges.size(); ++e) {
        cd phase = std::exp(cd(0, 2.0 * M_PI * static_cast<double>(mu.values[e]) / static_cast<double>(m)));
        t.edge_unitaries.push_back(phase * CMat::Identity(2, 2));
    }
    return t;
}

nlohmann::json transition_data_to_json(const TransitionData& t) {
    nlohmann::json j;
    j["complex"] = t.complex.to_json();
    j["grading"] = cmat_to_json(t.grading);
    nlohmann::json edges = nlohmann::json::array();
    for (size_t e = 0; e < t.complex.edges.size(); ++e) {
        nlohmann::json rec;
        rec["edge"] = t.complex.edges[e];
        rec["unitary"] = cmat_to_json(t.edge_unitaries[e]);
        edges.push_back(std::move(rec));
    }
    j["transitions"] = edges;
    return j;
}

TransitionData transition_data_from_json(const nlohmann::json& j) {
    TransitionData t;
    t.complex = SimplicialComplex::from_json(j.at("complex"));
    t.grading = cmat_from_json(j.at("grading"));
    t.edge_unitaries.resize(t.complex.edges.size());
    std::vector<bool> seen(t.complex.edges.size(), false);
    for (const auto& rec : j.at("transitions")) {
        std::array<int, 2> e = {rec.at("edge").at(0).get<int>(), rec.at("edge").at(1).get<int>()};
        auto it = t.complex.edge_index.find(e);
        if (it == t.complex.edge_index.end())
            throw std::invalid_argument("transition for unknown edge");
        t.edge_unitaries[it->second] = cmat_from_json(rec.at("unitary"));
        seen[it->second] = true;
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("missing transition for an edge");
    t.validate();
    return t;
}

}  // namespace cliffver
