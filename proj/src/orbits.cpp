#include <weilptb/orbits.hpp>

#include <algorithm>
#include <type_traits>

#include <weilptb/error.hpp>

namespace weilptb {

namespace {

using RMat = Matrix<Rational>;
using GMat = Matrix<GaussianRational>;
using QMat = Matrix<RationalQuaternion>;

template <typename T>
Matrix<T> checked_inverse(const Matrix<T> &m)
{
    auto inv = inverse(m);
    if (!inv) {
        throw Error(Errc::consistency_violation, "representative is singular");
    }
    return *inv;
}

void recurse_J(const std::vector<int> &parts, std::vector<std::vector<int>> &S, std::vector<int> &rem, int i, int j,
               std::vector<std::vector<std::vector<int>>> &out)
{
    const int r = static_cast<int>(parts.size());
    if (i == r) {
        out.push_back(S);
        return;
    }
    if (j == r) {
        if (rem[static_cast<std::size_t>(i)] == 0) {
            recurse_J(parts, S, rem, i + 1, i + 1, out);
        }
        return;
    }
    const auto iu = static_cast<std::size_t>(i);
    const auto ju = static_cast<std::size_t>(j);
    const int cap = i == j ? rem[iu] : std::min(rem[iu], rem[ju]);
    for (int v = 0; v <= cap; v += (i == j ? 2 : 1)) {
        S[iu][ju] = v;
        S[ju][iu] = v;
        rem[iu] -= v;
        if (i != j) {
            rem[ju] -= v;
        }
        recurse_J(parts, S, rem, i, j + 1, out);
        rem[iu] += v;
        if (i != j) {
            rem[ju] += v;
        }
    }
    S[iu][ju] = 0;
    S[ju][iu] = 0;
}

// Index of the unique nonzero entry of each column.
template <typename T>
std::vector<int> column_pattern(const Matrix<T> &u)
{
    std::vector<int> pi(u.cols(), -1);
    for (std::size_t q = 0; q < u.cols(); ++q) {
        for (std::size_t p = 0; p < u.rows(); ++p) {
            if (!detail::is_zero(u(p, q))) {
                if (pi[q] != -1) {
                    throw Error(Errc::consistency_violation, "sigma conjugator is not monomial");
                }
                pi[q] = static_cast<int>(p);
            }
        }
    }
    return pi;
}

// Real coordinates of a scalar.
std::vector<Rational> coords(const Rational &x)
{
    return {x};
}

std::vector<Rational> coords(const RationalQuaternion &x)
{
    return {x.a(), x.b(), x.c(), x.d()};
}

template <typename T>
T from_real(const Rational &x)
{
    if constexpr (std::is_same_v<T, RationalQuaternion>) {
        return {x, Rational(0), Rational(0), Rational(0)};
    } else {
        return x;
    }
}

// Real basis of the scalars, used to span block algebras over R.
template <typename T>
std::vector<T> scalar_basis();

template <>
std::vector<Rational> scalar_basis<Rational>()
{
    return {Rational(1)};
}

template <>
std::vector<RationalQuaternion> scalar_basis<RationalQuaternion>()
{
    return {RationalQuaternion(1), RationalQuaternion::i(), RationalQuaternion::j(), RationalQuaternion::k()};
}

// u (E_ab s) u^{-1} as the rank-one product of column a of u and row b of u^{-1}.
template <typename T>
Matrix<T> conjugate_elementary(const Matrix<T> &u, const Matrix<T> &uinv, std::size_t a, std::size_t b, const T &s)
{
    const std::size_t N = u.rows();
    Matrix<T> out(N, N);
    for (std::size_t p = 0; p < N; ++p) {
        if (detail::is_zero(u(p, a))) {
            continue;
        }
        const T left = u(p, a) * s;
        for (std::size_t q = 0; q < N; ++q) {
            if (!detail::is_zero(uinv(b, q))) {
                out(p, q) = left * uinv(b, q);
            }
        }
    }
    return out;
}

template <typename T>
std::vector<Matrix<T>> block_basis(std::size_t size, std::size_t offset, std::size_t n)
{
    std::vector<Matrix<T>> out;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (const auto &s : scalar_basis<T>()) {
                Matrix<T> e(size, size);
                e(offset + a, offset + b) = s;
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

std::vector<int> block_index(const std::vector<int> &parts)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out.insert(out.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    }
    return out;
}

template <typename T>
bool is_block_diagonal(const Matrix<T> &m, const std::vector<int> &blk)
{
    for (std::size_t p = 0; p < m.rows(); ++p) {
        for (std::size_t q = 0; q < m.cols(); ++q) {
            if (blk[p] != blk[q] && !detail::is_zero(m(p, q))) {
                return false;
            }
        }
    }
    return true;
}

template <typename T>
std::size_t real_rank(const std::vector<Matrix<T>> &mats)
{
    if (mats.empty()) {
        return 0;
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto &m : mats) {
        std::vector<Rational> row;
        for (std::size_t p = 0; p < m.rows(); ++p) {
            for (std::size_t q = 0; q < m.cols(); ++q) {
                for (auto &c : coords(m(p, q))) {
                    row.push_back(std::move(c));
                }
            }
        }
        rows.push_back(std::move(row));
    }
    RMat a(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            a(i, j) = rows[i][j];
        }
    }
    return rank(a);
}

template <typename T>
bool levi_stable_by_conjugation(const Matrix<T> &u, const PartitionSpec &spec)
{
    const Matrix<T> uinv = checked_inverse(u);
    const auto blk = block_index(spec.parts);
    const auto offs = spec.offsets();
    const auto size = static_cast<std::size_t>(spec.matrix_size());
    (void)size;
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        const auto o = static_cast<std::size_t>(offs[i]);
        const auto n = static_cast<std::size_t>(spec.parts[i]);
        for (std::size_t a = o; a < o + n; ++a) {
            for (std::size_t b = o; b < o + n; ++b) {
                for (const auto &s : scalar_basis<T>()) {
                    if (!is_block_diagonal(conjugate_elementary(u, uinv, a, b, s), blk)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// Returns c with m == c * target for a nonzero rational c, if any.
template <typename T>
bool rational_multiple(const Matrix<T> &m, const Matrix<T> &target)
{
    if (m.rows() != target.rows() || m.cols() != target.cols()) {
        return false;
    }
    for (std::size_t p = 0; p < m.rows(); ++p) {
        for (std::size_t q = 0; q < m.cols(); ++q) {
            if (detail::is_zero(target(p, q))) {
                continue;
            }
            const T c = m(p, q) * detail::scalar_inverse(target(p, q));
            const auto cc = coords(c);
            if (cc[0] == 0 || std::any_of(cc.begin() + 1, cc.end(), [](const Rational &x) { return x != 0; })) {
                return false;
            }
            return from_real<T>(cc[0]) * target == m;
        }
    }
    return false;
}

template <typename T>
BlockMap block_map_impl(const Matrix<T> &u, const OrbitMatrix &S, const Involution &varsigma)
{
    const PartitionSpec &spec = S.spec;
    const Matrix<T> uinv = checked_inverse(u);
    const auto blk = block_index(spec.parts);
    const auto offs = spec.offsets();
    const auto size = static_cast<std::size_t>(spec.matrix_size());
    BlockMap out;
    std::vector<int> image;
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        const auto ni = static_cast<std::size_t>(spec.parts[i]);
        const auto basis = block_basis<T>(size, static_cast<std::size_t>(offs[i]), ni);
        std::vector<Matrix<T>> images;
        int target = -1;
        const auto oi = static_cast<std::size_t>(offs[i]);
        const auto scalars = scalar_basis<T>();
        for (std::size_t n = 0; n < basis.size(); ++n) {
            const std::size_t a = oi + n / (ni * scalars.size());
            const std::size_t b = oi + (n / scalars.size()) % ni;
            Matrix<T> v = conjugate_elementary(u, uinv, a, b, scalars[n % scalars.size()]);
            for (std::size_t p = 0; p < size; ++p) {
                for (std::size_t q = 0; q < size; ++q) {
                    if (detail::is_zero(v(p, q))) {
                        continue;
                    }
                    if (blk[p] != blk[q] || (target != -1 && target != blk[p])) {
                        throw Error(Errc::consistency_violation, "sigma_S does not map a Levi block onto a Levi block");
                    }
                    target = blk[p];
                }
            }
            images.push_back(std::move(v));
        }
        const auto tu = static_cast<std::size_t>(target);
        if (target == -1 || spec.parts[tu] != spec.parts[i] || real_rank(images) != basis.size()) {
            throw Error(Errc::consistency_violation, "sigma_S(L_i) is not a full Levi block");
        }
        image.push_back(target);

        BlockImage bi;
        bi.target = target;
        const Matrix<T> C = u.block(static_cast<std::size_t>(offs[tu]), static_cast<std::size_t>(offs[i]), ni, ni);
        bi.conjugator = C;
        Matrix<T> stated;
        if constexpr (std::is_same_v<T, RationalQuaternion>) {
            bi.stated_form = "Psi(i)";
            stated = Matrix<T>(1, 1);
            stated(0, 0) = RationalQuaternion::i();
        } else if (ni == 1) {
            bi.stated_form = "id";
            stated = Matrix<T>::identity(1);
        } else if (target == static_cast<int>(i)) {
            bi.stated_form = "Psi((0,-1;1,0))";
            stated = Matrix<T>(2, 2);
            stated(0, 1) = T(-1);
            stated(1, 0) = T(1);
        } else {
            bi.stated_form = "Psi(J_2)";
            stated = Matrix<T>(2, 2);
            stated(0, 1) = T(1);
            stated(1, 0) = T(1);
        }
        bi.matches_stated = rational_multiple(C, stated);
        if (target == static_cast<int>(i)) {
            std::vector<Matrix<T>> diffs;
            for (std::size_t n = 0; n < basis.size(); ++n) {
                diffs.push_back(images[n] - basis[n]);
            }
            bi.fixed_dim = static_cast<int>(basis.size() - real_rank(diffs));
        }
        out.blocks.push_back(std::move(bi));
    }
    out.varsigma = Involution(image);
    if (!(out.varsigma == varsigma)) {
        throw Error(Errc::consistency_violation, "block permutation disagrees with the monomial pattern of S");
    }
    return out;
}

template <typename T>
Matrix<T> embed_block(std::size_t size, std::size_t offset, const Matrix<T> &x, Matrix<T> base)
{
    (void)size;
    base.set_block(offset, offset, x);
    return base;
}

// Complex n x n matrix of a real 2n x 2n matrix commuting with w.
GMat complexify(const RMat &Z)
{
    const std::size_t N = Z.rows();
    const std::size_t n = N / 2;
    GMat A(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            A(k, l) = GaussianRational(Z(k, l), Z(N - 1 - k, l));
        }
    }
    return A;
}

GMat complexify(const QMat &Z)
{
    GMat A(Z.rows(), Z.cols());
    for (std::size_t p = 0; p < Z.rows(); ++p) {
        for (std::size_t q = 0; q < Z.cols(); ++q) {
            if (!Z(p, q).is_complex()) {
                throw Error(Errc::sample_not_in_h, "image of Upsilon_i has a non-complex entry");
            }
            A(p, q) = GaussianRational(Z(p, q).a(), Z(p, q).b());
        }
    }
    return A;
}

RMat rmat(std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    RMat m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto &row : rows) {
        std::size_t j = 0;
        for (auto v : row) {
            m(i, j++) = Rational(static_cast<long>(v));
        }
        ++i;
    }
    return m;
}

const std::vector<std::pair<Rational, Rational>> &fixed_samples()
{
    static const std::vector<std::pair<Rational, Rational>> s{
        {Rational(3), Rational(0)},
        {Rational(1), Rational(2)},
        {Rational(0), Rational(1)},
        {Rational(2), Rational(-5)},
        {make_rational(1, 2), make_rational(-1, 3)},
    };
    return s;
}

std::vector<RMat> real_pair_samples(std::size_t n)
{
    if (n == 1) {
        RMat half(1, 1);
        half(0, 0) = make_rational(1, 2);
        return {rmat({{3}}), rmat({{-2}}), half};
    }
    return {rmat({{1, 2}, {3, 4}}), rmat({{0, 1}, {1, 0}}), rmat({{2, 0}, {0, 3}}), rmat({{1, 1}, {0, 1}}),
            rmat({{0, -1}, {1, 0}})};
}

const std::vector<RationalQuaternion> &quat_pair_samples()
{
    static const std::vector<RationalQuaternion> s{
        {1, 2, 0, 0},
        RationalQuaternion::j(),
        {1, 1, 1, 1},
        {2, 0, 0, -3},
        {make_rational(1, 2), Rational(0), Rational(1), Rational(-1)},
    };
    return s;
}

template <typename T>
void require_commutes(const Matrix<T> &a, const Matrix<T> &b)
{
    if (!(a * b == b * a)) {
        throw Error(Errc::sample_not_in_h, "sample is not fixed by the involution");
    }
}

} // namespace

void PartitionSpec::validate() const
{
    int total = 0;
    for (int p : parts) {
        if (D == DivAlg::R ? (p != 1 && p != 2) : p != 1) {
            throw Error(Errc::invalid_argument, "illegal part " + std::to_string(p) + " for D = " + to_string(D));
        }
        total += p;
    }
    if (D == DivAlg::R && total % 2 != 0) {
        throw Error(Errc::invalid_argument, "parts must add up to an even number for D = R");
    }
}

int PartitionSpec::matrix_size() const
{
    int total = 0;
    for (int p : parts) {
        total += p;
    }
    return total;
}

std::vector<int> PartitionSpec::offsets() const
{
    std::vector<int> out;
    int acc = 0;
    for (int p : parts) {
        out.push_back(acc);
        acc += p;
    }
    return out;
}

std::string scalar_tag(const ExactMatrix &m)
{
    switch (m.index()) {
    case 0:
        return "rat";
    case 1:
        return "gauss";
    default:
        return "quat";
    }
}

std::vector<OrbitMatrix> enumerate_J(const PartitionSpec &spec)
{
    spec.validate();
    const auto r = spec.parts.size();
    std::vector<std::vector<std::vector<int>>> mats;
    if (spec.D == DivAlg::R) {
        std::vector<std::vector<int>> S(r, std::vector<int>(r, 0));
        std::vector<int> rem = spec.parts;
        recurse_J(spec.parts, S, rem, 0, 0, mats);
    } else {
        for (const auto &s : all_involutions(static_cast<int>(r))) {
            std::vector<std::vector<int>> S(r, std::vector<int>(r, 0));
            for (std::size_t i = 0; i < r; ++i) {
                S[i][static_cast<std::size_t>(s(static_cast<int>(i)))] = 1;
            }
            mats.push_back(std::move(S));
        }
    }
    std::sort(mats.begin(), mats.end());
    std::vector<OrbitMatrix> out;
    out.reserve(mats.size());
    for (auto &m : mats) {
        out.push_back({spec, std::move(m)});
    }
    return out;
}

std::optional<Involution> is_monomial(const OrbitMatrix &S)
{
    const int r = S.r();
    std::vector<int> image(static_cast<std::size_t>(r), -1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            if (S.S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) {
                continue;
            }
            if (image[static_cast<std::size_t>(i)] != -1) {
                return std::nullopt;
            }
            image[static_cast<std::size_t>(i)] = j;
        }
        if (image[static_cast<std::size_t>(i)] == -1) {
            return std::nullopt;
        }
    }
    return Involution(std::move(image));
}

ExactMatrix representative_gS(const OrbitMatrix &S)
{
    const PartitionSpec &spec = S.spec;
    spec.validate();
    const auto r = static_cast<std::size_t>(S.r());
    const auto N = static_cast<std::size_t>(spec.matrix_size());
    if (spec.D == DivAlg::H) {
        const auto s = is_monomial(S);
        if (!s) {
            throw Error(Errc::invalid_argument, "orbit matrix for D = H must be a permutation matrix");
        }
        QMat g = QMat::identity(N);
        for (const auto &[i, j] : s->cycles()) {
            const auto a = static_cast<std::size_t>(i);
            const auto b = static_cast<std::size_t>(j);
            g(a, b) = RationalQuaternion(1);
            g(b, a) = RationalQuaternion::j();
            g(b, b) = -RationalQuaternion::j();
        }
        return g;
    }
    // Consecutive row-major tuples I_{i,j}, split into I^+ and I^-.
    std::vector<std::vector<std::vector<int>>> plus(r, std::vector<std::vector<int>>(r));
    std::vector<std::vector<std::vector<int>>> minus(r, std::vector<std::vector<int>>(r));
    int next = 1;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const int len = S.S[i][j];
            for (int t = 0; t < len; ++t) {
                const bool to_plus = i < j || (i == j && t < len / 2);
                (to_plus ? plus : minus)[i][j].push_back(next++);
            }
        }
    }
    std::vector<int> seq;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            seq.insert(seq.end(), plus[i][j].begin(), plus[i][j].end());
        }
    }
    for (std::size_t j = 1; j <= r; ++j) {
        for (std::size_t i = 1; i <= j; ++i) {
            const auto &t = minus[r - i][r - j];
            seq.insert(seq.end(), t.begin(), t.end());
        }
    }
    if (seq.size() != N) {
        throw Error(Errc::consistency_violation, "tuple recipe does not produce a permutation");
    }
    RMat g(N, N);
    for (std::size_t p = 0; p < N; ++p) {
        g(p, static_cast<std::size_t>(seq[p] - 1)) = 1;
    }
    return g;
}

ExactMatrix sigma_matrix(const PartitionSpec &spec)
{
    const auto N = static_cast<std::size_t>(spec.matrix_size());
    if (spec.D == DivAlg::H) {
        QMat w(N, N);
        for (std::size_t a = 0; a < N; ++a) {
            w(a, a) = RationalQuaternion::i();
        }
        return w;
    }
    const std::size_t n = N / 2;
    RMat w(N, N);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t b = n - 1 - a;
        w(a, n + b) = -1;
        w(n + a, b) = 1;
    }
    return w;
}

ExactMatrix sigma_S_conjugator(const OrbitMatrix &S)
{
    const ExactMatrix g = representative_gS(S);
    const ExactMatrix w = sigma_matrix(S.spec);
    if (S.spec.D == DivAlg::H) {
        const auto &gq = std::get<QMat>(g);
        return checked_inverse(gq) * std::get<QMat>(w) * gq;
    }
    const auto &gr = std::get<RMat>(g);
    return checked_inverse(gr) * std::get<RMat>(w) * gr;
}

bool levi_stable(const OrbitMatrix &S)
{
    const bool by_pattern = is_monomial(S).has_value();
    const ExactMatrix u = sigma_S_conjugator(S);
    const bool by_conjugation = S.spec.D == DivAlg::H ? levi_stable_by_conjugation(std::get<QMat>(u), S.spec)
                                                      : levi_stable_by_conjugation(std::get<RMat>(u), S.spec);
    if (by_pattern != by_conjugation) {
        throw Error(Errc::consistency_violation, "Levi stability disagrees with the monomial test for " + to_string(S));
    }
    return by_pattern;
}

BlockMap block_map(const OrbitMatrix &S)
{
    if (!levi_stable(S)) {
        throw Error(Errc::not_levi_stable, to_string(S) + " is not monomial");
    }
    const Involution varsigma = *is_monomial(S);
    const ExactMatrix u = sigma_S_conjugator(S);
    return S.spec.D == DivAlg::H ? block_map_impl(std::get<QMat>(u), S, varsigma)
                                 : block_map_impl(std::get<RMat>(u), S, varsigma);
}

bool chi_composite_check(const OrbitMatrix &S, int i)
{
    const auto mono = is_monomial(S);
    if (!mono) {
        throw Error(Errc::not_levi_stable, to_string(S) + " is not monomial");
    }
    const Involution &varsigma = *mono;
    if (i < 0 || i >= varsigma.size() || varsigma(i) < i) {
        throw Error(Errc::invalid_argument, "block index must satisfy i <= varsigma(i)");
    }
    const PartitionSpec &spec = S.spec;
    const auto offs = spec.offsets();
    const auto N = static_cast<std::size_t>(spec.matrix_size());
    const auto oi = static_cast<std::size_t>(offs[static_cast<std::size_t>(i)]);
    const auto oj = static_cast<std::size_t>(offs[static_cast<std::size_t>(varsigma(i))]);
    const auto ni = static_cast<std::size_t>(spec.parts[static_cast<std::size_t>(i)]);
    const ExactMatrix g_any = representative_gS(S);
    const ExactMatrix u_any = sigma_S_conjugator(S);

    if (spec.D == DivAlg::R) {
        const auto &g = std::get<RMat>(g_any);
        const auto &u = std::get<RMat>(u_any);
        const ExactMatrix w_any = sigma_matrix(spec);
        const auto &w = std::get<RMat>(w_any);
        const RMat ginv = checked_inverse(g);
        const RMat C = u.block(oj, oi, ni, ni);
        const RMat Cinv = checked_inverse(C);
        auto det_of = [&](const RMat &upsilon) {
            require_commutes(upsilon, u);
            const RMat Z = g * upsilon * ginv;
            require_commutes(Z, w);
            return determinant(complexify(Z));
        };
        if (varsigma(i) == i) {
            for (const auto &[a, b] : fixed_samples()) {
                const RMat x = a * RMat::identity(ni) + b * C;
                if (det_of(embed_block(N, oi, x, RMat::identity(N))) != GaussianRational(a, b)) {
                    return false;
                }
            }
            return true;
        }
        for (const auto &x : real_pair_samples(ni)) {
            RMat upsilon = embed_block(N, oi, x, RMat::identity(N));
            upsilon.set_block(oj, oj, C * x * Cinv);
            if (det_of(upsilon) != GaussianRational(determinant(x))) {
                return false;
            }
        }
        return true;
    }

    const auto &g = std::get<QMat>(g_any);
    const auto &u = std::get<QMat>(u_any);
    const QMat ginv = checked_inverse(g);
    const QMat C = u.block(oj, oi, 1, 1);
    const QMat Cinv = checked_inverse(C);
    auto det_of = [&](const QMat &upsilon) {
        require_commutes(upsilon, u);
        return determinant(complexify(g * upsilon * ginv));
    };
    if (varsigma(i) == i) {
        for (const auto &[a, b] : fixed_samples()) {
            QMat x(1, 1);
            x(0, 0) = RationalQuaternion(a, b, Rational(0), Rational(0));
            if (det_of(embed_block(N, oi, x, QMat::identity(N))) != GaussianRational(a, b)) {
                return false;
            }
        }
        return true;
    }
    for (const auto &q : quat_pair_samples()) {
        QMat x(1, 1);
        x(0, 0) = q;
        QMat upsilon = embed_block(N, oi, x, QMat::identity(N));
        upsilon.set_block(oj, oj, C * x * Cinv);
        if (det_of(upsilon) != GaussianRational(q.norm())) {
            return false;
        }
    }
    return true;
}

RootDatum root_datum(const OrbitMatrix &S)
{
    const ExactMatrix u = sigma_S_conjugator(S);
    const std::vector<int> pi =
        S.spec.D == DivAlg::H ? column_pattern(std::get<QMat>(u)) : column_pattern(std::get<RMat>(u));
    const auto N = pi.size();
    std::vector<std::vector<int>> sigma(N, std::vector<int>(N, 0));
    for (std::size_t q = 0; q < N; ++q) {
        sigma[static_cast<std::size_t>(pi[q])][q] = 1;
    }
    return {static_cast<int>(N), S.spec.parts, std::move(sigma)};
}

std::string to_string(const OrbitMatrix &S)
{
    std::string out = "[";
    for (std::size_t i = 0; i < S.S.size(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < S.S[i].size(); ++j) {
            out += (j ? "," : "") + std::to_string(S.S[i][j]);
        }
        out += "]";
    }
    return out + "]";
}

} // namespace weilptb
