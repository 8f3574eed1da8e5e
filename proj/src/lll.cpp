#include "pellforge/lll.hpp"

namespace pellforge {

namespace {

Int dot(const IntRow& a, const IntRow& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct GramSchmidt {
    // mu[i][j] for j < i, and B[i] = |b*_i|^2 as exact rationals
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> B;

    void compute(const IntMat& b) {
        const size_t n = b.size();
        mu.assign(n, std::vector<Rat>(n, Rat(0)));
        B.assign(n, Rat(0));
        // b*_i = b_i - sum_{j<i} mu_ij b*_j ; represented implicitly through
        // inner products: maintain r[i][j] = <b_i, b*_j>
        std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j <= i; ++j) {
                Rat v = Rat(dot(b[i], b[j]));
                for (size_t k = 0; k < j; ++k) v -= mu[j][k] * r[i][k];
                r[i][j] = v;
                if (j < i) {
                    if (B[j] == 0) throw Error("lll: dependent rows");
                    mu[i][j] = v / B[j];
                }
            }
            B[i] = r[i][i];
            if (B[i] == 0) throw Error("lll: dependent rows");
        }
    }
};

}  // namespace

IntMat lll_reduce_rows(const IntMat& basis, IntMat* transform, const Rat& delta) {
    IntMat b = basis;
    const size_t n = b.size();
    if (n == 0) return b;
    IntMat U(n, IntRow(n, 0));
    for (size_t i = 0; i < n; ++i) U[i][i] = 1;

    GramSchmidt gs;
    gs.compute(b);

    auto size_reduce = [&](size_t k, size_t j) {
        // b_k -= round(mu_kj) b_j
        Rat m = gs.mu[k][j];
        Int q;
        // nearest integer
        Rat half(1, 2);
        Rat shifted = m + half;
        mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
        if (q == 0) return;
        for (size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[j][i];
        for (size_t i = 0; i < n; ++i) U[k][i] -= q * U[j][i];
        for (size_t i = 0; i < j; ++i) gs.mu[k][i] -= Rat(q) * gs.mu[j][i];
        gs.mu[k][j] -= Rat(q);
    };

    size_t k = 1;
    while (k < n) {
        size_reduce(k, k - 1);
        // Lovasz condition
        if (gs.B[k] >= (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1]) {
            for (size_t j = k - 1; j-- > 0;) size_reduce(k, j);
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            std::swap(U[k], U[k - 1]);
            gs.compute(b);  // exact recompute keeps this simple; dims are tiny
            if (k > 1) --k;
        }
    }
    if (transform) *transform = U;
    return b;
}

bool lll_is_reduced(const IntMat& basis, const Rat& delta) {
    GramSchmidt gs;
    gs.compute(basis);
    const size_t n = basis.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            if (abs(gs.mu[i][j]) > Rat(1, 2)) return false;
    for (size_t k = 1; k < n; ++k)
        if (gs.B[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1]) return false;
    return true;
}

}  // namespace pellforge
