#include "goeritz.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

#include "errors.hpp"

namespace twobridge {

IntMatrix goeritz_matrix(const ColoredDiagram& col, const std::vector<int>& eta) {
    const PlanarDiagram& d = col.d;
    if (static_cast<int>(eta.size()) != d.crossing_count)
        throw std::invalid_argument("incidence vector size mismatch");

    const int w = static_cast<int>(col.whites.size());
    std::vector<int> white_index(d.face_count, -1);
    for (int i = 0; i < w; ++i) white_index[col.whites[i]] = i;

    IntMatrix full(w);
    for (int c = 0; c < d.crossing_count; ++c) {
        // The white corners sit on one diagonal of the crossing's quadrants.
        int wslot = col.black[d.corner_face[c][0]] ? 1 : 0;
        int f1 = d.corner_face[c][wslot];
        int f2 = d.corner_face[c][wslot + 2];
        if (col.black[f1] || col.black[f2])
            throw ConventionError("crossing quadrants do not alternate in color");
        if (f1 == f2) continue;
        int i = white_index[f1], j = white_index[f2];
        full.at(i, j) -= eta[c];
        full.at(j, i) -= eta[c];
    }
    for (int i = 0; i < w; ++i) {
        mpz_class s = 0;
        for (int j = 0; j < w; ++j)
            if (j != i) s += full.at(i, j);
        full.at(i, i) = -s;
    }

    // Delete the lowest-numbered white face (index 0 in ascending order).
    IntMatrix g(w > 0 ? w - 1 : 0);
    for (int i = 1; i < w; ++i)
        for (int j = 1; j < w; ++j)
            g.at(i - 1, j - 1) = full.at(i, j);
    return g;
}

Inertia inertia(const IntMatrix& m) {
    const int n = m.n;
    std::vector<mpq_class> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] = m.at(i, j);
    auto at = [&](int i, int j) -> mpq_class& { return a[static_cast<size_t>(i) * n + j]; };
    auto sym_swap = [&](int x, int y) {
        if (x == y) return;
        for (int j = 0; j < n; ++j) std::swap(at(x, j), at(y, j));
        for (int i = 0; i < n; ++i) std::swap(at(i, x), at(i, y));
    };

    Inertia res;
    int k = 0;
    while (k < n) {
        int pivot = -1;
        for (int l = k; l < n; ++l) {
            if (sgn(at(l, l)) != 0) {
                pivot = l;
                break;
            }
        }
        if (pivot >= 0) {
            sym_swap(k, pivot);
            (sgn(at(k, k)) > 0 ? res.n_plus : res.n_minus) += 1;
            for (int i = k + 1; i < n; ++i) {
                if (sgn(at(i, k)) == 0) continue;
                mpq_class f = at(i, k) / at(k, k);
                for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
            }
            ++k;
            continue;
        }
        // Every remaining diagonal entry is zero.
        int c = -1;
        for (int j = k + 1; j < n; ++j) {
            if (sgn(at(k, j)) != 0) {
                c = j;
                break;
            }
        }
        if (c < 0) {
            // Row k is zero on the active block.
            ++res.n_zero;
            ++k;
            continue;
        }
        sym_swap(c, k + 1);
        // Hyperbolic block [[0, b], [b, 0]]: one positive, one negative.
        mpq_class b = at(k, k + 1);
        for (int i = k + 2; i < n; ++i) {
            mpq_class u = at(i, k), v = at(i, k + 1);
            if (sgn(u) == 0 && sgn(v) == 0) continue;
            for (int j = k + 2; j < n; ++j)
                at(i, j) -= (v / b) * at(k, j) + (u / b) * at(k + 1, j);
        }
        ++res.n_plus;
        ++res.n_minus;
        k += 2;
    }
    assert(res.n_plus + res.n_minus + res.n_zero == n);
    return res;
}

long long matrix_signature(const IntMatrix& m) {
    Inertia in = inertia(m);
    return static_cast<long long>(in.n_plus) - in.n_minus;
}

mpz_class determinant(const IntMatrix& m) {
    const int n = m.n;
    if (n == 0) return 1;
    IntMatrix w = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i) {
                if (w.at(i, k) != 0) {
                    r = i;
                    break;
                }
            }
            if (r < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                assert(r == 0);
                w.at(i, j) = q;
            }
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

long long conway_closed_form_sign(const Conway& c) {
    if (c.empty() || c.size() % 2 == 0)
        throw std::invalid_argument("closed form needs an odd-length twist vector");
    long long even_sum = 0;
    for (size_t i = 1; i < c.size(); i += 2) even_sum += std::llabs(c[i]);
    int s1 = c[0] > 0 ? 1 : -1;
    return -s1 * (even_sum + 1);
}

}  // namespace twobridge
