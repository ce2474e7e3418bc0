#include "iga/splines.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace iga {

KnotVector KnotVector::open_uniform(int degree, int spans) {
    assert(degree >= 0 && spans >= 1);
    KnotVector kv;
    kv.degree = degree;
    kv.knots.reserve(spans + 1 + 2 * degree);
    for (int i = 0; i <= degree; ++i) kv.knots.push_back(0.0);
    for (int i = 1; i < spans; ++i) kv.knots.push_back(double(i) / spans);
    for (int i = 0; i <= degree; ++i) kv.knots.push_back(1.0);
    return kv;
}

double KnotVector::greville(int i) const {
    if (degree == 0) return 0.5 * (knots[i] + knots[i + 1]);
    double s = 0.0;
    for (int j = 1; j <= degree; ++j) s += knots[i + j];
    return s / degree;
}

int find_span(const KnotVector& kv, double xi) {
    const int n = kv.num_basis();
    const int p = kv.degree;
    if (xi < kv.knots.front() || xi > kv.knots.back())
        throw std::domain_error("find_span: point outside knot range");
    if (xi >= kv.knots[n]) return n - 1;  // right-closed last span
    // binary search over knots[p..n]
    int lo = p, hi = n;
    while (hi - lo > 1) {
        int mid = (lo + hi) / 2;
        if (xi < kv.knots[mid])
            hi = mid;
        else
            lo = mid;
    }
    return lo;
}

BasisValues eval_basis(const KnotVector& kv, double xi) {
    const int p = kv.degree;
    const int s = find_span(kv, xi);
    Eigen::RowVectorXd N(p + 1);
    N(0) = 1.0;
    std::vector<double> left(p + 1), right(p + 1);
    for (int j = 1; j <= p; ++j) {
        left[j] = xi - kv.knots[s + 1 - j];
        right[j] = kv.knots[s + j] - xi;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            double tmp = N(r) / (right[r + 1] + left[j - r]);
            N(r) = saved + right[r + 1] * tmp;
            saved = left[j - r] * tmp;
        }
        N(j) = saved;
    }
    return {s - p, std::move(N)};
}

BasisDerivatives eval_basis_derivs(const KnotVector& kv, double xi, int order) {
    const int p = kv.degree;
    if (order > p) throw std::invalid_argument("eval_basis_derivs: order exceeds degree");
    const int s = find_span(kv, xi);

    // All-orders triangle (the classic knot-difference recursion).
    Matrix ndu(p + 1, p + 1);
    ndu(0, 0) = 1.0;
    std::vector<double> left(p + 1), right(p + 1);
    for (int j = 1; j <= p; ++j) {
        left[j] = xi - kv.knots[s + 1 - j];
        right[j] = kv.knots[s + j] - xi;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            ndu(j, r) = right[r + 1] + left[j - r];
            double tmp = ndu(r, j - 1) / ndu(j, r);
            ndu(r, j) = saved + right[r + 1] * tmp;
            saved = left[j - r] * tmp;
        }
        ndu(j, j) = saved;
    }

    Matrix ders = Matrix::Zero(order + 1, p + 1);
    for (int j = 0; j <= p; ++j) ders(0, j) = ndu(j, p);

    Matrix a(2, p + 1);
    for (int r = 0; r <= p; ++r) {
        int s1 = 0, s2 = 1;
        a(0, 0) = 1.0;
        for (int k = 1; k <= order; ++k) {
            double d = 0.0;
            int rk = r - k, pk = p - k;
            if (r >= k) {
                a(s2, 0) = a(s1, 0) / ndu(pk + 1, rk);
                d = a(s2, 0) * ndu(rk, pk);
            }
            int j1 = (rk >= -1) ? 1 : -rk;
            int j2 = (r - 1 <= pk) ? k - 1 : p - r;
            for (int j = j1; j <= j2; ++j) {
                a(s2, j) = (a(s1, j) - a(s1, j - 1)) / ndu(pk + 1, rk + j);
                d += a(s2, j) * ndu(rk + j, pk);
            }
            if (r <= pk) {
                a(s2, k) = -a(s1, k - 1) / ndu(pk + 1, r);
                d += a(s2, k) * ndu(r, pk);
            }
            ders(k, r) = d;
            std::swap(s1, s2);
        }
    }
    double fac = p;
    for (int k = 1; k <= order; ++k) {
        ders.row(k) *= fac;
        fac *= (p - k);
    }
    return {s - p, std::move(ders)};
}

TensorBasis2D TensorBasis2D::uniform(int degree, int spans_x, int spans_y) {
    return {KnotVector::open_uniform(degree, spans_x), KnotVector::open_uniform(degree, spans_y)};
}

}  // namespace iga
