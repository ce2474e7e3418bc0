#pragma once

#include "iga/types.hpp"

#include <vector>

namespace iga {

/// Univariate B-spline space on [0,1] described by an open knot vector.
struct KnotVector {
    int degree = 0;
    std::vector<double> knots;

    /// Open uniform knot vector with `spans` equal interior intervals.
    static KnotVector open_uniform(int degree, int spans);

    int num_basis() const { return static_cast<int>(knots.size()) - degree - 1; }
    int num_spans() const { return num_basis() - degree; }
    double span_size() const { return 1.0 / num_spans(); }

    /// Greville abscissa of basis function i (mean of p consecutive knots).
    double greville(int i) const;
};

/// Knot-span index s with knots[s] <= xi < knots[s+1]; xi == 1 falls in the
/// last nonempty span. Throws std::domain_error for xi outside the knot range.
int find_span(const KnotVector& kv, double xi);

struct BasisValues {
    int first;               // index of the first of the degree+1 active functions
    Eigen::RowVectorXd values;
};

struct BasisDerivatives {
    int first;
    Matrix ders;  // (order+1) x (degree+1); row r holds the r-th derivatives
};

/// Cox-de Boor evaluation of the degree+1 functions that are nonzero at xi.
BasisValues eval_basis(const KnotVector& kv, double xi);

/// Values and derivatives up to `order` of the active functions at xi.
/// Throws std::invalid_argument for order > degree.
BasisDerivatives eval_basis_derivs(const KnotVector& kv, double xi, int order);

/// Tensor product of two univariate spaces; x runs fastest in the linear index.
struct TensorBasis2D {
    KnotVector x, y;

    static TensorBasis2D uniform(int degree, int spans_x, int spans_y);

    Index ndof() const { return Index(x.num_basis()) * y.num_basis(); }
    Index linear_index(int ix, int iy) const { return ix + Index(iy) * x.num_basis(); }
};

}  // namespace iga
